import click

from dj_decider.simulator import NormalizationError, sample_outcomes
from dj_decider.types import OracleSpec

from .internal.config import ConfigProfile
from .options import check_agreement, compute_spectrum, engine_option, load_oracle, oracle_options


@click.command()
@oracle_options
@engine_option
@click.option(
    "--shots",
    type=click.IntRange(min=1),
    default=None,
    help="Number of measurements, defaults to the profile value",
)
@click.option(
    "--shot-seed",
    type=int,
    default=None,
    help="Seed of the measurement sampler, defaults to the profile seed",
)
@click.pass_obj  # config_profile
def sample(
    config_profile: ConfigProfile,
    oracle: OracleSpec,
    engine: str | None,
    shots: int | None,
    shot_seed: int | None,
) -> None:
    """Measure the query bus repeatedly and print `z count` lines."""
    table = load_oracle(oracle)
    result, deviation = compute_spectrum(table, (engine or config_profile.engine).lower())
    check_agreement(deviation)

    try:
        histogram = sample_outcomes(
            result,
            shots or config_profile.shots,
            config_profile.seed if shot_seed is None else shot_seed,
        )
    except NormalizationError as e:
        raise click.ClickException(str(e))

    for z, hits in histogram.items():
        click.echo(f"{z} {hits}")
