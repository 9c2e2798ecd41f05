from pathlib import Path

import click

from dj_decider.oracle import save_truth_table
from dj_decider.simulator import format_spectrum_csv
from dj_decider.types import OracleSpec

from .errors import FileAccessError
from .internal.config import ConfigProfile
from .options import check_agreement, compute_spectrum, engine_option, load_oracle, oracle_options


@click.command()
@oracle_options
@engine_option
@click.option(
    "-o",
    "--output",
    type=click.Path(path_type=Path),
    default=None,
    help="Write the CSV to this file instead of standard output",
)
@click.option(
    "--save-table",
    type=click.Path(path_type=Path),
    default=None,
    help="Also save the oracle in the truth-table file format",
)
@click.pass_obj  # config_profile
def spectrum(
    config_profile: ConfigProfile,
    oracle: OracleSpec,
    engine: str | None,
    output: Path | None,
    save_table: Path | None,
) -> None:
    """Print the output amplitudes psi(z) of the circuit as CSV."""
    table = load_oracle(oracle)
    engine = (engine or config_profile.engine).lower()

    if save_table is not None:
        try:
            save_truth_table(table, save_table)
        except OSError as e:
            raise FileAccessError(str(e))

    result, deviation = compute_spectrum(table, engine)
    csv = format_spectrum_csv(result)
    if output is None:
        click.echo(csv, nl=False)
    else:
        try:
            output.write_text(csv, encoding="ascii")
        except OSError as e:
            raise FileAccessError(str(e))

    # the FWHT result is written even when the cross-check fails
    check_agreement(deviation)
