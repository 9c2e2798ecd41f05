import logging
from pathlib import Path

import click

from dj_decider.oracle import describe
from dj_decider.simulator.export import format_number
from dj_decider.types import OracleSpec, Spectrum, TruthTable

from .errors import FileAccessError
from .internal.config import ConfigProfile
from .options import check_agreement, compute_spectrum, engine_option, load_oracle, oracle_options

logger = logging.getLogger(__name__)

INDICATOR_FILE = "f.dat"
SPECTRUM_FILE = "psi.dat"


def _header(n: int, label: str, columns: str) -> list[str]:
    return [f"# n={n}", f"# oracle={label}", f"# columns: {columns}"]


def format_indicator_data(table: TruthTable, label: str) -> str:
    rows = _header(table.n, label, "x f(x)")
    rows.extend(f"{x} {bit}" for x, bit in enumerate(table.bits.tolist()))
    return "\n".join(rows) + "\n"


def format_spectrum_data(spectrum: Spectrum, label: str) -> str:
    rows = _header(spectrum.n, label, "z probability")
    rows.extend(
        f"{z} {format_number(p)}" for z, p in enumerate(spectrum.probabilities.tolist())
    )
    return "\n".join(rows) + "\n"


@click.command()
@oracle_options
@engine_option
@click.option(
    "-d",
    "--output-dir",
    type=click.Path(path_type=Path),
    default=None,
    help="Directory receiving f.dat and psi.dat, defaults to the profile value",
)
@click.pass_obj  # config_profile
def emit_figure(
    config_profile: ConfigProfile,
    oracle: OracleSpec,
    engine: str | None,
    output_dir: Path | None,
) -> None:
    """Write the indicator function and the spectrum as plot-ready data."""
    table = load_oracle(oracle)
    result, deviation = compute_spectrum(table, (engine or config_profile.engine).lower())
    check_agreement(deviation)

    label = describe(oracle)
    target = output_dir if output_dir is not None else Path(config_profile.output_dir)
    try:
        target.mkdir(parents=True, exist_ok=True)
        (target / INDICATOR_FILE).write_text(
            format_indicator_data(table, label), encoding="utf-8"
        )
        (target / SPECTRUM_FILE).write_text(
            format_spectrum_data(result, label), encoding="utf-8"
        )
    except OSError as e:
        raise FileAccessError(str(e))

    logger.info(f"Figure data for {label} written to {target}")
    click.echo(f"Wrote {INDICATOR_FILE} and {SPECTRUM_FILE} to {target}")
