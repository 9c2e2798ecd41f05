"""Oracle selection flags shared by the djctl commands that evaluate a table."""

import functools
import logging
from pathlib import Path
from typing import Any, Callable, TypeVar

import click
from pydantic import ValidationError

from dj_decider.bitstring import BitStringError
from dj_decider.oracle import OracleError, TruthTableFormatError, build
from dj_decider.settings import settings
from dj_decider.simulator import (
    ENGINES,
    EngineKind,
    EngineWidthError,
    SimulationError,
    compare_spectra,
)
from dj_decider.types import CombineOp, OracleKind, OracleSpec, Spectrum, TruthTable

from .errors import EngineDisagreementError, FileAccessError
from .internal.config import ALL_ENGINES, ConfigProfile

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

_SOURCES = {
    "constant": OracleKind.constant,
    "periodic": OracleKind.binary_periodic,
    "mono": OracleKind.monochromatic,
    "random_balanced": OracleKind.random_balanced,
    "perfect_square": OracleKind.perfect_square_layer,
}

ENGINE_CHOICES = [kind.value for kind in EngineKind] + [ALL_ENGINES]

_OPTIONS = [
    click.option("--n", "n", type=int, default=None, help="Width of the query bus"),
    click.option("--constant", is_flag=True, help="Constant oracle f(x) = c"),
    click.option(
        "--periodic", is_flag=True, help="Binary periodic oracle f(x) = c XOR x_m"
    ),
    click.option("--mono", is_flag=True, help="Monochromatic oracle f(x) = k.x XOR c"),
    click.option(
        "--random-balanced", is_flag=True, help="Seeded random balanced oracle"
    ),
    click.option(
        "--perfect-square", is_flag=True, help="Layer n of the perfect-squares language"
    ),
    click.option(
        "--input",
        "input_path",
        type=click.Path(path_type=Path),
        default=None,
        help="Truth-table file to use as the oracle",
    ),
    click.option("--m", type=int, default=None, help="Bit address of a periodic oracle"),
    click.option("--k", type=int, default=None, help="Line of a monochromatic oracle"),
    click.option(
        "--c", type=click.IntRange(0, 1), default=None, help="Constant bit, default 0"
    ),
    click.option(
        "--seed",
        type=int,
        default=None,
        help="Seed of a random balanced oracle, defaults to the profile seed",
    ),
    click.option(
        "--combine",
        type=click.Choice([op.value for op in CombineOp], case_sensitive=False),
        default=None,
        help="Combine the selected oracle with --other (not takes no operand)",
    ),
    click.option(
        "--other",
        type=click.Path(path_type=Path),
        default=None,
        help="Truth-table file used as the right operand of --combine",
    ),
]


def _profile() -> ConfigProfile:
    obj = click.get_current_context().find_object(ConfigProfile)
    return obj if obj is not None else ConfigProfile()


def _validation_message(e: ValidationError) -> str:
    return "; ".join(error["msg"] for error in e.errors())


def oracle_spec_from_flags(
    n: int | None,
    sources: dict[str, bool],
    input_path: Path | None,
    m: int | None,
    k: int | None,
    c: int | None,
    seed: int | None,
    combine: str | None,
    other: Path | None,
) -> OracleSpec:
    """Turn the oracle selection flags into an OracleSpec.

    Raises:
        click.UsageError: If not exactly one source is selected or the
            parameters do not fit the selected kind.
    """
    chosen = [name for name, selected in sources.items() if selected]
    if input_path is not None:
        chosen.append("input")
    if len(chosen) != 1:
        raise click.UsageError(
            "Select exactly one oracle source: --constant, --periodic, --mono, "
            "--random-balanced, --perfect-square or --input."
        )
    source = chosen[0]
    flag = "--" + source.replace("_", "-")
    if source != "input" and n is None:
        raise click.UsageError(f"--n is required with {flag}.")
    if source == "periodic" and m is None:
        raise click.UsageError("--m is required with --periodic.")
    if source == "mono" and k is None:
        raise click.UsageError("--k is required with --mono.")
    if combine is None and other is not None:
        raise click.UsageError("--other is only used together with --combine.")

    params: dict[str, Any] = {"n": n}
    if source == "input":
        params.update(kind=OracleKind.from_file, path=input_path)
    else:
        params["kind"] = _SOURCES[source]
        if source in ("constant", "periodic", "mono"):
            params["c"] = 0 if c is None else c
        if source == "periodic":
            params["m"] = m
        elif source == "mono":
            params["k"] = k
        elif source == "random_balanced":
            params["seed"] = _profile().seed if seed is None else seed

    try:
        spec = OracleSpec(**params)
        if combine is not None:
            right = (
                OracleSpec(kind=OracleKind.from_file, path=other)
                if other is not None
                else None
            )
            spec = OracleSpec(
                kind=OracleKind.combine, op=CombineOp(combine.lower()), left=spec, right=right
            )
    except ValidationError as e:
        raise click.UsageError(_validation_message(e))
    return spec


def oracle_options(func: F) -> F:
    """Add the oracle selection flags and pass the result as `oracle`."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        spec = oracle_spec_from_flags(
            n=kwargs.pop("n"),
            sources={name: kwargs.pop(name) for name in _SOURCES},
            input_path=kwargs.pop("input_path"),
            m=kwargs.pop("m"),
            k=kwargs.pop("k"),
            c=kwargs.pop("c"),
            seed=kwargs.pop("seed"),
            combine=kwargs.pop("combine"),
            other=kwargs.pop("other"),
        )
        return func(*args, oracle=spec, **kwargs)

    for option in reversed(_OPTIONS):
        wrapper = option(wrapper)
    return wrapper  # type: ignore[return-value]


def engine_option(func: F) -> F:
    return click.option(
        "-e",
        "--engine",
        type=click.Choice(ENGINE_CHOICES, case_sensitive=False),
        default=None,
        help="Spectrum engine, defaults to the profile engine",
    )(func)


def load_oracle(spec: OracleSpec) -> TruthTable:
    """Build the table, translating library errors into exit codes."""
    try:
        table = build(spec)
    except TruthTableFormatError as e:
        raise FileAccessError(f"Malformed truth-table file: {e}")
    except OSError as e:
        raise FileAccessError(str(e))
    except ValidationError as e:
        raise click.UsageError(_validation_message(e))
    except (OracleError, BitStringError) as e:
        raise click.UsageError(str(e))
    logger.debug(f"Built width-{table.n} oracle of kind {spec.kind.value}")
    return table


def compute_spectrum(table: TruthTable, engine: str) -> tuple[Spectrum, float | None]:
    """Run one engine, or all three when `engine` is `all`.

    Returns the spectrum and, for `all`, the largest deviation of the direct
    and statevector results from the FWHT result, which is the one returned.
    """
    try:
        if engine != ALL_ENGINES:
            return ENGINES[EngineKind(engine)].run(table), None

        if table.n > settings.statevector_max_width:
            raise click.UsageError(
                f"--engine all needs n <= {settings.statevector_max_width}, got {table.n}."
            )
        reference = ENGINES[EngineKind.fwht].run(table)
        deviation = max(
            compare_spectra(reference, ENGINES[kind].run(table))
            for kind in (EngineKind.direct, EngineKind.statevector)
        )
    except EngineWidthError as e:
        raise click.UsageError(str(e))
    except SimulationError as e:
        raise click.ClickException(str(e))

    logger.info(f"Largest deviation from the FWHT engine: {deviation:.3e}")
    return reference, deviation


def check_agreement(deviation: float | None) -> None:
    if deviation is not None and deviation > settings.tolerance:
        raise EngineDisagreementError(
            f"Engines disagree: max deviation {deviation:.3e} exceeds {settings.tolerance:.0e}"
        )
