import logging
from typing import Iterator

import numpy as np

from dj_decider.bitstring import bstr
from dj_decider.oracle.builders import make_monochromatic
from dj_decider.settings import settings
from dj_decider.simulator.fwht import amplitudes_fwht
from dj_decider.types.analysis import Classification, SpectralLine, Verdict
from dj_decider.types.core import BitString, TruthTable
from dj_decider.types.spectrum import Spectrum

logger = logging.getLogger(__name__)


def affine_tables(n: int) -> Iterator[tuple[int, int, TruthTable]]:
    """Every table k.x XOR c at width n, as (k, c, table), k ascending then c."""
    for k in range(1 << n):
        for c in (0, 1):
            yield k, c, make_monochromatic(n, k, c)


def _monochromatic_from_spectrum(
    table: TruthTable, spectrum: Spectrum
) -> tuple[BitString, int] | None:
    amplitudes = spectrum.amplitudes
    z = int(np.argmax(np.abs(amplitudes)))
    peak = float(amplitudes[z])
    if abs(abs(peak) - 1.0) > settings.monochromatic_eps:
        return None

    k = bstr(table.n, z)
    c = 0 if peak > 0 else 1
    # the spectral shortcut is only trusted once the table matches exactly
    if make_monochromatic(table.n, k, c) != table:
        return None
    return k, c


def detect_monochromatic(f: TruthTable) -> tuple[BitString, int] | None:
    """Recover (k, c) such that f(x) = k.x XOR c, or None if f is not affine."""
    return _monochromatic_from_spectrum(f, amplitudes_fwht(f))


def dark_lines(s: Spectrum, eps: float | None = None) -> list[int]:
    """Outcomes z with |psi(z)| < eps, ascending."""
    eps = settings.dark_line_eps if eps is None else eps
    return [int(z) for z in np.flatnonzero(np.abs(s.amplitudes) < eps)]


def bright_lines(s: Spectrum, eps: float | None = None) -> list[SpectralLine]:
    eps = settings.dark_line_eps if eps is None else eps
    probabilities = s.probabilities
    return [
        SpectralLine(z=int(z), probability=float(probabilities[z]))
        for z in np.flatnonzero(np.abs(s.amplitudes) >= eps)
    ]


def classify(f: TruthTable) -> Classification:
    """Check f against the constant/balanced promise and look for a single line."""
    ones = f.ones_count
    spectrum = amplitudes_fwht(f)
    lines = bright_lines(spectrum)

    if ones in (0, f.size):
        return Classification(
            n=f.n,
            verdict=Verdict.constant,
            ones_count=ones,
            c=1 if ones else 0,
            lines=lines,
        )

    if ones != f.size // 2:
        logger.debug(f"Table with {ones} ones out of {f.size} violates the promise")
        return Classification(
            n=f.n, verdict=Verdict.unbalanced, ones_count=ones, lines=lines
        )

    found = _monochromatic_from_spectrum(f, spectrum)
    if found is None:
        return Classification(
            n=f.n, verdict=Verdict.balanced_non_affine, ones_count=ones, lines=lines
        )
    k, c = found
    return Classification(
        n=f.n, verdict=Verdict.monochromatic, ones_count=ones, k=k, c=c, lines=lines
    )
