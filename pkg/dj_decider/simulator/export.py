"""Spectrum CSV: header `z,amplitude,probability`, one row per z ascending,
numbers printed with 17 significant digits."""

from typing import TextIO

import numpy as np

from dj_decider.types.spectrum import Spectrum

CSV_HEADER = "z,amplitude,probability"


def format_number(value: float) -> str:
    # adding 0.0 folds -0.0 into 0.0
    return f"{float(value) + 0.0:.17g}"


def format_spectrum_csv(spectrum: Spectrum) -> str:
    rows = [CSV_HEADER]
    for z, (amplitude, probability) in enumerate(
        zip(spectrum.amplitudes.tolist(), spectrum.probabilities.tolist())
    ):
        rows.append(f"{z},{format_number(amplitude)},{format_number(probability)}")
    return "\n".join(rows) + "\n"


def write_spectrum_csv(spectrum: Spectrum, stream: TextIO) -> None:
    stream.write(format_spectrum_csv(spectrum))


def compare_spectra(a: Spectrum, b: Spectrum) -> float:
    """Largest entrywise absolute deviation between two spectra of equal width."""
    if a.n != b.n:
        raise ValueError(f"width mismatch: {a.n} and {b.n}")
    return float(np.max(np.abs(a.amplitudes - b.amplitudes)))
