import numpy as np

from dj_decider.settings import settings
from dj_decider.types.core import TruthTable
from dj_decider.types.spectrum import Spectrum

from .base import EngineKind, SpectrumEngine


def fwht(values: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform in natural order.

    Returns W[z] = sum_x values[x] * (-1)^(x.z) as int64; `values` is not
    modified and its length must be a power of two.
    """
    data = np.array(values, dtype=np.int64)
    size = data.size
    if size & (size - 1):
        raise ValueError(f"length must be a power of two, got {size}")
    h = 1
    while h < size:
        view = data.reshape(-1, 2, h)
        top = view[:, 0, :].copy()
        bottom = view[:, 1, :]
        view[:, 0, :] += bottom
        view[:, 1, :] = top - bottom
        h *= 2
    return data


class FwhtEngine(SpectrumEngine):
    """In-place butterfly over the sign vector, scaled by 2^-n."""

    kind = EngineKind.fwht

    def _amplitudes(self, table: TruthTable) -> np.ndarray:
        return fwht(table.signs) / table.size


fwht_engine = FwhtEngine(max_width=settings.fwht_max_width)


def amplitudes_fwht(f: TruthTable) -> Spectrum:
    return fwht_engine.run(f)
