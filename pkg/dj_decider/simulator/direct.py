import numpy as np

from dj_decider.bitstring import parity_table
from dj_decider.settings import settings
from dj_decider.types.core import TruthTable
from dj_decider.types.spectrum import Spectrum

from .base import EngineKind, SpectrumEngine


class DirectEngine(SpectrumEngine):
    """Double summation psi(z) = 2^-n sum_x (-1)^(f(x) + x.z).

    The inner sums are carried out in int64, so every entry is an exact
    integer divided by 2^n. Rows of the character matrix are built in blocks
    of at most `chunk_elements` entries.
    """

    kind = EngineKind.direct

    def __init__(self, max_width: int, chunk_elements: int) -> None:
        super().__init__(max_width)
        self._chunk_elements = chunk_elements

    def _amplitudes(self, table: TruthTable) -> np.ndarray:
        size = table.size
        signs = table.signs
        parity = parity_table(table.n).astype(np.int64)
        xs = np.arange(size, dtype=np.int64)
        rows = max(1, self._chunk_elements // size)

        sums = np.empty(size, dtype=np.int64)
        for start in range(0, size, rows):
            zs = np.arange(start, min(start + rows, size), dtype=np.int64)
            characters = 1 - 2 * parity[np.bitwise_and.outer(zs, xs)]
            sums[start : start + zs.size] = characters @ signs
        return sums / size


direct_engine = DirectEngine(
    max_width=settings.direct_max_width, chunk_elements=settings.chunk_elements
)


def amplitudes_direct(f: TruthTable) -> Spectrum:
    return direct_engine.run(f)
