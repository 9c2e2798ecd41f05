import logging
from abc import ABC, abstractmethod
from enum import Enum

import numpy as np

from dj_decider.types.core import TruthTable
from dj_decider.types.spectrum import Spectrum

logger = logging.getLogger(__name__)


class EngineKind(str, Enum):
    """Available engines for the output amplitudes."""

    direct = "direct"
    fwht = "fwht"
    statevector = "statevector"


class EngineWidthError(ValueError): ...


class SimulationError(RuntimeError): ...


class SpectrumEngine(ABC):
    """Base class for engines computing psi(z) from a truth table."""

    kind: EngineKind

    def __init__(self, max_width: int) -> None:
        self._max_width = max_width

    @property
    def max_width(self) -> int:
        return self._max_width

    def run(self, table: TruthTable) -> Spectrum:
        """Compute the spectrum of `table`.

        Raises:
            EngineWidthError: If the table is wider than this engine accepts.
        """
        self.check_width(table.n)
        logger.debug(f"Running {self.kind.value} engine on a width-{table.n} table")
        return Spectrum(n=table.n, amplitudes=self._amplitudes(table))

    def check_width(self, n: int) -> None:
        if n > self._max_width:
            raise EngineWidthError(
                f"the {self.kind.value} engine accepts widths up to {self._max_width}, got {n}"
            )

    @abstractmethod
    def _amplitudes(self, table: TruthTable) -> np.ndarray:  # pragma: no cover
        """Return the 2^n amplitudes, entry z holding psi(z)."""
