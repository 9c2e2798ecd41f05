from dj_decider.types.core import TruthTable
from dj_decider.types.spectrum import Spectrum

from .base import EngineKind, EngineWidthError, SimulationError, SpectrumEngine
from .direct import DirectEngine, amplitudes_direct, direct_engine
from .export import compare_spectra, format_spectrum_csv, write_spectrum_csv
from .fwht import FwhtEngine, amplitudes_fwht, fwht, fwht_engine
from .sampling import NormalizationError, sample_outcomes
from .statevector import (
    FactorizationError,
    StatevectorEngine,
    statevector_engine,
    statevector_run,
)

ENGINES: dict[EngineKind, SpectrumEngine] = {
    EngineKind.direct: direct_engine,
    EngineKind.fwht: fwht_engine,
    EngineKind.statevector: statevector_engine,
}


def run_engine(kind: EngineKind | str, table: TruthTable) -> Spectrum:
    return ENGINES[EngineKind(kind)].run(table)


__all__ = [
    "ENGINES",
    "DirectEngine",
    "EngineKind",
    "EngineWidthError",
    "FactorizationError",
    "FwhtEngine",
    "NormalizationError",
    "SimulationError",
    "SpectrumEngine",
    "StatevectorEngine",
    "amplitudes_direct",
    "amplitudes_fwht",
    "compare_spectra",
    "format_spectrum_csv",
    "fwht",
    "run_engine",
    "sample_outcomes",
    "statevector_run",
    "write_spectrum_csv",
]
