from .analysis import Classification, SpectralLine, Verdict
from .core import MAX_WIDTH, BitString, TruthTable
from .oracle import CombineOp, OracleKind, OracleSpec
from .spectrum import AnswerQubitReport, Spectrum, StateVector

__all__ = [
    "MAX_WIDTH",
    "BitString",
    "TruthTable",
    "CombineOp",
    "OracleKind",
    "OracleSpec",
    "AnswerQubitReport",
    "Spectrum",
    "StateVector",
    "Classification",
    "SpectralLine",
    "Verdict",
]
