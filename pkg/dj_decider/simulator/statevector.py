"""Full (n+1)-qubit execution of the three-step circuit.

The register is prepared as |0...0>|1>, every qubit goes through a Hadamard,
the oracle maps |x>|y> to |x>|y XOR f(x)>, and a final Hadamard layer acts on
the query bus only. The answer qubit must come out as (|0> - |1>)/sqrt(2)
factored from the query register, which is checked after the oracle and after
the last layer.
"""

import logging
import math

import numpy as np

from dj_decider.settings import settings
from dj_decider.types.core import TruthTable
from dj_decider.types.spectrum import AnswerQubitReport, Spectrum, StateVector

from .base import EngineKind, SimulationError, SpectrumEngine

logger = logging.getLogger(__name__)

INV_SQRT2 = 1.0 / math.sqrt(2.0)


class FactorizationError(SimulationError): ...


def prepare_state(n: int) -> StateVector:
    """|0>^n (x) |1>, i.e. basis label 1 with the answer qubit on bit 0."""
    amps = np.zeros(1 << (n + 1), dtype=np.float64)
    amps[1] = 1.0
    return StateVector(n_total=n + 1, amps=amps)


def apply_hadamard(state: StateVector, qubit: int) -> None:
    if not 0 <= qubit < state.n_total:
        raise ValueError(f"qubit {qubit} out of range for {state.n_total} qubits")
    view = state.amps.reshape(-1, 2, 1 << qubit)
    low = view[:, 0, :].copy()
    high = view[:, 1, :]
    view[:, 0, :] = (low + high) * INV_SQRT2
    view[:, 1, :] = (low - high) * INV_SQRT2


def apply_oracle(state: StateVector, table: TruthTable) -> None:
    """U_f as a basis permutation: swap the answer-qubit pair wherever f(x) = 1."""
    if state.n_total != table.n + 1:
        raise ValueError(
            f"a width-{table.n} oracle needs {table.n + 1} qubits, got {state.n_total}"
        )
    pairs = state.pairs
    flip = table.bits.astype(bool)
    pairs[flip] = pairs[flip][:, ::-1]


def _check_norm(state: StateVector, tolerance: float, step: str) -> None:
    deviation = state.norm_deviation
    if deviation > tolerance:
        raise SimulationError(f"state norm drifted by {deviation:.3e} after {step}")


def _factorization_deviation(state: StateVector) -> float:
    pairs = state.pairs
    return float(np.max(np.abs(pairs[:, 0] + pairs[:, 1])))


class StatevectorEngine(SpectrumEngine):
    kind = EngineKind.statevector

    def __init__(self, max_width: int, tolerance: float) -> None:
        super().__init__(max_width)
        self._tolerance = tolerance

    def execute(self, table: TruthTable) -> tuple[Spectrum, AnswerQubitReport]:
        """Run the circuit and return the query-register spectrum with the answer-qubit report.

        Raises:
            EngineWidthError: If the table is wider than this engine accepts.
            FactorizationError: If the answer qubit does not factor out as H|1>.
        """
        self.check_width(table.n)
        n = table.n
        tol = self._tolerance
        state = prepare_state(n)

        for qubit in range(n + 1):
            apply_hadamard(state, qubit)
            _check_norm(state, tol, f"H on qubit {qubit}")

        apply_oracle(state, table)
        _check_norm(state, tol, "the oracle")
        after_oracle = _factorization_deviation(state)
        if after_oracle > tol:
            raise FactorizationError(
                f"answer qubit not factored after the oracle (deviation {after_oracle:.3e})"
            )

        for qubit in range(1, n + 1):
            apply_hadamard(state, qubit)
            _check_norm(state, tol, f"H on qubit {qubit}")

        after_output = _factorization_deviation(state)
        if after_output > tol:
            raise FactorizationError(
                f"answer qubit not factored after the output layer (deviation {after_output:.3e})"
            )

        pairs = state.pairs
        psi_out = pairs[:, 0] * math.sqrt(2.0)
        # project the answer qubit out of state[x, y] = psi_out(x) * a_y
        report = AnswerQubitReport(
            amplitude_zero=float(np.dot(pairs[:, 0], psi_out)),
            amplitude_one=float(np.dot(pairs[:, 1], psi_out)),
            deviation_after_oracle=after_oracle,
            deviation_after_output=after_output,
        )
        logger.debug(
            f"Answer qubit ({report.amplitude_zero:.17g}, {report.amplitude_one:.17g})"
        )
        return Spectrum(n=n, amplitudes=psi_out), report

    def _amplitudes(self, table: TruthTable) -> np.ndarray:
        spectrum, _ = self.execute(table)
        return spectrum.amplitudes


statevector_engine = StatevectorEngine(
    max_width=settings.statevector_max_width, tolerance=settings.tolerance
)


def statevector_run(f: TruthTable) -> tuple[Spectrum, AnswerQubitReport]:
    return statevector_engine.execute(f)
