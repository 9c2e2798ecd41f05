import sys
from typing import Any

if sys.version_info >= (3, 11):
    from typing import Self
else:  # pragma: no cover
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .core import MAX_WIDTH


def _readonly_float_array(value: Any) -> np.ndarray:
    raw = np.asarray(value)
    if raw.ndim != 1:
        raise ValueError("amplitudes must be a flat sequence")
    if np.iscomplexobj(raw):
        raise ValueError("amplitudes are real in this circuit")
    amps = raw.astype(np.float64, copy=True)
    amps.flags.writeable = False
    return amps


class Spectrum(BaseModel):
    """The output amplitudes psi(z) of the query register, z ascending.

    Attributes:
        n (int):
            Width of the query register.
        amplitudes (np.ndarray):
            The 2^n signed real amplitudes.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(ge=1, le=MAX_WIDTH)
    amplitudes: np.ndarray

    @field_validator("amplitudes", mode="before")
    @classmethod
    def as_amplitudes(cls, value: Any) -> np.ndarray:
        return _readonly_float_array(value)

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        if self.amplitudes.size != 1 << self.n:
            raise ValueError(
                f"a width-{self.n} spectrum holds {1 << self.n} amplitudes, "
                f"got {self.amplitudes.size}"
            )
        if self.amplitudes.size and np.max(np.abs(self.amplitudes)) > 1.0 + 1e-12:
            raise ValueError("amplitude magnitudes cannot exceed 1")
        return self

    @property
    def probabilities(self) -> np.ndarray:
        return self.amplitudes * self.amplitudes

    @property
    def norm_deviation(self) -> float:
        """Distance of sum |psi(z)|^2 from 1."""
        return abs(float(np.sum(self.probabilities)) - 1.0)

    def is_normalized(self, tolerance: float = 1e-12) -> bool:
        return self.norm_deviation <= tolerance

    def amplitude(self, z: int) -> float:
        return float(self.amplitudes[int(z)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Spectrum):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.amplitudes, other.amplitudes)

    def __hash__(self) -> int:
        return hash((self.n, self.amplitudes.tobytes()))


class StateVector(BaseModel):
    """Real amplitudes of the combined (n+1)-qubit register.

    Basis bit 0 is the answer qubit and basis bit j+1 is the query bit x_j, so
    `amps.reshape(-1, 2)[x, y]` is the amplitude of |x>|y>.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    n_total: int = Field(ge=2, le=MAX_WIDTH + 1)
    amps: np.ndarray

    @field_validator("amps", mode="before")
    @classmethod
    def as_amplitudes(cls, value: Any) -> np.ndarray:
        raw = np.asarray(value)
        if np.iscomplexobj(raw):
            raise ValueError("amplitudes are real in this circuit")
        return raw.astype(np.float64, copy=True)

    @model_validator(mode="after")
    def check_shape(self) -> Self:
        if self.amps.size != 1 << self.n_total:
            raise ValueError(
                f"{self.n_total} qubits need {1 << self.n_total} amplitudes, "
                f"got {self.amps.size}"
            )
        return self

    @property
    def pairs(self) -> np.ndarray:
        """View of the amplitudes indexed as [x, answer bit]."""
        return self.amps.reshape(-1, 2)

    @property
    def norm_deviation(self) -> float:
        return abs(float(np.dot(self.amps, self.amps)) - 1.0)


class AnswerQubitReport(BaseModel):
    """What the statevector engine observed on the answer qubit.

    Attributes:
        amplitude_zero (float):
            Amplitude of |0> on the answer qubit once factored out.
        amplitude_one (float):
            Amplitude of |1> on the answer qubit once factored out.
        deviation_after_oracle (float):
            Largest |state[x,0] + state[x,1]| right after the oracle.
        deviation_after_output (float):
            Largest |state[x,0] + state[x,1]| after the final Hadamards.
    """

    amplitude_zero: float
    amplitude_one: float
    deviation_after_oracle: float
    deviation_after_output: float
