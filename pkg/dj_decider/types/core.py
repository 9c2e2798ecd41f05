import sys
from typing import Any, Callable

if sys.version_info >= (3, 11):
    from typing import Self
else:  # pragma: no cover
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

MAX_WIDTH = 24


class BitString(BaseModel):
    """An n-bit string identified with its numeric meaning.

    Bit address 0 is the least significant bit, so bit `j` of `value` is the
    symbol x_j of the string x_{n-1}...x_1 x_0.

    Attributes:
        n (int):
            The bit width, between 1 and 24.
        value (int):
            The numeric meaning of the string, in [0, 2^n - 1].
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, le=MAX_WIDTH)
    value: int = Field(ge=0)

    @model_validator(mode="after")
    def check_range(self) -> Self:
        if self.value >= 1 << self.n:
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")
        return self

    @property
    def size(self) -> int:
        """The size N = 2^n of the n-bit domain."""
        return 1 << self.n

    @property
    def bits(self) -> tuple[int, ...]:
        """The bits in register order, position 0 first."""
        return tuple((self.value >> j) & 1 for j in range(self.n))

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")


class TruthTable(BaseModel):
    """Explicit indicator function f over {0,1}^n.

    Entry `x` of `bits` holds f(x), inputs in ascending numeric order. The
    array is read-only once the table is built.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int = Field(ge=1, le=MAX_WIDTH)
    bits: np.ndarray

    @field_validator("bits", mode="before")
    @classmethod
    def as_bit_array(cls, value: Any) -> np.ndarray:
        raw = np.asarray(value)
        if raw.ndim != 1:
            raise ValueError("truth table bits must be a flat sequence")
        if raw.size and not np.isin(raw, (0, 1)).all():
            raise ValueError("truth table entries must be 0 or 1")
        bits = raw.astype(np.uint8, copy=True)
        bits.flags.writeable = False
        return bits

    @model_validator(mode="after")
    def check_length(self) -> Self:
        if self.bits.size != 1 << self.n:
            raise ValueError(
                f"a width-{self.n} table holds {1 << self.n} entries, got {self.bits.size}"
            )
        return self

    @classmethod
    def from_function(cls, n: int, func: Callable[[int], int]) -> Self:
        """Tabulate `func` over every x in [0, 2^n - 1]."""
        return cls(n=n, bits=[func(x) for x in range(1 << n)])

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def ones_count(self) -> int:
        return int(self.bits.sum(dtype=np.int64))

    @property
    def signs(self) -> np.ndarray:
        """The sign vector (-1)^f(x) as int64."""
        return 1 - 2 * self.bits.astype(np.int64)

    @property
    def is_constant(self) -> bool:
        return self.ones_count in (0, self.size)

    @property
    def is_balanced(self) -> bool:
        return self.ones_count == self.size // 2

    def members(self) -> list[int]:
        """The layer L_n = {x : f(x) = 1}, ascending."""
        return [int(x) for x in np.flatnonzero(self.bits)]

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits.tolist())

    def __call__(self, x: "int | BitString") -> int:
        index = int(x)
        if not 0 <= index < self.size:
            raise ValueError(f"x must be in [0, {self.size - 1}], got {index}")
        return int(self.bits[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.bits.tobytes()))

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, bits='{self.to_string()}')"
