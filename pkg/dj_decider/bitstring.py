"""Conversions between n-bit strings and integers, single-bit access and the
boolean inner product.

Bit address 0 is the least significant bit throughout the package.
"""

from functools import lru_cache
from typing import Sequence

import numpy as np

from .types.core import MAX_WIDTH, BitString


class BitStringError(ValueError): ...


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_WIDTH:
        raise BitStringError(f"width must be in [1, {MAX_WIDTH}], got {n}")


def _check_address(j: int, x: BitString) -> None:
    if not 0 <= j < x.n:
        raise BitStringError(f"bit address {j} out of range for a {x.n}-bit string")


def bitstrval(bits: Sequence[int | bool]) -> int:
    """Numeric meaning of a string given as (x_0, x_1, ..., x_{n-1})."""
    _check_width(len(bits))
    value = 0
    for j, b in enumerate(bits):
        if int(b) not in (0, 1):
            raise BitStringError(f"bit {j} is {b!r}, expected 0 or 1")
        value |= int(b) << j
    return value


def bstr(n: int, x: int) -> BitString:
    """The n-bit string whose numeric meaning is x."""
    _check_width(n)
    if not 0 <= x < 1 << n:
        raise BitStringError(f"{x} is out of range for width {n}")
    return BitString(n=n, value=x)


def bitget(j: int, x: BitString) -> int:
    _check_address(j, x)
    return (x.value >> j) & 1


def bitput(j: int, x: BitString, b: int) -> BitString:
    """A copy of `x` with bit `j` set to `b`; `x` itself is left untouched."""
    _check_address(j, x)
    if b not in (0, 1):
        raise BitStringError(f"bit value must be 0 or 1, got {b!r}")
    value = (x.value & ~(1 << j)) | (b << j)
    return BitString(n=x.n, value=value)


def bool_dot(x: BitString, z: BitString) -> int:
    """Boolean inner product: parity of the population count of x AND z."""
    if x.n != z.n:
        raise BitStringError(f"width mismatch: {x.n} and {z.n}")
    return (x.value & z.value).bit_count() & 1


@lru_cache(maxsize=None)
def parity_table(n: int) -> np.ndarray:
    """Parity of the population count of every v in [0, 2^n - 1]."""
    _check_width(n)
    table = np.zeros(1, dtype=np.uint8)
    for _ in range(n):
        table = np.concatenate([table, table ^ 1])
    table.flags.writeable = False
    return table
