"""Constructors for the indicator functions of each language class."""

import logging
import math
from functools import reduce
from typing import Sequence

import numpy as np

from dj_decider.bitstring import parity_table
from dj_decider.prng import SplitMix64, partial_shuffle
from dj_decider.types.core import MAX_WIDTH, BitString, TruthTable
from dj_decider.types.oracle import CombineOp

logger = logging.getLogger(__name__)


class OracleError(ValueError): ...


def _check_width(n: int) -> None:
    if not 1 <= n <= MAX_WIDTH:
        raise OracleError(f"width must be in [1, {MAX_WIDTH}], got {n}")


def _check_bit(name: str, value: int) -> None:
    if value not in (0, 1):
        raise OracleError(f"{name} must be 0 or 1, got {value!r}")


def _domain(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def make_constant(n: int, c: int) -> TruthTable:
    """f(x) = c: the empty language for c = 0, the saturated one for c = 1."""
    _check_width(n)
    _check_bit("c", c)
    return TruthTable(n=n, bits=np.full(1 << n, c, dtype=np.uint8))


def make_binary_periodic(n: int, m: int, c: int) -> TruthTable:
    """f(x) = c XOR x_m, with period T = 2^(m+1) over ascending x.

    `c` is the XOR constant, not the constant bit of the members: the strings
    whose bit m equals b are selected with c = 1 XOR b.
    """
    _check_width(n)
    _check_bit("c", c)
    if not 0 <= m <= n - 1:
        raise OracleError(f"bit address m must be in [0, {n - 1}], got {m}")
    bits = ((_domain(n) >> m) & 1) ^ c
    return TruthTable(n=n, bits=bits)


def make_monochromatic(n: int, k: BitString | int, c: int) -> TruthTable:
    """f(x) = k.x XOR c, the affine function whose spectrum is a single line at k."""
    _check_width(n)
    _check_bit("c", c)
    if isinstance(k, BitString):
        if k.n != n:
            raise OracleError(f"k has width {k.n}, expected {n}")
        k = k.value
    if not 0 <= k < 1 << n:
        raise OracleError(f"k must be in [0, {(1 << n) - 1}], got {k}")
    bits = parity_table(n)[_domain(n) & k] ^ c
    return TruthTable(n=n, bits=bits)


def make_random_balanced(n: int, seed: int) -> TruthTable:
    """A balanced table whose ones sit on the first half of a seeded shuffle of the domain."""
    _check_width(n)
    size = 1 << n
    ones = partial_shuffle(_domain(n), size // 2, SplitMix64(seed))
    bits = np.zeros(size, dtype=np.uint8)
    bits[ones] = 1
    logger.debug(f"Built random balanced table n={n} seed={seed}")
    return TruthTable(n=n, bits=bits)


def combine(op: CombineOp, a: TruthTable, b: TruthTable | None = None) -> TruthTable:
    """Pointwise set algebra: intersection, union, exclusive union or complement."""
    op = CombineOp(op)
    if op == CombineOp.NOT:
        if b is not None:
            raise OracleError("NOT takes a single operand")
        return TruthTable(n=a.n, bits=a.bits ^ 1)

    if b is None:
        raise OracleError(f"{op.value.upper()} takes two operands")
    if a.n != b.n:
        raise OracleError(f"operand widths differ: {a.n} and {b.n}")

    if op == CombineOp.AND:
        bits = a.bits & b.bits
    elif op == CombineOp.OR:
        bits = np.maximum(a.bits, b.bits)
    else:
        bits = a.bits ^ b.bits
    return TruthTable(n=a.n, bits=bits)


def perfect_square_layer(n: int) -> TruthTable:
    """Layer of the perfect-squares language: constant 1 if n is a perfect square, else 0."""
    _check_width(n)
    root = math.isqrt(n)
    return make_constant(n, 1 if root * root == n else 0)


def periodic_basis(n: int) -> list[TruthTable]:
    """The binary periodic atoms f_j(x) = x_j for j = 0..n-1."""
    _check_width(n)
    return [make_binary_periodic(n, j, 0) for j in range(n)]


def xor_combination(
    coefficients: Sequence[int], tables: Sequence[TruthTable]
) -> TruthTable:
    """The boolean combination a_1 f_1 XOR ... XOR a_p f_p.

    An empty selection yields the all-zero table.
    """
    if len(coefficients) != len(tables):
        raise OracleError(
            f"{len(coefficients)} coefficients given for {len(tables)} tables"
        )
    if not tables:
        raise OracleError("at least one table is needed to fix the width")
    n = tables[0].n
    for table in tables:
        if table.n != n:
            raise OracleError(f"operand widths differ: {n} and {table.n}")
    for a in coefficients:
        _check_bit("coefficient", a)

    zero = make_constant(n, 0)
    selected = [t for a, t in zip(coefficients, tables) if a]
    return reduce(lambda acc, t: combine(CombineOp.XOR, acc, t), selected, zero)


def periodic_component_string(x: BitString) -> BitString:
    """The string f_{n-1}(x)...f_0(x) of periodic-basis values at x.

    With f_j(x) = x_j this is x itself, so k.f(x) reduces to k.x.
    """
    basis = periodic_basis(x.n)
    value = 0
    for j, table in enumerate(basis):
        value |= table(x) << j
    return BitString(n=x.n, value=value)


def union_minus_intersection(tables: Sequence[TruthTable]) -> TruthTable:
    """Indicator of (union of the family) minus (intersection of the family).

    Agrees with the iterated XOR only for a family of exactly two tables.
    """
    if not tables:
        raise OracleError("the family must hold at least one table")
    union = reduce(lambda acc, t: combine(CombineOp.OR, acc, t), tables)
    intersection = reduce(lambda acc, t: combine(CombineOp.AND, acc, t), tables)
    return combine(CombineOp.AND, union, combine(CombineOp.NOT, intersection))
