from typing import Callable

from dj_decider.types.core import TruthTable
from dj_decider.types.oracle import CombineOp, OracleKind, OracleSpec

from .builders import (
    OracleError,
    combine,
    make_binary_periodic,
    make_constant,
    make_monochromatic,
    make_random_balanced,
    perfect_square_layer,
)
from .io import load_truth_table


def _build_combination(spec: OracleSpec) -> TruthTable:
    assert spec.op is not None and spec.left is not None
    left = build(spec.left)
    right = build(spec.right) if spec.right is not None else None
    return combine(spec.op, left, right)


def _build_from_file(spec: OracleSpec) -> TruthTable:
    assert spec.path is not None
    table = load_truth_table(spec.path)
    if spec.n is not None and spec.n != table.n:
        raise OracleError(f"{spec.path} holds a width-{table.n} table, expected {spec.n}")
    return table


BUILDERS: dict[OracleKind, Callable[[OracleSpec], TruthTable]] = {
    OracleKind.constant: lambda s: make_constant(s.n, s.c),  # type: ignore[arg-type]
    OracleKind.binary_periodic: lambda s: make_binary_periodic(s.n, s.m, s.c),  # type: ignore[arg-type]
    OracleKind.monochromatic: lambda s: make_monochromatic(s.n, s.k, s.c),  # type: ignore[arg-type]
    OracleKind.random_balanced: lambda s: make_random_balanced(s.n, s.seed),  # type: ignore[arg-type]
    OracleKind.perfect_square_layer: lambda s: perfect_square_layer(s.n),  # type: ignore[arg-type]
    OracleKind.from_file: _build_from_file,
    OracleKind.combine: _build_combination,
}


def build(spec: OracleSpec) -> TruthTable:
    """Materialize the truth table an OracleSpec describes."""
    return BUILDERS[spec.kind](spec)


def describe(spec: OracleSpec) -> str:
    """Stable one-line label, e.g. `BinaryPeriodic m=1 c=1`."""
    kind = spec.kind
    if kind == OracleKind.constant:
        return f"Constant c={spec.c}"
    if kind == OracleKind.binary_periodic:
        return f"BinaryPeriodic m={spec.m} c={spec.c}"
    if kind == OracleKind.monochromatic:
        return f"Monochromatic k={spec.k} c={spec.c}"
    if kind == OracleKind.random_balanced:
        return f"RandomBalanced seed={spec.seed}"
    if kind == OracleKind.perfect_square_layer:
        return "PerfectSquareLayer"
    if kind == OracleKind.from_file:
        assert spec.path is not None
        return f"FromFile path={spec.path.name}"

    assert spec.op is not None and spec.left is not None
    operands = [describe(spec.left)]
    if spec.op != CombineOp.NOT and spec.right is not None:
        operands.append(describe(spec.right))
    return f"Combine({spec.op.value}, {', '.join(operands)})"
