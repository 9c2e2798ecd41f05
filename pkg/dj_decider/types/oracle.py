from __future__ import annotations

import sys
from enum import Enum
from pathlib import Path

if sys.version_info >= (3, 11):
    from typing import Self
else:  # pragma: no cover
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, model_validator

from .core import MAX_WIDTH


class OracleKind(str, Enum):
    """Supported recipes for building a truth table."""

    constant = "constant"
    binary_periodic = "binary_periodic"
    monochromatic = "monochromatic"
    random_balanced = "random_balanced"
    from_file = "from_file"
    combine = "combine"
    perfect_square_layer = "perfect_square_layer"


class CombineOp(str, Enum):
    """Set algebra on indicator functions."""

    AND = "and"
    OR = "or"
    XOR = "xor"
    NOT = "not"


class OracleSpec(BaseModel):
    """Symbolic description of how a truth table is built.

    Only the parameters relevant to `kind` are set. For `from_file` the width
    is known only after the file is read, so `n` may be left empty; for
    `combine` it is taken from the operands.
    """

    model_config = ConfigDict(frozen=True)

    kind: OracleKind
    n: int | None = None
    c: int | None = None
    m: int | None = None
    k: int | None = None
    seed: int | None = None
    path: Path | None = None
    op: CombineOp | None = None
    left: OracleSpec | None = None
    right: OracleSpec | None = None

    @model_validator(mode="before")
    @classmethod
    def inherit_width(cls, data: object) -> object:
        if isinstance(data, dict) and data.get("n") is None:
            left = data.get("left")
            if isinstance(left, OracleSpec) and left.n is not None:
                data["n"] = left.n
        return data

    @model_validator(mode="after")
    def check_parameters(self) -> Self:
        kind = self.kind
        if kind not in (OracleKind.from_file, OracleKind.combine):
            if self.n is None or not 1 <= self.n <= MAX_WIDTH:
                raise ValueError(f"width must be in [1, {MAX_WIDTH}], got {self.n}")

        if kind in (
            OracleKind.constant,
            OracleKind.binary_periodic,
            OracleKind.monochromatic,
        ):
            if self.c not in (0, 1):
                raise ValueError(f"constant c must be 0 or 1, got {self.c}")

        if kind == OracleKind.binary_periodic:
            assert self.n is not None
            if self.m is None or not 0 <= self.m <= self.n - 1:
                raise ValueError(f"bit address m must be in [0, {self.n - 1}], got {self.m}")
        elif kind == OracleKind.monochromatic:
            assert self.n is not None
            if self.k is None or not 0 <= self.k < 1 << self.n:
                raise ValueError(f"k must be in [0, {(1 << self.n) - 1}], got {self.k}")
        elif kind == OracleKind.random_balanced:
            if self.seed is None:
                raise ValueError("a random balanced oracle needs a seed")
        elif kind == OracleKind.from_file:
            if self.path is None:
                raise ValueError("a file oracle needs a path")
        elif kind == OracleKind.combine:
            if self.op is None or self.left is None:
                raise ValueError("a combination needs an operator and a left operand")
            if self.op == CombineOp.NOT:
                if self.right is not None:
                    raise ValueError("NOT takes a single operand")
            elif self.right is None:
                raise ValueError(f"{self.op.value.upper()} takes two operands")
            elif None not in (self.left.n, self.right.n) and self.left.n != self.right.n:
                raise ValueError(
                    f"operand widths differ: {self.left.n} and {self.right.n}"
                )
        return self

    @property
    def period(self) -> int | None:
        """Period T = 2^(m+1) of a binary periodic oracle."""
        if self.kind != OracleKind.binary_periodic or self.m is None:
            return None
        return 1 << (self.m + 1)
