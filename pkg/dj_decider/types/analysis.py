from enum import Enum

from pydantic import BaseModel, Field

from .core import BitString


class Verdict(str, Enum):
    constant = "Constant"
    monochromatic = "Monochromatic"
    balanced_non_affine = "BalancedNonAffine"
    unbalanced = "Unbalanced"


class SpectralLine(BaseModel):
    z: int
    probability: float


class Classification(BaseModel):
    """Verdict on an indicator function against the constant/balanced promise.

    Attributes:
        n (int):
            Width of the classified table.
        verdict (Verdict):
            Constant, Monochromatic, BalancedNonAffine or Unbalanced.
        ones_count (int):
            Number of inputs with f(x) = 1.
        k (BitString | None):
            Recovered line for a Monochromatic verdict.
        c (int | None):
            Constant term, set for Constant and Monochromatic verdicts.
        lines (list[SpectralLine]):
            The bright lines of the spectrum, ascending z.
    """

    n: int
    verdict: Verdict
    ones_count: int
    k: BitString | None = None
    c: int | None = None
    lines: list[SpectralLine] = Field(default_factory=list)

    @property
    def label(self) -> str:
        if self.verdict == Verdict.constant:
            return f"Constant({self.c})"
        if self.verdict == Verdict.monochromatic:
            assert self.k is not None
            return f"Monochromatic k={self.k.value} c={self.c}"
        return self.verdict.value
