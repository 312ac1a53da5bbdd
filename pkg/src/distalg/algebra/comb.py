"""
Finite combinations of Dirac deltas and their derivatives at a single point
"""

from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..expr import Scalar, as_scalar, chop
from ..utils.config_loader import DEFAULTS


def strip_coeffs(coeffs: Iterable[complex], eps: float = DEFAULTS.eps_zero) -> Tuple[Scalar, ...]:
    """Chop every coefficient and drop trailing zeros"""
    chopped = [chop(c, eps) for c in coeffs]
    while chopped and chopped[-1] == 0:
        chopped.pop()
    return tuple(chopped)


def add_coeffs(a: Sequence[complex], b: Sequence[complex]) -> Tuple[Scalar, ...]:
    return tuple(complex(x) + complex(y) for x, y in zip_longest(a, b, fillvalue=0j))


@dataclass(frozen=True)
class DeltaComb:
    """sum_j coeffs[j] * delta^(j) at ``point``; never empty, never trailing zeros"""

    point: float
    coeffs: Tuple[Scalar, ...]

    def __post_init__(self):
        point = float(self.point)
        if not np.isfinite(point):
            raise ValueError(f"delta comb point {self.point!r} is not finite")
        coeffs = tuple(as_scalar(c) for c in self.coeffs)
        if not coeffs or coeffs[-1] == 0:
            raise ValueError("delta comb needs a nonzero top coefficient")
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def make(
        cls, point: float, coeffs: Iterable[complex], eps: float = DEFAULTS.eps_zero
    ) -> Optional["DeltaComb"]:
        """Comb with chopped coefficients, or None when nothing survives"""
        stripped = strip_coeffs(coeffs, eps)
        return cls(point, stripped) if stripped else None

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Scalar:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0j

    def scaled(self, c: complex, eps: float = DEFAULTS.eps_zero) -> Optional["DeltaComb"]:
        return DeltaComb.make(self.point, (complex(c) * a for a in self.coeffs), eps)

    def differentiated(self, jump: complex = 0j) -> "DeltaComb":
        """d/dx of the comb, plus ``jump`` times delta"""
        return DeltaComb(self.point, (complex(jump),) + self.coeffs)

    def translated(self, eps: float) -> "DeltaComb":
        """Comb of x -> F(x + eps): the support moves to point - eps"""
        return DeltaComb(self.point - eps, self.coeffs)
