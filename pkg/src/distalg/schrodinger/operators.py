"""
Linear operators on distributions, composed as expression trees
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Tuple

from ..algebra import Distribution, derivative, dirac, heaviside, scale, star
from ..expr import Scalar
from ..utils.config_loader import DEFAULTS, KernelSettings


def delta_plus(n: int, psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    """psi -> delta^(n) star psi"""
    return star(dirac(0.0, n), psi, settings)


def delta_minus(n: int, psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    """psi -> psi star delta^(n)"""
    return star(psi, dirac(0.0, n), settings)


def project(sign: int, psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    """P+ / P-: theta(+-x) star psi"""
    return star(heaviside(0.0, sign), psi, settings)


class OperatorExpr(ABC):
    """Node of an operator tree; ``+``, ``-``, scalar ``*`` and ``@`` build new trees"""

    @abstractmethod
    def apply(self, psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
        ...

    def __call__(self, psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
        return self.apply(psi, settings)

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return Sum((self, other))

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return Sum((self, ScalarMultiple(-1, other)))

    def __neg__(self) -> "OperatorExpr":
        return ScalarMultiple(-1, self)

    def __rmul__(self, c: Scalar) -> "OperatorExpr":
        return ScalarMultiple(c, self)

    def __matmul__(self, inner: "OperatorExpr") -> "OperatorExpr":
        return Compose(self, inner)


@dataclass(frozen=True)
class Derivative(OperatorExpr):
    def apply(self, psi, settings=DEFAULTS):
        return derivative(psi, settings)

    def __str__(self):
        return "dx"


@dataclass(frozen=True)
class SecondDerivativeNeg(OperatorExpr):
    def apply(self, psi, settings=DEFAULTS):
        return scale(-1, derivative(derivative(psi, settings), settings), settings)

    def __str__(self):
        return "-dx^2"


@dataclass(frozen=True)
class DeltaPlus(OperatorExpr):
    order: int = 0

    def apply(self, psi, settings=DEFAULTS):
        return delta_plus(self.order, psi, settings)

    def __str__(self):
        return f"deltaplus({self.order})"


@dataclass(frozen=True)
class DeltaMinus(OperatorExpr):
    order: int = 0

    def apply(self, psi, settings=DEFAULTS):
        return delta_minus(self.order, psi, settings)

    def __str__(self):
        return f"deltaminus({self.order})"


@dataclass(frozen=True)
class Project(OperatorExpr):
    sign: int = 1

    def apply(self, psi, settings=DEFAULTS):
        return project(self.sign, psi, settings)

    def __str__(self):
        return "Pplus" if self.sign > 0 else "Pminus"


@dataclass(frozen=True)
class ScalarMultiple(OperatorExpr):
    factor: Scalar
    operand: OperatorExpr

    def apply(self, psi, settings=DEFAULTS):
        return scale(self.factor, self.operand.apply(psi, settings), settings)

    def __str__(self):
        return f"{self.factor}*({self.operand})"


@dataclass(frozen=True)
class Sum(OperatorExpr):
    terms: Tuple[OperatorExpr, ...]

    def apply(self, psi, settings=DEFAULTS):
        total = self.terms[0].apply(psi, settings)
        for term in self.terms[1:]:
            total = total + term.apply(psi, settings)
        return total

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class Compose(OperatorExpr):
    outer: OperatorExpr
    inner: OperatorExpr

    def apply(self, psi, settings=DEFAULTS):
        return self.outer.apply(self.inner.apply(psi, settings), settings)

    def __str__(self):
        return f"({self.outer})({self.inner})"


@dataclass(frozen=True)
class Restricted(OperatorExpr):
    """``operand`` behind a domain guard that raises for wave functions outside the domain"""

    operand: OperatorExpr
    guard: Callable[[Distribution, KernelSettings], None]

    def apply(self, psi, settings=DEFAULTS):
        self.guard(psi, settings)
        return self.operand.apply(psi, settings)

    def __str__(self):
        return f"restricted({self.operand})"


@dataclass(frozen=True)
class Named(OperatorExpr):
    label: str
    body: OperatorExpr

    def apply(self, psi, settings=DEFAULTS):
        return self.body.apply(psi, settings)

    def __str__(self):
        return self.label
