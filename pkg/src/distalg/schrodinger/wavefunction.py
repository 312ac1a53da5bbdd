"""
Wave functions split at the origin and energy values
"""

from dataclasses import dataclass
from math import sqrt
from typing import Tuple, Union

from ..algebra import Distribution, PiecewiseSmooth, make_distribution
from ..errors import NotAWaveFunction, UnsupportedShape
from ..expr import Scalar, SmoothExpr, taylor_data
from ..expr.smooth import ExprLike
from ..utils.config_loader import DEFAULTS, KernelSettings

BoundaryData = Tuple[Scalar, Scalar, Scalar, Scalar]


@dataclass(frozen=True)
class WaveFunction(Distribution):
    """A distribution without delta combs, read as theta(-x) psi_-(x) + theta(x) psi_+(x)"""

    def __post_init__(self):
        super().__post_init__()
        if self.deltas:
            points = ", ".join(repr(d.point) for d in self.deltas)
            raise NotAWaveFunction(f"wave functions carry no delta combs, found combs at {points}")

    @classmethod
    def of(cls, F: Distribution) -> "WaveFunction":
        if isinstance(F, WaveFunction):
            return F
        return cls(F.smooth, F.deltas)

    @classmethod
    def from_parts(
        cls, minus: ExprLike, plus: ExprLike, settings: KernelSettings = DEFAULTS
    ) -> "WaveFunction":
        """theta(-x) minus + theta(x) plus"""
        smooth_part = PiecewiseSmooth((0.0,), (SmoothExpr.of(minus), SmoothExpr.of(plus)))
        return cls.of(make_distribution(smooth_part, (), settings))

    def check_split_at_origin(self, eps: float = DEFAULTS.eps_zero) -> None:
        stray = [w for w in self.breakpoints if abs(w) > eps]
        if stray:
            raise UnsupportedShape(
                f"wave function has breakpoints {stray!r}; only a split at 0 is supported"
            )

    @property
    def minus_part(self) -> SmoothExpr:
        self.check_split_at_origin()
        return self.piece_left_of(0.0)

    @property
    def plus_part(self) -> SmoothExpr:
        self.check_split_at_origin()
        return self.piece_right_of(0.0)

    def boundary_data(self) -> BoundaryData:
        """(psi_-(0), psi_-'(0), psi_+(0), psi_+'(0))"""
        a, da = taylor_data(self.minus_part, 0.0, 1)
        b, db = taylor_data(self.plus_part, 0.0, 1)
        return a, da, b, db


@dataclass(frozen=True)
class EnergyValue:
    """E = k^2 in units with hbar = 1 and 2m = 1"""

    E: float

    def __post_init__(self):
        object.__setattr__(self, "E", float(self.E))

    @classmethod
    def from_k(cls, k: float) -> "EnergyValue":
        return cls(float(k) ** 2)

    @classmethod
    def of(cls, value: Union["EnergyValue", float]) -> "EnergyValue":
        return value if isinstance(value, EnergyValue) else cls(value)

    @property
    def k(self) -> float:
        if self.E < 0:
            raise ValueError(f"negative energy {self.E!r} has no real wave number")
        return sqrt(self.E)
