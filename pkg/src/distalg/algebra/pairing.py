"""
Test functions and the pairing <F, t>
"""

from dataclasses import dataclass, field
from math import sqrt
from typing import Callable, Dict, List, Tuple

import numpy as np
import sympy
from scipy.integrate import quad

from ..errors import InvalidTestFunction, QuadratureError
from ..expr import X, Scalar, SmoothExpr, to_sympy
from ..utils.config_loader import DEFAULTS, KernelSettings
from ..utils.logger import KernelLogger
from .distribution import Distribution

log = KernelLogger("pairing")

# below this value of 1 - u^2 the bump and its low-order derivatives are under 1e-20
BUMP_EDGE_CUTOFF = 1e-2


def integrate_complex(
    func: Callable[[float], complex],
    a: float,
    b: float,
    settings: KernelSettings = DEFAULTS,
    imaginary: bool = True,
) -> complex:
    """Adaptive quadrature of a complex integrand, real and imaginary parts separately"""
    parts = [lambda x: complex(func(x)).real]
    if imaginary:
        parts.append(lambda x: complex(func(x)).imag)
    values = []
    for part in parts:
        result = quad(
            part,
            a,
            b,
            epsabs=settings.quad_tol,
            epsrel=settings.quad_tol,
            limit=settings.quad_limit,
            full_output=1,
        )
        if len(result) >= 4:
            raise QuadratureError((a, b), float(result[1]), str(result[3]))
        values.append(result[0])
    return complex(values[0], values[1] if imaginary else 0.0)


@dataclass(frozen=True)
class TestFunction:
    """Compactly supported smooth t: ``formula`` on [a, b], zero outside.

    ``formula`` is any sympy expression in x; it does not have to be globally
    smooth (the bump is not), only flat at the support ends.
    """

    __test__ = False  # not a pytest class

    formula: sympy.Expr
    support: Tuple[float, float]
    flat_edges: bool = False
    _kernels: Dict[int, Callable] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        a, b = (float(s) for s in self.support)
        if not (np.isfinite(a) and np.isfinite(b) and b > a):
            raise InvalidTestFunction(f"support {self.support!r} is not a bounded interval")
        object.__setattr__(self, "support", (a, b))
        object.__setattr__(self, "formula", sympy.sympify(self.formula))
        extra = self.formula.free_symbols - {X}
        if extra:
            raise InvalidTestFunction(f"test function depends on {sorted(map(str, extra))}")

    @classmethod
    def bump(cls, center: float = 0.0, radius: float = 1.0) -> "TestFunction":
        """exp(-1/(1 - u^2)) with u = (x - center)/radius"""
        if not radius > 0:
            raise InvalidTestFunction(f"bump radius must be positive, got {radius!r}")
        u = (X - to_sympy(float(center))) / to_sympy(float(radius))
        return cls(sympy.exp(-1 / (1 - u**2)), (center - radius, center + radius), flat_edges=True)

    @classmethod
    def from_expr(
        cls,
        expr,
        a: float,
        b: float,
        order: int = DEFAULTS.test_function_order,
        eps: float = DEFAULTS.eps_zero,
    ) -> "TestFunction":
        """User supplied test function; derivatives up to ``order`` must vanish at a and b"""
        formula = expr.expr if isinstance(expr, SmoothExpr) else sympy.sympify(expr)
        t = cls(formula, (a, b))
        for j in range(order + 1):
            for end in t.support:
                value = t._raw(j)(end)
                if abs(complex(value)) > eps:
                    raise InvalidTestFunction(
                        f"derivative {j} of {formula} is {complex(value)!r} at {end!r}, "
                        "test functions must vanish to all checked orders at the support ends"
                    )
        return t

    @property
    def center(self) -> float:
        return (self.support[0] + self.support[1]) / 2.0

    @property
    def edge_zone(self) -> float:
        """Width of the band at each support end where the flat edges evaluate to exactly 0"""
        if not self.flat_edges:
            return 0.0
        a, b = self.support
        return (b - a) / 2.0 * (1.0 - sqrt(1.0 - BUMP_EDGE_CUTOFF))

    def _raw(self, j: int) -> Callable:
        kernel = self._kernels.get(j)
        if kernel is None:
            kernel = sympy.lambdify(X, sympy.diff(self.formula, X, j), modules="numpy")
            self._kernels[j] = kernel
        return kernel

    def derivative_values(self, xs, j: int = 0) -> np.ndarray:
        """t^(j) on an array of points, exactly zero outside the support"""
        points = np.atleast_1d(np.asarray(xs, dtype=float))
        a, b = self.support
        if self.flat_edges:
            u = (points - self.center) / ((b - a) / 2.0)
            mask = (1.0 - u**2) > BUMP_EDGE_CUTOFF
        else:
            mask = (points >= a) & (points <= b)
        out = np.zeros(points.shape, dtype=complex)
        if np.any(mask):
            with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
                inside = np.asarray(self._raw(j)(points[mask]), dtype=complex)
            out[mask] = np.broadcast_to(inside, out[mask].shape)
        return out

    def derivative_at(self, x: float, j: int = 0) -> Scalar:
        return complex(self.derivative_values([x], j)[0])

    def __call__(self, x: float) -> Scalar:
        return self.derivative_at(x, 0)

    def shifted(self, eps: float) -> "TestFunction":
        """x -> t(x - eps)"""
        a, b = self.support
        return TestFunction(
            self.formula.subs(X, X - to_sympy(float(eps))), (a + eps, b + eps), self.flat_edges
        )


def _sub_intervals(F: Distribution, t: TestFunction) -> List[Tuple[float, float]]:
    a, b = t.support
    cuts = [a] + [w for w in F.breakpoints if a < w < b] + [b]
    return list(zip(cuts[:-1], cuts[1:]))


def pair(F: Distribution, t: TestFunction, settings: KernelSettings = DEFAULTS) -> Scalar:
    """<F, t>: quadrature of the smooth part plus signed derivatives of t at the combs"""
    total = 0j
    for lo, hi in _sub_intervals(F, t):
        piece = F.piece_at((lo + hi) / 2.0)
        if piece.is_zero_structurally():
            continue
        kernel = piece.kernel

        def integrand(x, kernel=kernel):
            return complex(kernel(x)) * t(x)

        imaginary = piece.expr.has(sympy.I) or t.formula.has(sympy.I)
        total += integrate_complex(integrand, lo, hi, settings, imaginary=imaginary)
        log.debug(f"integrated {piece} on [{lo!r}, {hi!r}]")
    for comb in F.deltas:
        for j, c in enumerate(comb.coeffs):
            if c != 0:
                total += c * (-1) ** j * t.derivative_at(comb.point, j)
    return total
