"""
Infinitely smooth scalar expressions on the real line.

A ``SmoothExpr`` wraps a sympy expression restricted to constants, the variable
``x``, sums, products, non-negative integer powers, ``sin``, ``cos`` and ``exp``.
Everything built from that grammar is entire, so a piece evaluated beyond its own
interval is still a valid smooth extension.
"""

from dataclasses import dataclass
from functools import cached_property
from numbers import Number
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np
import sympy
from numpy.polynomial import chebyshev

from ..errors import ExprError, NonSmoothConstruct, NumericalOverflow
from ..utils.config_loader import DEFAULTS

X = sympy.Symbol("x", real=True)

Scalar = complex
ScalarLike = Union[Number, complex, sympy.Expr]
ExprLike = Union["SmoothExpr", ScalarLike]

_SMOOTH_FUNCTIONS = (sympy.sin, sympy.cos, sympy.exp)


def chop(value: ScalarLike, eps: float = DEFAULTS.eps_zero) -> Scalar:
    """Complex value with components (and the whole value) below ``eps`` set to zero"""
    z = as_scalar(value)
    if abs(z) < eps:
        return 0j
    re = 0.0 if abs(z.real) < eps else z.real
    im = 0.0 if abs(z.imag) < eps else z.imag
    return complex(re, im)


def as_scalar(value: ScalarLike) -> Scalar:
    """Coerce to a finite Python complex"""
    z = complex(value)
    if not (np.isfinite(z.real) and np.isfinite(z.imag)):
        raise ExprError(f"scalar {value!r} is not finite")
    return z


def to_sympy(value: ScalarLike) -> sympy.Expr:
    """Sympy constant for a scalar, real when the imaginary part vanishes"""
    if isinstance(value, sympy.Basic):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return sympy.Integer(value)
    z = as_scalar(value)
    if z.imag == 0:
        return sympy.Float(z.real)
    return sympy.Float(z.real) + sympy.Float(z.imag) * sympy.I


def _validate(node: sympy.Basic) -> None:
    if not node.free_symbols:
        try:
            value = complex(node)
        except (TypeError, ValueError):
            raise NonSmoothConstruct(str(node)) from None
        if not (np.isfinite(value.real) and np.isfinite(value.imag)):
            raise NonSmoothConstruct(str(node))
        return
    if node == X:
        return
    if node.is_Symbol:
        raise ExprError(f"unknown variable '{node}': smooth expressions depend on x only")
    if node.is_Add or node.is_Mul:
        for arg in node.args:
            _validate(arg)
        return
    if node.is_Pow:
        exponent = node.exp
        if not (exponent.is_Integer and exponent >= 0):
            raise NonSmoothConstruct(str(node))
        _validate(node.base)
        return
    if isinstance(node, _SMOOTH_FUNCTIONS):
        _validate(node.args[0])
        return
    raise NonSmoothConstruct(str(node))


def _normalize_expr(expr: sympy.Expr, eps: float = DEFAULTS.eps_zero) -> sympy.Expr:
    replacements = {}
    for atom in expr.atoms(sympy.Float):
        v = float(atom)
        if abs(v) < eps:
            replacements[atom] = sympy.Integer(0)
        elif v.is_integer():
            replacements[atom] = sympy.Integer(int(v))
    return expr.xreplace(replacements) if replacements else expr


@dataclass(frozen=True)
class SmoothExpr:
    """Immutable smooth piece; equality is structural on the normalized tree"""

    expr: sympy.Expr

    def __post_init__(self):
        expr = self.expr
        if not isinstance(expr, sympy.Basic):
            expr = to_sympy(expr)
        _validate(expr)
        object.__setattr__(self, "expr", _normalize_expr(expr))

    @classmethod
    def of(cls, value: ExprLike) -> "SmoothExpr":
        if isinstance(value, SmoothExpr):
            return value
        return cls(value)

    @classmethod
    def variable(cls) -> "SmoothExpr":
        return cls(X)

    # numerics

    @cached_property
    def kernel(self) -> Callable:
        return sympy.lambdify(X, self.expr, modules="numpy")

    @cached_property
    def derivative(self) -> "SmoothExpr":
        return SmoothExpr(sympy.diff(self.expr, X))

    def values(self, xs: Sequence[float]) -> np.ndarray:
        """Vectorised evaluation; raises NumericalOverflow on non-finite output"""
        points = np.asarray(xs, dtype=float)
        with np.errstate(over="ignore", invalid="ignore"):
            out = np.asarray(self.kernel(points), dtype=complex)
        out = np.broadcast_to(out, points.shape)
        finite = np.isfinite(out)
        if not np.all(finite):
            bad = np.ravel(points)[~np.ravel(finite)]
            raise NumericalOverflow(str(self), float(bad[0]))
        return np.array(out)

    def __call__(self, x0: float) -> Scalar:
        return complex(self.values(np.array([x0], dtype=float))[0])

    # algebra

    @property
    def is_constant(self) -> bool:
        return not self.expr.free_symbols

    def is_zero_structurally(self) -> bool:
        return self.expr == 0

    def shifted(self, eps: float) -> "SmoothExpr":
        """Composition with x -> x + eps"""
        if eps == 0:
            return self
        return SmoothExpr(self.expr.subs(X, X + to_sympy(eps)))

    def conjugate(self) -> "SmoothExpr":
        return SmoothExpr(sympy.conjugate(self.expr))

    def __add__(self, other: ExprLike) -> "SmoothExpr":
        return SmoothExpr(self.expr + SmoothExpr.of(other).expr)

    __radd__ = __add__

    def __sub__(self, other: ExprLike) -> "SmoothExpr":
        return SmoothExpr(self.expr - SmoothExpr.of(other).expr)

    def __rsub__(self, other: ExprLike) -> "SmoothExpr":
        return SmoothExpr(SmoothExpr.of(other).expr - self.expr)

    def __mul__(self, other: ExprLike) -> "SmoothExpr":
        return SmoothExpr(self.expr * SmoothExpr.of(other).expr)

    __rmul__ = __mul__

    def __neg__(self) -> "SmoothExpr":
        return SmoothExpr(-self.expr)

    def __pow__(self, n: int) -> "SmoothExpr":
        if not isinstance(n, int) or n < 0:
            raise NonSmoothConstruct(f"({self})^{n}")
        return SmoothExpr(self.expr**n)

    def __str__(self) -> str:
        from .printing import format_smooth

        return format_smooth(self)


ZERO = SmoothExpr(sympy.Integer(0))
ONE = SmoothExpr(sympy.Integer(1))


def normalize(e: SmoothExpr, eps: float = DEFAULTS.eps_zero) -> SmoothExpr:
    """Canonical form: sympy's flattening and ordering plus numeric chopping"""
    return SmoothExpr(_normalize_expr(e.expr, eps))


def diff(e: SmoothExpr) -> SmoothExpr:
    """Symbolic derivative d/dx"""
    return e.derivative


def evaluate(e: SmoothExpr, x0: float) -> Scalar:
    """Value at a finite point"""
    if not np.isfinite(x0):
        raise ExprError(f"evaluation point {x0!r} is not finite")
    return e(x0)


def derivatives(e: SmoothExpr, order: int) -> List[SmoothExpr]:
    """[e, e', ..., e^(order)]"""
    chain = [e]
    for _ in range(order):
        chain.append(chain[-1].derivative)
    return chain


def taylor_data(e: SmoothExpr, x0: float, order: int) -> Tuple[Scalar, ...]:
    """(e(x0), e'(x0), ..., e^(order)(x0))"""
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    return tuple(evaluate(d, x0) for d in derivatives(e, order))


def chebyshev_nodes(a: float, b: float, count: int = DEFAULTS.sample_count) -> np.ndarray:
    """First-kind Chebyshev nodes mapped into [a, b]"""
    t = chebyshev.chebpts1(count)
    return a + (b - a) * (t + 1.0) / 2.0


def expr_equal(
    e1: SmoothExpr,
    e2: SmoothExpr,
    interval: Tuple[float, float],
    tol: float = DEFAULTS.eps_zero,
    samples: int = DEFAULTS.sample_count,
) -> bool:
    """Sampling equality on Chebyshev nodes.

    A semi-decision: true means the pieces agree at every node within
    ``tol`` (absolute, relaxed to relative for large values), not that they
    are identical.
    """
    a, b = interval
    if not b > a:
        raise ValueError(f"degenerate interval {interval!r}")
    if e1 == e2:
        return True
    v1, v2 = sample_finite((e1, e2), interval, samples)
    return bool(np.allclose(v1, v2, rtol=tol, atol=tol))


def sample_finite(
    exprs: Sequence[SmoothExpr],
    interval: Tuple[float, float],
    samples: int = DEFAULTS.sample_count,
    max_halvings: int = 40,
) -> List[np.ndarray]:
    """Values of every expression on the Chebyshev nodes of the interval.

    When some value overflows, the interval is halved towards its point
    closest to the origin until all values are finite. Pieces are entire, so
    agreement on the shrunken interval still decides equality.
    """
    a, b = interval
    anchor = min(max(0.0, a), b)
    for _ in range(max_halvings):
        xs = chebyshev_nodes(a, b, samples)
        try:
            return [e.values(xs) for e in exprs]
        except NumericalOverflow:
            a, b = anchor + (a - anchor) / 2.0, anchor + (b - anchor) / 2.0
    xs = chebyshev_nodes(a, b, samples)
    return [e.values(xs) for e in exprs]
