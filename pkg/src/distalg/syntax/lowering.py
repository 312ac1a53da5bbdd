"""
Evaluation of syntax trees into distributions
"""

from typing import Callable, Dict, Tuple, Type

import sympy

from ..algebra import (
    Distribution,
    add,
    constant,
    derivative,
    dirac,
    heaviside,
    hormander_product,
    scale,
    smooth,
    star,
    star_power,
)
from ..errors import DistAlgError, ExprError, NonSmoothConstruct
from ..expr import X, SmoothExpr, chop
from ..utils.config_loader import DEFAULTS, KernelSettings
from .ast import BinOp, Call, Delta, Deriv, Name, Neg, Node, Number, Power
from .formatter import format_ast

_CONSTANTS = {"x": X, "I": sympy.I, "pi": sympy.pi, "E": sympy.E}
_SMOOTH_FUNCTIONS = {"sin": sympy.sin, "cos": sympy.cos, "exp": sympy.exp}


def lower(node: Node, settings: KernelSettings = DEFAULTS) -> Distribution:
    """Distribution denoted by a syntax tree.

    Errors carry ``subexpression``: the formatted innermost node that failed.
    """
    try:
        return _LOWERERS[type(node)](node, settings)
    except DistAlgError as e:
        if e.subexpression is None:
            e.subexpression = format_ast(node)
        raise


def _smooth_piece(F: Distribution, node: Node, what: str) -> SmoothExpr:
    if F.breakpoints or F.deltas:
        raise NonSmoothConstruct(f"{what} of the non-smooth {format_ast(node)}")
    return F.pieces[0]


def _constant_value(F: Distribution, node: Node, what: str) -> sympy.Expr:
    piece = _smooth_piece(F, node, what)
    if not piece.is_constant:
        raise NonSmoothConstruct(f"{what} {format_ast(node)}")
    return piece.expr


def _linear_shift(node: Node, settings: KernelSettings) -> Tuple[float, int]:
    """(a, s) with the argument equal to s (x - a), s = +-1"""
    piece = _smooth_piece(lower(node, settings), node, "shift argument")
    try:
        poly = sympy.Poly(piece.expr, X)
    except sympy.PolynomialError:
        poly = None
    if poly is None or poly.degree() != 1:
        raise ExprError(f"shift argument {format_ast(node)} must be linear in x")
    slope, intercept = (complex(c) for c in poly.all_coeffs())
    if slope not in (1, -1) or chop(intercept, settings.eps_zero).imag != 0:
        raise ExprError(f"shift argument {format_ast(node)} must be x - a or a - x with real a")
    sign = int(slope.real)
    return -sign * intercept.real + 0.0, sign


def _number(node: Number, settings: KernelSettings) -> Distribution:
    return constant(node.value)


def _name(node: Name, settings: KernelSettings) -> Distribution:
    return smooth(_CONSTANTS[node.name])


def _call(node: Call, settings: KernelSettings) -> Distribution:
    if node.func == "theta":
        a, sign = _linear_shift(node.arg, settings)
        return heaviside(a, sign)
    piece = _smooth_piece(lower(node.arg, settings), node.arg, node.func)
    return smooth(_SMOOTH_FUNCTIONS[node.func](piece.expr))


def _delta(node: Delta, settings: KernelSettings) -> Distribution:
    # delta^(n)(-(x - a)) = (-1)^n delta^(n)(x - a)
    a, sign = _linear_shift(node.arg, settings)
    return dirac(a, node.order, sign**node.order)


def _deriv(node: Deriv, settings: KernelSettings) -> Distribution:
    return derivative(lower(node.arg, settings), settings)


def _power(node: Power, settings: KernelSettings) -> Distribution:
    exponent = _constant_value(lower(node.exponent, settings), node.exponent, "exponent")
    if not (exponent.is_number and exponent.is_integer and exponent >= 0):
        raise NonSmoothConstruct(f"{format_ast(node)} (exponents must be non-negative integers)")
    n = int(exponent)
    base = lower(node.base, settings)
    if not base.breakpoints and not base.deltas:
        return smooth(base.pieces[0] ** n)
    if base.deltas:
        raise NonSmoothConstruct(f"{format_ast(node)} (powers of delta combs are undefined)")
    return star_power(base, n, settings)


def _neg(node: Neg, settings: KernelSettings) -> Distribution:
    return scale(-1, lower(node.operand, settings), settings)


def _divide(left: Distribution, node: BinOp, settings: KernelSettings) -> Distribution:
    denominator = _constant_value(lower(node.right, settings), node.right, "division by")
    if chop(complex(denominator), settings.eps_zero) == 0:
        raise NonSmoothConstruct(f"{format_ast(node)} (division by zero)")
    if not left.breakpoints and not left.deltas:
        return smooth(left.pieces[0].expr / denominator)
    return scale(1 / complex(denominator), left, settings)


def _binop(node: BinOp, settings: KernelSettings) -> Distribution:
    left = lower(node.left, settings)
    if node.op == "/":
        return _divide(left, node, settings)
    right = lower(node.right, settings)
    if node.op == "+":
        return add(left, right, settings)
    if node.op == "-":
        return add(left, scale(-1, right, settings), settings)
    if node.op == "*":
        return hormander_product(left, right, settings)
    return star(left, right, settings)


_LOWERERS: Dict[Type[Node], Callable[[Node, KernelSettings], Distribution]] = {
    Number: _number,
    Name: _name,
    Call: _call,
    Delta: _delta,
    Deriv: _deriv,
    Power: _power,
    Neg: _neg,
    BinOp: _binop,
}
