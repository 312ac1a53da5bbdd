"""
Text output: syntax trees with minimal parentheses and normalized distributions
as sums of windowed pieces followed by delta combs
"""

from typing import List, Tuple

from ..expr import SmoothExpr, format_real, format_scalar, format_smooth
from .ast import BinOp, Call, Delta, Deriv, Name, Neg, Node, Number, Power

_SUM, _PRODUCT, _UNARY, _ATOM = 1, 2, 3, 5
_PRECEDENCE = {"+": _SUM, "-": _SUM, "*": _PRODUCT, "**": _PRODUCT, "/": _PRODUCT}


def delta_name(order: int) -> str:
    if order <= 2:
        return "delta" + "'" * order
    return f"delta^({order})"


def _wrap(text: str, inner: int, outer: int) -> str:
    return f"({text})" if inner < outer else text


def _format(node: Node) -> Tuple[str, int]:
    if isinstance(node, Number):
        return format_real(node.value), _ATOM
    if isinstance(node, Name):
        return node.name, _ATOM
    if isinstance(node, Call):
        return f"{node.func}({format_ast(node.arg)})", _ATOM
    if isinstance(node, Delta):
        return f"{delta_name(node.order)}({format_ast(node.arg)})", _ATOM
    if isinstance(node, Deriv):
        return f"D[{format_ast(node.arg)}]", _ATOM
    if isinstance(node, Power):
        base, p = _format(node.base)
        exponent, q = _format(node.exponent)
        return f"{_wrap(base, p, _ATOM)}^{_wrap(exponent, q, _ATOM)}", _ATOM - 1
    if isinstance(node, Neg):
        operand, p = _format(node.operand)
        return "-" + _wrap(operand, p, _UNARY), _UNARY
    if isinstance(node, BinOp):
        prec = _PRECEDENCE[node.op]
        left, p = _format(node.left)
        right, q = _format(node.right)
        separator = f" {node.op} " if prec == _SUM or node.op == "**" else node.op
        # left associative: the right operand binds strictly tighter
        return f"{_wrap(left, p, prec)}{separator}{_wrap(right, q, prec + 1)}", prec
    raise TypeError(f"not a syntax node: {node!r}")


def format_ast(node: Node) -> str:
    return _format(node)[0]


def shift_text(point: float, sign: int = 1) -> str:
    """Argument text for theta/delta: x - a for sign +1, a - x for sign -1"""
    if sign > 0:
        if point == 0:
            return "x"
        return f"x - {format_real(point)}" if point > 0 else f"x + {format_real(-point)}"
    return "-x" if point == 0 else f"{format_real(point)} - x"


def _coefficient_term(piece: SmoothExpr, factor: str) -> str:
    expr = piece.expr
    if expr == 1:
        return factor
    if expr == -1:
        return "-" + factor
    text = format_smooth(piece)
    if expr.is_Add or (expr.is_number and not expr.is_real):
        text = f"({text})"
    return f"{text}*{factor}"


def _scalar_term(c: complex, factor: str) -> str:
    if c == 1:
        return factor
    if c == -1:
        return "-" + factor
    return f"{format_scalar(c)}*{factor}"


def format_dist(F) -> str:
    """Deterministic text of a normalized distribution; parses back to an equal value"""
    terms: List[str] = []
    points = F.breakpoints
    for k, piece in enumerate(F.pieces):
        if piece.is_zero_structurally():
            continue
        windows = []
        if k > 0:
            windows.append(f"theta({shift_text(points[k - 1], 1)})")
        if k < len(points):
            windows.append(f"theta({shift_text(points[k], -1)})")
        if not windows:
            terms.append(format_smooth(piece))
            continue
        terms.append(_coefficient_term(piece, "*".join(windows)))
    for comb in F.deltas:
        for order, c in enumerate(comb.coeffs):
            if c != 0:
                terms.append(_scalar_term(c, f"{delta_name(order)}({shift_text(comb.point)})"))
    if not terms:
        return "0"
    text = terms[0]
    for term in terms[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text
