"""
Text rendering of smooth expressions and scalars in the surface grammar
"""

import sympy
from sympy.printing.precedence import precedence
from sympy.printing.str import StrPrinter

from .smooth import Scalar, SmoothExpr


def format_real(value: float) -> str:
    """Shortest round-tripping text, integers without a trailing '.0'"""
    v = float(value)
    if v == 0:
        return "0"
    if v.is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def format_scalar(value: Scalar) -> str:
    """Scalar as a grammar term; complex values come parenthesized"""
    z = complex(value)
    if z.imag == 0:
        return format_real(z.real)
    imag = "I" if z.imag == 1 else f"{format_real(z.imag)}*I"
    if z.real == 0:
        return imag if z.imag > 0 else f"({imag})"
    sign = "+" if z.imag > 0 else "-"
    magnitude = "I" if abs(z.imag) == 1 else f"{format_real(abs(z.imag))}*I"
    return f"({format_real(z.real)} {sign} {magnitude})"


class SmoothPrinter(StrPrinter):
    """StrPrinter emitting '^' for powers and shortest-repr floats"""

    def _print_Pow(self, expr, rational=False):
        prec = precedence(expr)
        base = self.parenthesize(expr.base, prec, strict=True)
        exponent = self.parenthesize(expr.exp, prec, strict=False)
        return f"{base}^{exponent}"

    def _print_Float(self, expr):
        return format_real(float(expr))


def format_smooth(e: SmoothExpr) -> str:
    """Grammar text for a smooth expression; parses back to the same tree"""
    expr = e.expr if isinstance(e, SmoothExpr) else sympy.sympify(e)
    return SmoothPrinter().doprint(expr)
