"""
Parser for distribution expressions and test function specs (lark, LALR)
"""

import re

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)

from ..algebra import TestFunction
from ..errors import DistSyntaxError, NonSmoothConstruct, UnknownIdentifier
from ..expr import SmoothExpr
from ..utils.config_loader import DEFAULTS, KernelSettings
from .ast import BinOp, Call, Delta, Deriv, Name, Neg, Node, Number, Power
from .lowering import lower

GRAMMAR = r"""
    ?sum: product
        | sum "+" product           -> add
        | sum "-" product           -> sub

    ?product: unary
        | product "*" unary         -> hormander
        | product STAR unary        -> star
        | product "/" unary         -> divide

    ?unary: power
        | "-" unary                 -> neg
        | "+" unary

    ?power: atom
        | atom "^" unary            -> power

    ?atom: NUMBER                   -> number
        | NAME                      -> name
        | NAME "(" sum ")"          -> call
        | DELTA_PRIMED "(" sum ")"  -> primed_delta
        | DELTA_ORDER "(" sum ")"   -> ordered_delta
        | NAME "[" sum "]"          -> bracket
        | "(" sum ")"

    testfn: NAME "(" SIGNED_NUMBER "," SIGNED_NUMBER ")"

    STAR: "**"
    DELTA_PRIMED.2: /delta'+/
    DELTA_ORDER.2: /delta\^\(\s*\d+\s*\)/

    %import common.CNAME -> NAME
    %import common.NUMBER
    %import common.SIGNED_NUMBER
    %import common.WS
    %ignore WS
"""

CONSTANTS = {"x", "I", "pi", "E"}
FUNCTIONS = {"sin", "cos", "exp", "theta", "delta"}
NON_SMOOTH = {
    "sqrt", "abs", "log", "ln", "tan", "cot", "sec", "csc",
    "asin", "acos", "atan", "sign", "floor", "ceil",
}
TEST_FUNCTIONS = {"bump"}

_PARSER = Lark(GRAMMAR, parser="lalr", start=["sum", "testfn"])


def _number(text: str):
    return float(text) if any(c in text for c in ".eE") else int(text)


def _unknown(token: Token) -> Exception:
    if str(token) in NON_SMOOTH:
        return NonSmoothConstruct(str(token))
    return UnknownIdentifier(str(token), token.line, token.column)


@v_args(inline=True)
class _ToAst(Transformer):
    def number(self, token):
        return Number(_number(token))

    def name(self, token):
        if token not in CONSTANTS:
            raise _unknown(token)
        return Name(str(token), token.line, token.column)

    def call(self, token, arg):
        if token not in FUNCTIONS:
            raise _unknown(token)
        if token == "delta":
            return Delta(0, arg)
        return Call(str(token), arg)

    def primed_delta(self, token, arg):
        return Delta(token.count("'"), arg)

    def ordered_delta(self, token, arg):
        return Delta(int(re.search(r"\d+", token).group()), arg)

    def bracket(self, token, arg):
        if token != "D":
            raise _unknown(token)
        return Deriv(arg)

    def add(self, left, right):
        return BinOp("+", left, right)

    def sub(self, left, right):
        return BinOp("-", left, right)

    def hormander(self, left, right):
        return BinOp("*", left, right)

    def star(self, left, _token, right):
        return BinOp("**", left, right)

    def divide(self, left, right):
        return BinOp("/", left, right)

    def neg(self, operand):
        return Neg(operand)

    def power(self, base, exponent):
        return Power(base, exponent)

    def testfn(self, token, first, second):
        if token not in TEST_FUNCTIONS:
            raise _unknown(token)
        return str(token), float(first), float(second)


def _syntax_error(error: UnexpectedInput, text: str) -> DistSyntaxError:
    line = getattr(error, "line", None) or -1
    column = getattr(error, "column", None) or -1
    if line < 1 or column < 1:
        # end of input carries no position
        line, column = text.count("\n") + 1, len(text.rsplit("\n", 1)[-1]) + 1
    if isinstance(error, UnexpectedCharacters):
        message = f"unexpected character {error.char!r}"
    elif isinstance(error, UnexpectedEOF):
        message = "unexpected end of input"
    elif isinstance(error, UnexpectedToken):
        if error.token.type == "$END":
            message = "unexpected end of input"
        else:
            message = f"unexpected token {str(error.token)!r}"
    else:
        message = "invalid syntax"
    return DistSyntaxError(message, line, column)


def _parse(text: str, start: str):
    try:
        tree = _PARSER.parse(text, start=start)
    except UnexpectedInput as e:
        raise _syntax_error(e, text) from None
    try:
        return _ToAst().transform(tree)
    except VisitError as e:
        raise e.orig_exc from None


def parse_dist(text: str) -> Node:
    """Surface syntax tree of a distribution expression"""
    return _parse(text, "sum")


def parse_smooth(text: str, settings: KernelSettings = DEFAULTS) -> SmoothExpr:
    """Text of a globally smooth expression, lowered to a SmoothExpr"""
    F = lower(parse_dist(text), settings)
    if F.breakpoints or F.deltas:
        raise NonSmoothConstruct(text)
    return F.pieces[0]


def parse_test_function(text: str) -> TestFunction:
    """``bump(c, r)``"""
    tree = _parse(text, "testfn")
    _, center, radius = tree
    return TestFunction.bump(center, radius)
