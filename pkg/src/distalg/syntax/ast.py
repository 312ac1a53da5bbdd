"""
Surface syntax tree of distribution expressions
"""

from dataclasses import dataclass, field
from typing import Union


@dataclass(frozen=True)
class Node:
    pass


@dataclass(frozen=True)
class Number(Node):
    value: Union[int, float]


@dataclass(frozen=True)
class Name(Node):
    """x, I, pi or E"""

    name: str
    line: int = field(default=1, compare=False)
    column: int = field(default=1, compare=False)


@dataclass(frozen=True)
class Call(Node):
    """sin, cos, exp or theta applied to an argument"""

    func: str
    arg: Node


@dataclass(frozen=True)
class Delta(Node):
    order: int
    arg: Node


@dataclass(frozen=True)
class Deriv(Node):
    """D[...]"""

    arg: Node


@dataclass(frozen=True)
class Power(Node):
    base: Node
    exponent: Node


@dataclass(frozen=True)
class Neg(Node):
    operand: Node


@dataclass(frozen=True)
class BinOp(Node):
    """op is one of + - * ** /"""

    op: str
    left: Node
    right: Node
