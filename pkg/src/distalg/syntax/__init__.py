"""
Surface syntax: parser, lowering to distributions, text and JSON output
"""

from .ast import BinOp, Call, Delta, Deriv, Name, Neg, Node, Number, Power
from .formatter import delta_name, format_ast, format_dist, shift_text
from .lowering import lower
from .parser import parse_dist, parse_smooth, parse_test_function
from .serialization import from_dict, from_json, to_dict, to_json

__all__ = [
    "BinOp",
    "Call",
    "Delta",
    "Deriv",
    "Name",
    "Neg",
    "Node",
    "Number",
    "Power",
    "delta_name",
    "format_ast",
    "format_dist",
    "shift_text",
    "lower",
    "parse_dist",
    "parse_smooth",
    "parse_test_function",
    "from_dict",
    "from_json",
    "to_dict",
    "to_json",
]
