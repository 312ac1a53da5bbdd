"""
Smooth expression core: symbolic pieces, differentiation and sampling equality
"""

from .smooth import (
    ONE,
    X,
    ZERO,
    Scalar,
    SmoothExpr,
    as_scalar,
    chebyshev_nodes,
    chop,
    derivatives,
    diff,
    evaluate,
    expr_equal,
    normalize,
    sample_finite,
    taylor_data,
    to_sympy,
)
from .printing import format_real, format_scalar, format_smooth

__all__ = [
    "ONE",
    "X",
    "ZERO",
    "Scalar",
    "SmoothExpr",
    "as_scalar",
    "chebyshev_nodes",
    "chop",
    "derivatives",
    "diff",
    "evaluate",
    "expr_equal",
    "normalize",
    "sample_finite",
    "taylor_data",
    "to_sympy",
    "format_real",
    "format_scalar",
    "format_smooth",
]
