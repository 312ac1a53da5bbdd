"""
Distribution algebra: piecewise smooth functions plus delta combs, the Hörmander
and star products, pairing with test functions and the epsilon-limit oracle
"""

from .comb import DeltaComb
from .distribution import (
    ZERO_DISTRIBUTION,
    Distribution,
    add,
    constant,
    derivative,
    dirac,
    equals,
    heaviside,
    make_distribution,
    residual_norm,
    restrict,
    scale,
    sing_supp,
    smooth,
    translate,
    window,
)
from .oracle import LimitOracle, OracleResult, richardson_limit, star_limit_oracle
from .pairing import TestFunction, integrate_complex, pair
from .piecewise import PiecewiseSmooth, merge_points
from .products import hormander_product, smooth_times_comb, star, star_power

__all__ = [
    "DeltaComb",
    "Distribution",
    "LimitOracle",
    "OracleResult",
    "PiecewiseSmooth",
    "TestFunction",
    "ZERO_DISTRIBUTION",
    "add",
    "constant",
    "derivative",
    "dirac",
    "equals",
    "heaviside",
    "hormander_product",
    "integrate_complex",
    "make_distribution",
    "merge_points",
    "pair",
    "residual_norm",
    "restrict",
    "richardson_limit",
    "scale",
    "sing_supp",
    "smooth",
    "smooth_times_comb",
    "star",
    "star_limit_oracle",
    "star_power",
    "translate",
    "window",
]
