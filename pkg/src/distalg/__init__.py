"""
distalg: an associative algebra of piecewise smooth distributions with delta combs,
and the confined free particle Hamiltonians built on it
"""

__version__ = "0.1.0"

from .algebra import (
    DeltaComb,
    Distribution,
    LimitOracle,
    PiecewiseSmooth,
    TestFunction,
    constant,
    derivative,
    dirac,
    heaviside,
    hormander_product,
    pair,
    star,
    star_limit_oracle,
)
from .errors import DistAlgError
from .schrodinger import (
    H_C,
    H_D,
    H_S,
    P_MINUS,
    P_PLUS,
    WaveFunction,
    apply_HC,
    apply_HD,
    apply_HS,
    commutator_HD_P,
    inner_product,
    symmetry_defect,
)
from .syntax import format_dist, lower, parse_dist
from .utils import ConfigLoader, KernelSettings

__all__ = [
    "__version__",
    "DeltaComb",
    "Distribution",
    "LimitOracle",
    "PiecewiseSmooth",
    "TestFunction",
    "constant",
    "derivative",
    "dirac",
    "heaviside",
    "hormander_product",
    "pair",
    "star",
    "star_limit_oracle",
    "DistAlgError",
    "H_C",
    "H_D",
    "H_S",
    "P_MINUS",
    "P_PLUS",
    "WaveFunction",
    "apply_HC",
    "apply_HD",
    "apply_HS",
    "commutator_HD_P",
    "inner_product",
    "symmetry_defect",
    "format_dist",
    "lower",
    "parse_dist",
    "ConfigLoader",
    "KernelSettings",
]
