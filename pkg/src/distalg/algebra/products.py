"""
Products on the algebra: the Hörmander product for disjoint singular supports and
the closed-form star product for arbitrary factors.
"""

from math import comb as binomial
from typing import List, Optional

from ..errors import OverlappingSingularSupports
from ..expr import SmoothExpr, taylor_data
from ..utils.config_loader import DEFAULTS, KernelSettings
from .comb import DeltaComb
from .distribution import Distribution, constant, make_distribution
from .piecewise import PiecewiseSmooth, merge_points


def smooth_times_comb(
    g: SmoothExpr, comb: DeltaComb, eps: float = DEFAULTS.eps_zero
) -> Optional[DeltaComb]:
    """g times a comb, expanded with

        g delta^(n) = sum_k (-1)^k C(n, k) g^(k)(w) delta^(n-k)
    """
    order = comb.order
    g_data = taylor_data(g, comb.point, order)
    coeffs: List[complex] = []
    for j in range(order + 1):
        total = 0j
        for n in range(j, order + 1):
            k = n - j
            total += comb.coeffs[n] * (-1) ** k * binomial(n, k) * g_data[k]
        coeffs.append(total)
    return DeltaComb.make(comb.point, coeffs, eps)


def _smooth_product(F: Distribution, G: Distribution, eps: float):
    grid = merge_points(F.breakpoints, G.breakpoints, tol=eps)
    fs = F.smooth.on_grid(grid)
    gs = G.smooth.on_grid(grid)
    return PiecewiseSmooth(grid, tuple(f * g for f, g in zip(fs, gs)))


def overlap(F: Distribution, G: Distribution, eps: float = DEFAULTS.eps_zero) -> List[float]:
    """Points of V_F lying within eps of a point of V_G"""
    return [v for v in F.breakpoints if G.smooth.has_breakpoint(v, eps)]


def hormander_product(
    F: Distribution, G: Distribution, settings: KernelSettings = DEFAULTS
) -> Distribution:
    """F * G for disjoint singular supports: each comb meets a factor that is smooth near it"""
    eps = settings.eps_zero
    common = overlap(F, G, eps)
    if common:
        raise OverlappingSingularSupports(common)
    combs = [smooth_times_comb(G.piece_at(d.point), d, eps) for d in F.deltas]
    combs += [smooth_times_comb(F.piece_at(d.point), d, eps) for d in G.deltas]
    return make_distribution(_smooth_product(F, G, eps), combs, settings)


def star(F: Distribution, G: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    """Associative star product.

    Smooth parts multiply on the merged grid. A comb of F at x_k meets the
    piece of G to the right of x_k, a comb of G meets the piece of F to the
    left; comb times comb never occurs.
    """
    eps = settings.eps_zero
    combs = [smooth_times_comb(G.piece_right_of(d.point, eps), d, eps) for d in F.deltas]
    combs += [smooth_times_comb(F.piece_left_of(d.point, eps), d, eps) for d in G.deltas]
    return make_distribution(_smooth_product(F, G, eps), combs, settings)


def star_power(F: Distribution, n: int, settings: KernelSettings = DEFAULTS) -> Distribution:
    """F star F star ... (n factors); the unit for n = 0"""
    if n < 0:
        raise ValueError(f"star power must be non-negative, got {n}")
    result = constant(1)
    for _ in range(n):
        result = star(result, F, settings)
    return result
