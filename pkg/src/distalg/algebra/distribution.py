"""
Distributions of the algebra: a piecewise smooth part plus finitely many delta combs.

Every value is kept in normalized form by ``make_distribution``: nearby points
are merged, each comb point is a breakpoint, and a breakpoint without a comb
whose neighbouring pieces agree is removed. The remaining breakpoints are
exactly the singular support.
"""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..expr import ONE, ZERO, Scalar, SmoothExpr, expr_equal, normalize, sample_finite
from ..expr.smooth import ExprLike, chop, taylor_data
from ..utils.config_loader import DEFAULTS, KernelSettings
from ..utils.logger import KernelLogger
from .comb import DeltaComb, add_coeffs
from .piecewise import Interval, PiecewiseSmooth, merge_points, sampling_windows

log = KernelLogger("algebra")


@dataclass(frozen=True)
class Distribution:
    """F = f + sum over w of the comb at w; build through ``make_distribution``"""

    smooth: PiecewiseSmooth
    deltas: Tuple[DeltaComb, ...] = ()

    def __post_init__(self):
        deltas = tuple(sorted(self.deltas, key=lambda d: d.point))
        for comb in deltas:
            if comb.point not in self.smooth.breakpoints:
                raise ValueError(f"delta comb at {comb.point!r} is not on a breakpoint")
        if len({d.point for d in deltas}) != len(deltas):
            raise ValueError("at most one delta comb per point")
        object.__setattr__(self, "deltas", deltas)

    # structure

    @property
    def breakpoints(self) -> Tuple[float, ...]:
        return self.smooth.breakpoints

    @property
    def pieces(self) -> Tuple[SmoothExpr, ...]:
        return self.smooth.pieces

    @property
    def has_deltas(self) -> bool:
        return bool(self.deltas)

    @property
    def is_smooth(self) -> bool:
        return not self.breakpoints

    def piece_at(self, x: float) -> SmoothExpr:
        return self.smooth.piece_at(x)

    def piece_left_of(self, w: float, tol: float = DEFAULTS.eps_zero) -> SmoothExpr:
        return self.smooth.piece_left_of(w, tol)

    def piece_right_of(self, w: float, tol: float = DEFAULTS.eps_zero) -> SmoothExpr:
        return self.smooth.piece_right_of(w, tol)

    def comb_at(self, w: float, tol: float = DEFAULTS.eps_zero) -> Optional[DeltaComb]:
        points = [d.point for d in self.deltas]
        i = bisect_left(points, w - tol)
        if i < len(points) and abs(points[i] - w) <= tol:
            return self.deltas[i]
        return None

    def jump_at(self, w: float, order: int = 0, tol: float = DEFAULTS.eps_zero) -> Scalar:
        """Jump of the order-th derivative of the smooth part across w"""
        left = taylor_data(self.piece_left_of(w, tol), w, order)[order]
        right = taylor_data(self.piece_right_of(w, tol), w, order)[order]
        return right - left

    # comparisons

    def equals(
        self,
        other: "Distribution",
        tol: float = DEFAULTS.eps_zero,
        settings: KernelSettings = DEFAULTS,
    ) -> bool:
        return equals(self, other, tol, settings)

    def is_zero(self, tol: float = DEFAULTS.eps_zero, settings: KernelSettings = DEFAULTS) -> bool:
        return equals(self, ZERO_DISTRIBUTION, tol, settings)

    def residual_norm(self, settings: KernelSettings = DEFAULTS) -> float:
        return residual_norm(self, settings)

    # arithmetic

    def __add__(self, other: "Distribution") -> "Distribution":
        if not isinstance(other, Distribution):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other: "Distribution") -> "Distribution":
        if not isinstance(other, Distribution):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self) -> "Distribution":
        return scale(-1, self)

    def __mul__(self, c: complex) -> "Distribution":
        if isinstance(c, Distribution):
            return NotImplemented
        return scale(c, self)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from ..syntax.formatter import format_dist

        return format_dist(self)


def _merge_combs(
    combs: Iterable[DeltaComb], eps: float
) -> List[Tuple[float, Tuple[Scalar, ...]]]:
    merged: List[Tuple[float, Tuple[Scalar, ...]]] = []
    for comb in sorted(combs, key=lambda d: d.point):
        if merged and comb.point - merged[-1][0] <= eps:
            point, coeffs = merged[-1]
            merged[-1] = (point, add_coeffs(coeffs, comb.coeffs))
        else:
            merged.append((comb.point, comb.coeffs))
    return merged


def _snap(point: float, grid: Sequence[float], eps: float) -> float:
    i = bisect_left(grid, point - eps)
    return grid[i]


def make_distribution(
    smooth: PiecewiseSmooth,
    deltas: Iterable[Optional[DeltaComb]] = (),
    settings: KernelSettings = DEFAULTS,
) -> Distribution:
    """Normalized distribution from a smooth part and combs (None entries skipped)"""
    eps = settings.eps_zero
    combs: Dict[float, DeltaComb] = {}
    raw = _merge_combs((d for d in deltas if d is not None), eps)
    grid = merge_points(smooth.breakpoints, (p for p, _ in raw), tol=eps)
    for point, coeffs in raw:
        comb = DeltaComb.make(_snap(point, grid, eps), coeffs, eps)
        if comb is not None:
            combs[comb.point] = comb

    pieces = [normalize(p, eps) for p in smooth.on_grid(grid)]
    kept_points: List[float] = []
    kept_pieces = [pieces[0]]
    for k, w in enumerate(grid):
        right = pieces[k + 1]
        left = kept_pieces[-1]
        if w not in combs and _same_piece(left, right, w, settings):
            log.debug(f"pruned removable breakpoint at {w!r}")
            continue
        kept_points.append(w)
        kept_pieces.append(right)

    smooth_part = PiecewiseSmooth(tuple(kept_points), tuple(kept_pieces))
    return Distribution(smooth_part, tuple(combs.values()))


def _same_piece(left: SmoothExpr, right: SmoothExpr, w: float, settings: KernelSettings) -> bool:
    if left == right:
        return True
    window = (w - settings.prune_window, w + settings.prune_window)
    return expr_equal(left, right, window, settings.eps_zero, settings.sample_count)


# constructors


def constant(c: ExprLike) -> Distribution:
    return Distribution(PiecewiseSmooth.smooth(SmoothExpr.of(c)))


def smooth(e: ExprLike) -> Distribution:
    """Regular distribution of a globally smooth expression"""
    return Distribution(PiecewiseSmooth.smooth(SmoothExpr.of(e)))


def heaviside(a: float = 0.0, sign: int = 1) -> Distribution:
    """theta(sign * (x - a))"""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    pieces = (ZERO, ONE) if sign == 1 else (ONE, ZERO)
    return Distribution(PiecewiseSmooth((float(a),), pieces))


def dirac(a: float = 0.0, order: int = 0, coeff: complex = 1) -> Distribution:
    """coeff * delta^(order) at a"""
    if order < 0:
        raise ValueError(f"delta order must be non-negative, got {order}")
    comb = DeltaComb.make(a, [0j] * order + [complex(coeff)])
    return make_distribution(PiecewiseSmooth.zero(), [comb])


def window(a: float, b: float, e: ExprLike = 1) -> Distribution:
    """e on (a, b), zero outside"""
    if not b > a:
        raise ValueError(f"empty window ({a!r}, {b!r})")
    return make_distribution(PiecewiseSmooth((a, b), (ZERO, SmoothExpr.of(e), ZERO)))


ZERO_DISTRIBUTION = Distribution(PiecewiseSmooth.zero())


# vector space and calculus


def _combined_pieces(F: Distribution, G: Distribution, eps: float):
    grid = merge_points(F.breakpoints, G.breakpoints, tol=eps)
    return grid, F.smooth.on_grid(grid), G.smooth.on_grid(grid)


def add(F: Distribution, G: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    grid, fs, gs = _combined_pieces(F, G, settings.eps_zero)
    smooth_part = PiecewiseSmooth(grid, tuple(f + g for f, g in zip(fs, gs)))
    return make_distribution(smooth_part, F.deltas + G.deltas, settings)


def scale(c: complex, F: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    factor = chop(c, settings.eps_zero)
    if factor == 0:
        return ZERO_DISTRIBUTION
    smooth_part = F.smooth.map(lambda p: p * factor)
    combs = (d.scaled(factor, settings.eps_zero) for d in F.deltas)
    return make_distribution(smooth_part, combs, settings)


def derivative(F: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    """Distributional derivative: classical part plus jump deltas, combs raised one order"""
    smooth_part = F.smooth.map(lambda p: p.derivative)
    combs = []
    for k, w in enumerate(F.breakpoints):
        jump = F.smooth.jump(k)
        comb = F.comb_at(w, 0.0)
        if comb is None:
            combs.append(DeltaComb.make(w, [jump], settings.eps_zero))
        else:
            combs.append(comb.differentiated(jump))
    return make_distribution(smooth_part, combs, settings)


def translate(F: Distribution, eps: float, settings: KernelSettings = DEFAULTS) -> Distribution:
    """x -> F(x + eps); every singular point moves to w - eps"""
    if not np.isfinite(eps):
        raise ValueError(f"translation {eps!r} is not finite")
    combs = (d.translated(eps) for d in F.deltas)
    return make_distribution(F.smooth.translated(eps), combs, settings)


def restrict(
    F: Distribution, interval: Interval, settings: KernelSettings = DEFAULTS
) -> Distribution:
    """F on the open interval (a, b); the end pieces extend past the interval"""
    a, b = interval
    if not b > a:
        raise ValueError(f"empty interval {interval!r}")
    inside = tuple(w for w in F.breakpoints if a < w < b)
    if inside:
        pieces = (F.piece_left_of(inside[0], 0.0),)
        pieces += tuple(F.piece_right_of(w, 0.0) for w in inside)
    else:
        pieces = (F.piece_at((a + b) / 2.0 if np.isfinite(a + b) else _interior(a, b)),)
    combs = (d for d in F.deltas if a < d.point < b)
    return make_distribution(PiecewiseSmooth(inside, pieces), combs, settings)


def _interior(a: float, b: float) -> float:
    if np.isfinite(a):
        return a + 1.0
    if np.isfinite(b):
        return b - 1.0
    return 0.0


def sing_supp(F: Distribution) -> frozenset:
    """Singular support: the normalized breakpoints"""
    return frozenset(F.breakpoints)


# comparison


def equals(
    F: Distribution,
    G: Distribution,
    tol: float = DEFAULTS.eps_zero,
    settings: KernelSettings = DEFAULTS,
) -> bool:
    """Normalized equality.

    Combs agree within tol and the pieces agree on sampling windows of every
    interval of the merged grid.
    """
    grid, fs, gs = _combined_pieces(F, G, settings.eps_zero)
    windows = sampling_windows(grid, settings.unbounded_window)
    for f, g, span in zip(fs, gs, windows):
        if not expr_equal(f, g, span, tol, settings.sample_count):
            return False
    points = merge_points(
        (d.point for d in F.deltas), (d.point for d in G.deltas), tol=settings.eps_zero
    )
    for w in points:
        cf = F.comb_at(w, settings.eps_zero)
        cg = G.comb_at(w, settings.eps_zero)
        a = np.array(cf.coeffs if cf else (), dtype=complex)
        b = np.array(cg.coeffs if cg else (), dtype=complex)
        size = max(len(a), len(b))
        a = np.pad(a, (0, size - len(a)))
        b = np.pad(b, (0, size - len(b)))
        if not np.allclose(a, b, rtol=tol, atol=tol):
            return False
    return True


def residual_norm(F: Distribution, settings: KernelSettings = DEFAULTS) -> float:
    """Largest comb coefficient or sampled piece magnitude"""
    norm = 0.0
    for comb in F.deltas:
        norm = max(norm, max(abs(c) for c in comb.coeffs))
    for piece, span in zip(F.pieces, F.smooth.windows(settings.unbounded_window)):
        if piece.is_zero_structurally():
            continue
        (values,) = sample_finite((piece,), span, settings.sample_count)
        norm = max(norm, float(np.max(np.abs(values))))
    return norm
