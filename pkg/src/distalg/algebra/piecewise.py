"""
Piecewise smooth functions: finitely many breakpoints, one smooth piece per open interval
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable, List, Sequence, Tuple

import numpy as np

from ..expr import ZERO, SmoothExpr
from ..utils.config_loader import DEFAULTS

Interval = Tuple[float, float]


def merge_points(
    *point_sets: Iterable[float], tol: float = DEFAULTS.eps_zero
) -> Tuple[float, ...]:
    """Sorted union of point sets; points closer than ``tol`` collapse to the smallest"""
    points = sorted(float(p) for points in point_sets for p in points)
    merged: List[float] = []
    for p in points:
        if merged and p - merged[-1] <= tol:
            continue
        merged.append(p)
    return tuple(merged)


def sample_points(grid: Sequence[float]) -> List[float]:
    """One interior point per interval of the grid, ends included"""
    if not grid:
        return [0.0]
    mids = [grid[0] - 1.0]
    mids.extend((lo + hi) / 2.0 for lo, hi in zip(grid[:-1], grid[1:]))
    mids.append(grid[-1] + 1.0)
    return mids


def sampling_windows(
    grid: Sequence[float], unbounded_window: float = DEFAULTS.unbounded_window
) -> List[Interval]:
    """Finite window per interval: the interval itself, clipped at the unbounded ends"""
    if not grid:
        return [(-unbounded_window, unbounded_window)]
    windows = [(grid[0] - unbounded_window, grid[0])]
    windows.extend(zip(grid[:-1], grid[1:]))
    windows.append((grid[-1], grid[-1] + unbounded_window))
    return windows


@dataclass(frozen=True)
class PiecewiseSmooth:
    """pieces[k] lives on (breakpoints[k-1], breakpoints[k]) with -inf/+inf sentinels"""

    breakpoints: Tuple[float, ...]
    pieces: Tuple[SmoothExpr, ...]

    def __post_init__(self):
        breakpoints = tuple(float(w) for w in self.breakpoints)
        pieces = tuple(SmoothExpr.of(p) for p in self.pieces)
        if len(pieces) != len(breakpoints) + 1:
            raise ValueError(
                f"{len(breakpoints)} breakpoints need {len(breakpoints) + 1} pieces, "
                f"got {len(pieces)}"
            )
        if not all(np.isfinite(breakpoints)):
            raise ValueError(f"breakpoints must be finite: {breakpoints!r}")
        if any(b <= a for a, b in zip(breakpoints[:-1], breakpoints[1:])):
            raise ValueError(f"breakpoints must be strictly increasing: {breakpoints!r}")
        object.__setattr__(self, "breakpoints", breakpoints)
        object.__setattr__(self, "pieces", pieces)

    @classmethod
    def smooth(cls, piece: SmoothExpr) -> "PiecewiseSmooth":
        return cls((), (SmoothExpr.of(piece),))

    @classmethod
    def zero(cls) -> "PiecewiseSmooth":
        return cls((), (ZERO,))

    def piece_at(self, x: float) -> SmoothExpr:
        """Piece whose closed interval contains x, the right one at a breakpoint"""
        return self.pieces[bisect_right(self.breakpoints, x)]

    def piece_right_of(self, w: float, tol: float = DEFAULTS.eps_zero) -> SmoothExpr:
        return self.pieces[bisect_right(self.breakpoints, w + tol)]

    def piece_left_of(self, w: float, tol: float = DEFAULTS.eps_zero) -> SmoothExpr:
        return self.pieces[bisect_left(self.breakpoints, w - tol)]

    def has_breakpoint(self, w: float, tol: float = DEFAULTS.eps_zero) -> bool:
        i = bisect_left(self.breakpoints, w - tol)
        return i < len(self.breakpoints) and abs(self.breakpoints[i] - w) <= tol

    def on_grid(self, grid: Sequence[float]) -> List[SmoothExpr]:
        """Pieces seen on each interval of a finer grid"""
        return [self.piece_at(m) for m in sample_points(grid)]

    def map(self, fn: Callable[[SmoothExpr], SmoothExpr]) -> "PiecewiseSmooth":
        return PiecewiseSmooth(self.breakpoints, tuple(fn(p) for p in self.pieces))

    def translated(self, eps: float) -> "PiecewiseSmooth":
        """x -> f(x + eps)"""
        return PiecewiseSmooth(
            tuple(w - eps for w in self.breakpoints),
            tuple(p.shifted(eps) for p in self.pieces),
        )

    def jump(self, k: int) -> complex:
        """f(w+) - f(w-) at breakpoint k"""
        w = self.breakpoints[k]
        return self.pieces[k + 1](w) - self.pieces[k](w)

    def windows(self, unbounded_window: float = DEFAULTS.unbounded_window) -> List[Interval]:
        return sampling_windows(self.breakpoints, unbounded_window)
