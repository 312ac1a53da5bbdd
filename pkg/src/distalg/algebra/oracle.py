"""
Independent evaluation of the star product as the limit of Hörmander products with
a right-translated second factor, extrapolated to epsilon = 0.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import NonConvergence
from ..expr import Scalar
from ..utils.config_loader import DEFAULTS, KernelSettings
from ..utils.logger import KernelLogger
from .distribution import Distribution, translate
from .pairing import TestFunction, pair
from .products import hormander_product

log = KernelLogger("oracle")


def richardson_limit(step_ratio: float, values: Sequence[complex]) -> Tuple[complex, float]:
    """Neville table for h -> 0 with h shrinking by ``step_ratio`` per entry.

    Returns the most extrapolated value and the distance to the finest entry
    of the previous level as its error estimate.
    """
    last_level = np.asarray(values, dtype=complex)
    if len(last_level) == 1:
        return complex(last_level[0]), float("inf")

    previous = last_level
    for m in range(1, len(values)):
        mult = step_ratio**m
        previous = last_level
        last_level = (mult * previous[1:] - previous[:-1]) / (mult - 1.0)
    best = complex(last_level[0])
    return best, float(abs(best - previous[-1]))


@dataclass(frozen=True)
class OracleResult:
    value: Scalar
    error: float
    epsilons: Tuple[float, ...]


class LimitOracle:
    """lim_{eps -> 0+} <F . G^eps, t> for any number of test functions.

    Ladders of Hörmander products are cached by their starting epsilon, so
    pairing a panel of test functions costs only quadrature unless a test
    function forces a shorter ladder.
    """

    def __init__(self, F: Distribution, G: Distribution, settings: KernelSettings = DEFAULTS):
        self.F = F
        self.G = G
        self.settings = settings
        self.eps0 = self._initial_epsilon()
        self.epsilons = self.ladder(self.eps0)
        self._products: Dict[float, List[Distribution]] = {}
        log.debug(f"epsilon ladder from {self.epsilons[0]!r} down to {self.epsilons[-1]!r}")

    def _initial_epsilon(self) -> float:
        """Largest eps0 such that no singular point of G^eps meets V_F for 0 < eps < eps0"""
        gaps = [
            w - v
            for v in self.F.breakpoints
            for w in self.G.breakpoints
            if w - v > self.settings.eps_zero
        ]
        return min([self.settings.oracle_max_eps] + gaps)

    def support_cap(self, t: TestFunction) -> float:
        """Largest eps0 keeping every moving point w - eps clear of the support ends of t.

        A point within the flat edge zone of t stays inside that zone, where t
        vanishes; any other point stays within half its distance to each end.
        """
        a, b = t.support
        zone = t.edge_zone
        cap = self.settings.oracle_max_eps
        for w in self.G.breakpoints:
            if w < a - zone:
                continue
            for end in (a, b):
                distance = abs(w - end)
                if distance <= max(zone, self.settings.eps_zero):
                    if zone > 0:
                        cap = min(cap, zone / 2.0)
                else:
                    cap = min(cap, distance / 2.0)
        return cap

    def ladder(self, eps0: float) -> Tuple[float, ...]:
        return tuple(eps0 * 2.0**-j for j in range(1, self.settings.oracle_levels + 1))

    @property
    def products(self) -> List[Distribution]:
        return self.products_from(self.eps0)

    def products_from(self, eps0: float) -> List[Distribution]:
        if eps0 not in self._products:
            self._products[eps0] = [
                hormander_product(self.F, translate(self.G, eps, self.settings), self.settings)
                for eps in self.ladder(eps0)
            ]
        return self._products[eps0]

    def samples(self, t: TestFunction, eps0: Optional[float] = None) -> List[Scalar]:
        start = self.eps0 if eps0 is None else eps0
        return [pair(P, t, self.settings) for P in self.products_from(start)]

    def pair(self, t: TestFunction) -> OracleResult:
        eps0 = min(self.eps0, self.support_cap(t))
        if eps0 < self.eps0:
            log.debug(f"ladder for support {t.support!r} starts at {eps0!r}")
        value, error = richardson_limit(2.0, self.samples(t, eps0))
        tol = self.settings.oracle_tol
        if error > tol * max(1.0, abs(value)):
            raise NonConvergence(value, error, tol)
        return OracleResult(value, error, self.ladder(eps0))


def star_limit_oracle(
    F: Distribution, G: Distribution, t: TestFunction, settings: KernelSettings = DEFAULTS
) -> Scalar:
    """One-shot limit pairing; raises NonConvergence when the extrapolation is unstable"""
    return LimitOracle(F, G, settings).pair(t).value
