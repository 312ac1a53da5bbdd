import math

import pytest
import sympy

from distalg.algebra import (
    LimitOracle,
    TestFunction,
    dirac,
    heaviside,
    pair,
    richardson_limit,
    smooth,
    star,
    star_limit_oracle,
)
from distalg.errors import NonConvergence
from distalg.expr import X
from distalg.utils.config_loader import DEFAULTS


@pytest.fixture
def bump():
    return TestFunction.bump(0.0, 1.0)


class TestRichardson:
    def test_linear_error_is_removed(self):
        values = [1 + h for h in (1.0, 0.5, 0.25)]
        best, error = richardson_limit(2.0, values)
        assert best == pytest.approx(1)
        assert error == pytest.approx(0, abs=1e-12)

    def test_quadratic_error_is_removed(self):
        values = [2 + 3 * h + h**2 for h in (1.0, 0.5, 0.25, 0.125)]
        best, _ = richardson_limit(2.0, values)
        assert best == pytest.approx(2)

    def test_single_value_has_unknown_error(self):
        best, error = richardson_limit(2.0, [3.0])
        assert best == 3
        assert error == float("inf")


class TestLimitOracle:
    def test_epsilon_ladder(self):
        oracle = LimitOracle(heaviside(0.0), heaviside(0.2))
        assert oracle.eps0 == pytest.approx(0.2)
        assert len(oracle.epsilons) == DEFAULTS.oracle_levels
        assert oracle.epsilons[0] == pytest.approx(0.1)
        assert oracle.epsilons[-1] == pytest.approx(0.2 * 2.0**-12)

    def test_ladder_ignores_points_to_the_left(self):
        oracle = LimitOracle(heaviside(0.0), heaviside(-0.1))
        assert oracle.eps0 == DEFAULTS.oracle_max_eps

    def test_delta_theta(self, bump):
        assert star_limit_oracle(dirac(0.0), heaviside(0.0), bump) == pytest.approx(
            math.exp(-1), abs=1e-6
        )

    def test_theta_delta(self, bump):
        assert star_limit_oracle(heaviside(0.0), dirac(0.0), bump) == pytest.approx(0, abs=1e-6)

    def test_smooth_factors(self, bump):
        F, G = smooth(sympy.sin(X)), smooth(sympy.cos(X) + X)
        expected = pair(star(F, G), bump)
        assert star_limit_oracle(F, G, bump) == pytest.approx(expected, abs=1e-6)

    def test_one_ladder_many_test_functions(self):
        oracle = LimitOracle(dirac(0.0, 1), heaviside(0.0) * 3)
        for center in (-0.2, 0.0, 0.3):
            t = TestFunction.bump(center, 1.0)
            result = oracle.pair(t)
            # delta' meets 3 on the right: 3 delta'
            assert result.value == pytest.approx(-3 * t.derivative_at(0.0, 1), abs=1e-6)
            assert len(result.epsilons) == DEFAULTS.oracle_levels
            assert result.epsilons[0] <= oracle.epsilons[0]

    def test_unstable_extrapolation_is_reported(self, bump):
        short = DEFAULTS.with_overrides(oracle_levels=2)
        with pytest.raises(NonConvergence) as info:
            LimitOracle(heaviside(0.0), smooth(X), short).pair(bump)
        assert info.value.error > short.oracle_tol

    def test_comb_at_a_support_end(self):
        F, G = heaviside(-1.0), dirac(1.0, 3)
        t = TestFunction.bump(0.5, 0.5)
        result = LimitOracle(F, G).pair(t)
        assert result.value == pytest.approx(pair(star(F, G), t), abs=1e-9)
        assert result.epsilons[0] == pytest.approx(t.edge_zone / 4.0)

    def test_comb_near_a_support_end(self):
        F, G = heaviside(-1.0), dirac(1.0, 2) + dirac(0.0)
        t = TestFunction.bump(0.3, 0.5)
        expected = pair(star(F, G), t)
        assert star_limit_oracle(F, G, t) == pytest.approx(expected, abs=1e-6)


class TestSupportCap:
    def test_points_stay_within_half_their_distance_to_the_ends(self, bump):
        oracle = LimitOracle(heaviside(0.0), heaviside(0.3))
        assert oracle.support_cap(bump) == pytest.approx(0.35)

    def test_points_left_of_the_support_are_ignored(self, bump):
        oracle = LimitOracle(heaviside(0.0), heaviside(-3.0))
        assert oracle.support_cap(bump) == DEFAULTS.oracle_max_eps

    def test_point_on_a_flat_end_stays_in_the_edge_zone(self, bump):
        oracle = LimitOracle(heaviside(0.0), dirac(-1.0))
        assert oracle.support_cap(bump) == pytest.approx(bump.edge_zone / 2.0)

    def test_ladder_reused_for_equal_caps(self):
        oracle = LimitOracle(dirac(0.0), heaviside(0.0))
        oracle.pair(TestFunction.bump(0.0, 1.0))
        oracle.pair(TestFunction.bump(0.0, 1.2))
        assert len(oracle._products) == 1
