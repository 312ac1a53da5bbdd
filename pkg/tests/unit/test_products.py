import pytest
import sympy

from distalg.algebra import (
    ZERO_DISTRIBUTION,
    DeltaComb,
    constant,
    dirac,
    heaviside,
    hormander_product,
    smooth,
    smooth_times_comb,
    star,
    star_power,
    window,
)
from distalg.algebra.products import overlap
from distalg.errors import OverlappingSingularSupports
from distalg.expr import ONE, X, SmoothExpr


@pytest.fixture
def theta():
    return heaviside(0.0)


@pytest.fixture
def delta():
    return dirac(0.0)


class TestSmoothTimesComb:
    def test_cos_times_delta(self):
        comb = smooth_times_comb(SmoothExpr(sympy.cos(X)), DeltaComb(0.0, (1,)))
        assert comb.coeffs == (1,)

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_sin_times_delta_prime(self, k):
        comb = smooth_times_comb(SmoothExpr(sympy.sin(k * X)), DeltaComb(0.0, (0, 1)))
        assert comb.coeffs == pytest.approx((-k,))

    def test_unit_function(self):
        comb = DeltaComb(2.0, (1, -2, 3))
        assert smooth_times_comb(ONE, comb) == comb

    def test_second_order_expansion(self):
        # x^2 delta'' = 2 delta
        comb = smooth_times_comb(SmoothExpr(X**2), DeltaComb(0.0, (0, 0, 1)))
        assert comb.coeffs == pytest.approx((2,))

    def test_vanishing_product(self):
        assert smooth_times_comb(SmoothExpr(sympy.sin(X)), DeltaComb(0.0, (1,))) is None


class TestHormanderProduct:
    def test_step_times_distant_delta(self, theta):
        result = hormander_product(theta, dirac(1.0))
        assert result.equals(dirac(1.0))

    def test_steps_multiply_on_merged_grid(self, theta):
        assert hormander_product(theta, heaviside(1.0)).equals(heaviside(1.0))

    def test_overlapping_supports_raise(self, delta):
        message = r"use the star product '\*\*'"
        with pytest.raises(OverlappingSingularSupports, match=message) as info:
            hormander_product(delta, delta)
        assert info.value.points == (0.0,)

    def test_smooth_factor_is_always_allowed(self, delta):
        result = hormander_product(smooth(sympy.exp(X)), dirac(0.0, 1))
        # exp delta' = delta' - delta
        assert result.comb_at(0.0).coeffs == pytest.approx((-1, 1))

    def test_overlap(self, theta):
        assert overlap(theta, window(-1.0, 0.0)) == [0.0]
        assert overlap(theta, heaviside(2.0)) == []


class TestStar:
    def test_delta_star_theta(self, delta, theta):
        assert star(delta, theta).equals(delta)

    def test_theta_star_delta(self, delta, theta):
        assert star(theta, delta) == ZERO_DISTRIBUTION

    def test_delta_star_delta(self, delta):
        assert star(delta, delta) == ZERO_DISTRIBUTION

    def test_theta_star_theta(self, theta):
        assert star(theta, theta).equals(theta)

    def test_non_commutative(self, delta, theta):
        assert not star(delta, theta).equals(star(theta, delta))

    def test_smooth_factor_in_both_orders(self, delta):
        cos = smooth(sympy.cos(X))
        assert star(cos, delta).equals(delta)
        assert star(delta, cos).equals(delta)

    def test_left_and_right_extensions(self):
        # comb of the left factor sees the right piece of the right factor
        left_step = heaviside(0.0, -1)
        assert star(dirac(0.0), left_step) == ZERO_DISTRIBUTION
        assert star(left_step, dirac(0.0)).equals(dirac(0.0))

    def test_unity(self, delta, theta):
        F = theta + dirac(0.0, 2)
        assert star(constant(1), F).equals(F)
        assert star(F, constant(1)).equals(F)

    def test_star_power(self, theta):
        assert star_power(theta, 3).equals(theta)
        assert star_power(theta, 0).equals(constant(1))
        with pytest.raises(ValueError):
            star_power(theta, -1)
