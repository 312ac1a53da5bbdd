import math

import numpy as np
import pytest
import sympy

from distalg.algebra import (
    TestFunction,
    constant,
    dirac,
    heaviside,
    integrate_complex,
    pair,
    translate,
    window,
)
from distalg.errors import InvalidTestFunction
from distalg.expr import X

# integral of exp(-1/(1 - x^2)) over [-1, 1]
BUMP_MASS = 0.443993816


@pytest.fixture
def bump():
    return TestFunction.bump(0.0, 1.0)


class TestBump:
    def test_values(self, bump):
        assert bump(0.0) == pytest.approx(math.exp(-1))
        assert bump(1.0) == 0
        assert bump(-2.0) == 0
        assert bump.center == 0.0

    def test_derivatives_at_center(self, bump):
        assert bump.derivative_at(0.0, 1) == pytest.approx(0, abs=1e-15)
        assert bump.derivative_at(0.0, 2) == pytest.approx(-2 * math.exp(-1))

    def test_derivatives_vanish_near_the_edges(self, bump):
        values = bump.derivative_values(np.array([-0.9999, 0.9999]), 3)
        assert np.all(np.abs(values) < 1e-20)

    def test_support(self):
        t = TestFunction.bump(0.5, 2.0)
        assert t.support == (-1.5, 2.5)
        with pytest.raises(InvalidTestFunction):
            TestFunction.bump(0.0, 0.0)

    def test_shifted(self, bump):
        moved = bump.shifted(0.5)
        assert moved.support == (-0.5, 1.5)
        assert moved(0.5) == pytest.approx(math.exp(-1))

    def test_edge_zone_is_exactly_zero(self, bump):
        zone = bump.edge_zone
        assert 0 < zone < 0.01
        inside = np.array([1.0 - 0.9 * zone, -1.0 + 0.5 * zone])
        for j in range(4):
            assert np.all(bump.derivative_values(inside, j) == 0)
        assert bump(1.0 - 1.1 * zone) != 0
        assert TestFunction.bump(0.0, 2.0).edge_zone == pytest.approx(2 * zone)


class TestUserTestFunctions:
    def test_flat_polynomial_is_accepted(self):
        t = TestFunction.from_expr((1 - X**2) ** 5, -1.0, 1.0)
        assert t(0.0) == pytest.approx(1)
        assert t(2.0) == 0
        assert t.edge_zone == 0.0

    def test_non_flat_expression_is_rejected(self):
        with pytest.raises(InvalidTestFunction, match="derivative 1"):
            TestFunction.from_expr((1 - X**2) ** 1, -1.0, 1.0, order=2)
        with pytest.raises(InvalidTestFunction, match="derivative 0"):
            TestFunction.from_expr(sympy.cos(X), -1.0, 1.0)

    def test_unbounded_support_is_rejected(self):
        with pytest.raises(InvalidTestFunction):
            TestFunction(sympy.Integer(0), (0.0, float("inf")))

    def test_foreign_symbols_are_rejected(self):
        with pytest.raises(InvalidTestFunction):
            TestFunction(sympy.Symbol("y"), (0.0, 1.0))


class TestPair:
    def test_delta(self, bump):
        assert pair(dirac(0.0), bump) == pytest.approx(math.exp(-1))

    def test_delta_prime_is_minus_t_prime(self, bump):
        assert pair(dirac(0.0, 1), bump) == pytest.approx(0, abs=1e-15)
        shifted = TestFunction.bump(0.5, 1.0)
        # -t'(0) with u = -1/2: t'(0) = t(0) * (-2u) / (1 - u^2)^2
        expected = -math.exp(-4 / 3) * 1.0 / 0.75**2
        assert pair(dirac(0.0, 1), shifted) == pytest.approx(expected)

    def test_delta_double_prime(self, bump):
        assert pair(dirac(0.0, 2), bump) == pytest.approx(-2 * math.exp(-1))

    def test_heaviside_halves_the_mass(self, bump):
        right = pair(heaviside(0.0), bump)
        left = pair(heaviside(0.0, -1), bump)
        assert right == pytest.approx(left)
        assert right + left == pytest.approx(pair(constant(1), bump))
        assert pair(constant(1), bump) == pytest.approx(BUMP_MASS, rel=1e-6)

    def test_linearity(self, bump):
        F = 2 * dirac(0.0) + heaviside(0.0)
        expected = 2 * math.exp(-1) + BUMP_MASS / 2
        assert pair(F, bump) == pytest.approx(expected, rel=1e-6)

    def test_outside_support_is_zero(self, bump):
        assert pair(window(2.0, 3.0) + dirac(5.0, 1), bump) == 0

    def test_translation_moves_the_test_function(self):
        F = window(-0.3, 0.4, X) + dirac(0.1, 1)
        t = TestFunction.bump(0.2, 1.0)
        eps = 0.15
        assert pair(translate(F, eps), t) == pytest.approx(pair(F, t.shifted(eps)), abs=1e-9)

    def test_complex_integrand(self, bump):
        value = pair(constant(1j), bump)
        assert value.imag == pytest.approx(BUMP_MASS, rel=1e-6)
        assert value.real == pytest.approx(0, abs=1e-12)


def test_integrate_complex():
    assert integrate_complex(lambda x: 1j * x, 0.0, 1.0) == pytest.approx(0.5j)
    assert integrate_complex(lambda x: x, 0.0, 2.0, imaginary=False) == pytest.approx(2.0)
