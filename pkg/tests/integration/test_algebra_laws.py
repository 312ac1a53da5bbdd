"""
Randomized algebraic laws of the star product
"""

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from distalg.algebra import (
    PiecewiseSmooth,
    add,
    constant,
    derivative,
    hormander_product,
    make_distribution,
    merge_points,
    scale,
    star,
)
from tests.strategies import LEFT_GRID, RIGHT_GRID, comb_free, distributions

LAW_TOL = 1e-8

laws = settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def pointwise_product(F, G):
    grid = merge_points(F.breakpoints, G.breakpoints)
    pieces = tuple(f * g for f, g in zip(F.smooth.on_grid(grid), G.smooth.on_grid(grid)))
    return make_distribution(PiecewiseSmooth(grid, pieces))


@pytest.mark.slow
@laws
@given(distributions(), distributions(), distributions())
def test_associativity(F, G, H):
    assert star(star(F, G), H).equals(star(F, star(G, H)), LAW_TOL)


@laws
@given(distributions(), distributions())
def test_leibniz_rule(F, G):
    lhs = derivative(star(F, G))
    rhs = add(star(derivative(F), G), star(F, derivative(G)))
    assert lhs.equals(rhs, LAW_TOL)


@laws
@given(distributions())
def test_constant_one_is_two_sided_unit(F):
    one = constant(1)
    assert star(one, F).equals(F, LAW_TOL)
    assert star(F, one).equals(F, LAW_TOL)


@laws
@given(comb_free, comb_free)
def test_comb_free_factors_multiply_pointwise(F, G):
    assert star(F, G).equals(pointwise_product(F, G), LAW_TOL)
    assert star(F, G).equals(star(G, F), LAW_TOL)


@pytest.mark.slow
@laws
@given(distributions(), distributions(), distributions())
def test_distributivity(F, G, H):
    assert star(F, add(G, H)).equals(add(star(F, G), star(F, H)), LAW_TOL)
    assert star(add(G, H), F).equals(add(star(G, F), star(H, F)), LAW_TOL)


@laws
@given(distributions(), distributions(), st.integers(min_value=-3, max_value=3))
def test_scalars_pass_through(F, G, c):
    assert star(scale(c, F), G).equals(scale(c, star(F, G)), LAW_TOL)
    assert star(F, scale(c, G)).equals(scale(c, star(F, G)), LAW_TOL)


@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(distributions(points=LEFT_GRID), distributions(points=RIGHT_GRID), st.booleans())
def test_star_agrees_with_hormander_on_disjoint_supports(F, G, swap):
    if swap:
        F, G = G, F
    assert star(F, G).equals(hormander_product(F, G), 1e-9)
