import logging

import pytest
import sympy

from distalg.algebra import dirac, heaviside, hormander_product, smooth
from distalg.errors import DomainViolation, NotAWaveFunction
from distalg.expr import X
from distalg.schrodinger import (
    H_C,
    H_D,
    WaveFunction,
    apply_HC,
    apply_HD,
    apply_HS,
    boundary_data,
    commutator_HD_P,
    decays,
    hc_reduced_form,
    hd_boundary_combs,
    in_domain_HS,
    in_domain_max_HC,
    in_domain_max_HD,
    violated_conditions,
)


def theta_times(expr):
    return hormander_product(heaviside(0.0), smooth(expr))


@pytest.fixture
def theta_sin2x():
    return theta_times(sympy.sin(2 * X))


@pytest.fixture
def theta_cos():
    return theta_times(sympy.cos(X))


class TestApplyHC:
    def test_confined_sine_is_an_eigenfunction(self, theta_sin2x):
        assert apply_HC(theta_sin2x).equals(4 * theta_sin2x)

    def test_image_matches_reduced_form_without_warning(self, theta_sin2x, caplog):
        with caplog.at_level(logging.WARNING, logger="distalg"):
            result = apply_HC(theta_sin2x)
        assert result.equals(hc_reduced_form(theta_sin2x))
        assert not caplog.records

    def test_combs_left_outside_the_domain(self):
        # a delta' + a' delta with a = psi_-(0), a' = psi_-'(0)
        psi = WaveFunction.from_parts(2 + 3 * X, sympy.exp(-X))
        comb = apply_HC(psi).comb_at(0.0)
        assert comb.coeffs == pytest.approx((3, 2))

    def test_right_boundary_values_are_free(self, theta_cos):
        assert not apply_HC(theta_cos).has_deltas

    def test_rejects_combs(self):
        with pytest.raises(NotAWaveFunction):
            apply_HC(dirac(0.0))


class TestApplyHD:
    def test_dirichlet_sine(self):
        psi = theta_times(sympy.sin(X))
        assert apply_HD(psi).equals(psi)

    def test_cosine_leaves_combs(self, theta_cos):
        result = apply_HD(theta_cos)
        assert result.has_deltas
        # 2(a - b) delta' + (a + b) delta with a = 0, b = 1
        assert result.comb_at(0.0).coeffs == pytest.approx((1, -2))

    def test_predicted_combs(self):
        psi = WaveFunction.from_parts(1 + X, 2 - X**2)
        dprime, d = hd_boundary_combs(psi)
        assert (dprime, d) == pytest.approx((-2, 3))
        assert apply_HD(psi).comb_at(0.0).coeffs == pytest.approx((d, dprime))


class TestApplyHS:
    def test_inside_the_domain(self):
        psi = theta_times(X**2 * sympy.exp(-X))
        assert apply_HS(psi).equals(apply_HC(psi))

    def test_outside_the_domain(self, theta_sin2x):
        with pytest.raises(DomainViolation, match="psi_\\+'\\(0\\) = 0") as info:
            apply_HS(theta_sin2x)
        assert info.value.operator == "HS"


class TestDomains:
    def test_boundary_data(self, theta_sin2x):
        assert boundary_data(theta_sin2x) == pytest.approx((0, 0, 0, 2))

    def test_violated_conditions(self, theta_cos):
        assert violated_conditions("HD", theta_cos) == ["psi_+(0) = 0"]
        assert violated_conditions("HC", theta_cos) == []

    def test_predicates(self, theta_sin2x, theta_cos):
        assert in_domain_max_HC(theta_sin2x)
        assert not in_domain_HS(theta_sin2x)
        assert in_domain_max_HD(theta_sin2x)
        assert not in_domain_max_HD(theta_cos)
        assert not in_domain_max_HC(smooth(1))

    def test_decay_filter(self, theta_sin2x):
        decaying = theta_times(X * sympy.exp(-X))
        assert decays(decaying)
        assert not decays(theta_sin2x)
        assert in_domain_max_HC(decaying, check_decay=True)
        assert not in_domain_max_HC(theta_sin2x, check_decay=True)

    def test_overflow_at_the_window_does_not_decay(self):
        assert not decays(theta_times(sympy.exp(X**3)))


class TestCommutator:
    @pytest.mark.parametrize("sign", [1, -1])
    def test_vanishes_on_the_dirichlet_domain(self, sign):
        psi = WaveFunction.from_parts(X * sympy.exp(X), X - X**3)
        assert commutator_HD_P(sign, psi).is_zero(1e-8)

    def test_requires_the_domain(self, theta_cos):
        with pytest.raises(DomainViolation):
            commutator_HD_P(1, theta_cos)


def test_operator_objects_match_functions(theta_sin2x):
    assert H_C(theta_sin2x).equals(apply_HC(theta_sin2x))
    assert H_D(theta_sin2x).equals(apply_HD(theta_sin2x))
