import pytest
import sympy

from distalg.algebra import (
    ZERO_DISTRIBUTION,
    PiecewiseSmooth,
    dirac,
    heaviside,
    make_distribution,
    smooth,
    window,
)
from distalg.expr import X, SmoothExpr
from distalg.syntax import delta_name, format_ast, format_dist, parse_dist, shift_text


class TestFormatAst:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("(theta(x))*((sin(2*x)))", "theta(x)*sin(2*x)"),
            ("theta(x)*sin(2*x)+3*delta(x)", "theta(x)*sin(2*x) + 3*delta(x)"),
            ("x - (1 - x)", "x - (1 - x)"),
            ("(x - 1) - x", "x - 1 - x"),
            ("-(x + 1)", "-(x + 1)"),
            ("(x + 1)^2", "(x + 1)^2"),
            ("delta(x)**theta(x)", "delta(x) ** theta(x)"),
            ("D[ delta'(x - 1) ]", "D[delta'(x - 1)]"),
            ("delta^(3)(x)", "delta^(3)(x)"),
            ("delta^(2)(x)", "delta''(x)"),
        ],
    )
    def test_minimal_parentheses(self, text, expected):
        assert format_ast(parse_dist(text)) == expected

    def test_formatting_is_a_fixed_point(self):
        text = "theta(x - 1)*(x^2 - 3) ** (delta'(x) + D[theta(-x)])"
        once = format_ast(parse_dist(text))
        assert format_ast(parse_dist(once)) == once


class TestShiftText:
    def test_right_steps(self):
        assert shift_text(0.0) == "x"
        assert shift_text(1.5) == "x - 1.5"
        assert shift_text(-2.0) == "x + 2"

    def test_left_steps(self):
        assert shift_text(0.0, -1) == "-x"
        assert shift_text(1.0, -1) == "1 - x"
        assert shift_text(-1.0, -1) == "-1 - x"


def test_delta_names():
    assert delta_name(0) == "delta"
    assert delta_name(2) == "delta''"
    assert delta_name(3) == "delta^(3)"


class TestFormatDist:
    def test_zero(self):
        assert format_dist(ZERO_DISTRIBUTION) == "0"

    def test_steps(self):
        assert format_dist(heaviside(0.0)) == "theta(x)"
        assert format_dist(heaviside(0.0, -1)) == "theta(-x)"
        assert format_dist(-heaviside(1.0)) == "-theta(x - 1)"

    def test_window(self):
        assert format_dist(window(0.0, 1.0)) == "theta(x)*theta(1 - x)"

    def test_combs(self):
        assert format_dist(dirac(1.0, 2, 3)) == "3*delta''(x - 1)"
        assert format_dist(dirac(-2.0, 3)) == "delta^(3)(x + 2)"
        assert format_dist(dirac(0.0, 1, -1)) == "-delta'(x)"
        assert format_dist(dirac(0.0, 0, 2j)) == "2*I*delta(x)"

    def test_combs_in_ascending_point_then_order(self):
        F = dirac(1.0, 1) + dirac(-1.0) + dirac(1.0)
        assert format_dist(F) == "delta(x + 1) + delta(x - 1) + delta'(x - 1)"

    def test_pieces_then_combs(self):
        F = make_distribution(
            PiecewiseSmooth((0.0,), (SmoothExpr(0), SmoothExpr(sympy.sin(2 * X))))
        ) + dirac(0.0, 0, -3)
        assert format_dist(F) == "sin(2*x)*theta(x) - 3*delta(x)"

    def test_sum_pieces_are_parenthesized(self):
        F = make_distribution(PiecewiseSmooth((0.0,), (SmoothExpr(0), SmoothExpr(X + 1))))
        assert format_dist(F) == "(x + 1)*theta(x)"

    def test_smooth_distribution(self):
        assert format_dist(smooth(X**2)) == "x^2"

    def test_three_pieces(self):
        F = make_distribution(
            PiecewiseSmooth((-1.0, 1.0), (SmoothExpr(1), SmoothExpr(X), SmoothExpr(2)))
        )
        assert format_dist(F) == (
            "theta(-1 - x) + x*theta(x + 1)*theta(1 - x) + 2*theta(x - 1)"
        )
