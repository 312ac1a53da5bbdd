"""
Exception hierarchy for the distribution kernel
"""

from typing import Iterable, Optional, Sequence


class DistAlgError(Exception):
    """Base class for every kernel error"""

    #: formatted source of the subexpression being lowered when the error occurred
    subexpression: Optional[str] = None


# expressions


class ExprError(DistAlgError):
    """Errors of smooth expressions"""


class NonSmoothConstruct(ExprError):
    """A construct that would break global smoothness of a piece"""

    def __init__(self, construct: str):
        self.construct = construct
        super().__init__(
            f"non-smooth construct '{construct}': pieces must be infinitely smooth on "
            "all of R (no division by non-constants, fractional or negative powers, "
            "sqrt, abs, log)"
        )


class NumericalOverflow(ExprError):
    """Evaluation produced an infinite or undefined value"""

    def __init__(self, expr: str, x0: float):
        self.expr = expr
        self.x0 = x0
        super().__init__(f"evaluation of {expr} at x={x0!r} overflowed")


# syntax


class DistSyntaxError(DistAlgError):
    """Text that does not conform to the grammar"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class UnknownIdentifier(DistSyntaxError):
    """An identifier the grammar does not know"""

    def __init__(self, name: str, line: int = 1, column: int = 1):
        self.name = name
        super().__init__(f"unknown identifier '{name}'", line, column)


# algebra


class AlgebraError(DistAlgError):
    """Errors of the distribution algebra"""


class OverlappingSingularSupports(AlgebraError):
    """Hörmander product requested for factors sharing singular points"""

    def __init__(self, points: Iterable[float]):
        self.points = tuple(sorted(points))
        listed = ", ".join(repr(p) for p in self.points)
        super().__init__(
            f"singular supports overlap at {{{listed}}}; the Hörmander product is "
            "undefined there, use the star product '**' instead"
        )


class InvalidTestFunction(AlgebraError):
    """A test function that is not compactly supported and smooth"""


class QuadratureError(AlgebraError):
    """Adaptive quadrature failed to reach the requested tolerance"""

    def __init__(self, interval: Sequence[float], achieved: float, message: str = ""):
        self.interval = tuple(interval)
        self.achieved = achieved
        detail = f": {message}" if message else ""
        super().__init__(
            f"quadrature on [{interval[0]!r}, {interval[1]!r}] did not converge, "
            f"achieved error estimate {achieved:.3g}{detail}"
        )


class NonConvergence(AlgebraError):
    """Extrapolated epsilon-limit is not stable within tolerance"""

    def __init__(self, estimate: complex, error: float, tol: float):
        self.estimate = estimate
        self.error = error
        self.tol = tol
        super().__init__(
            f"limit extrapolation did not converge: estimate {estimate!r} with error "
            f"{error:.3g} > tolerance {tol:.3g}"
        )


# schrodinger


class SchrodingerError(DistAlgError):
    """Errors of the confined Hamiltonian layer"""


class DomainViolation(SchrodingerError):
    """A wave function outside the domain of the operator"""

    def __init__(self, operator: str, condition: str):
        self.operator = operator
        self.condition = condition
        super().__init__(f"wave function is not in the domain of {operator}: {condition}")


class UnsupportedShape(SchrodingerError):
    """Wave function with breakpoints away from the origin"""


class NotAWaveFunction(SchrodingerError):
    """Distribution carrying delta combs used as a wave function"""


class NotInL2(SchrodingerError):
    """Operator image containing delta combs, so no L2 pairing exists"""


class DecayCheckFailed(SchrodingerError):
    """Integrand too large at the truncation window boundary"""

    def __init__(self, window: float, magnitude: float, bound: float):
        self.window = window
        self.magnitude = magnitude
        super().__init__(
            f"integrand magnitude {magnitude:.3g} at |x|={window!r} exceeds the decay "
            f"bound {bound:.3g}; truncated inner product would be unreliable"
        )
