"""
Free particle Hamiltonians on the whole line, confined to half-lines through
delta-hat correction terms.

H_C = -d^2 + deltaplus(1) + 2 deltaplus(0) d
H_S = H_C restricted to psi_-(0) = psi_-'(0) = psi_+(0) = psi_+'(0) = 0
H_D = -d^2 + deltaminus(1) + deltaminus(0) - deltaplus(1) + deltaplus(0)

Writing a, a', b, b' for psi_-(0), psi_-'(0), psi_+(0), psi_+'(0), the combs
left at 0 are a delta' + a' delta for H_C and 2(a - b) delta' + (a + b) delta
for H_D. The maximal domains are where these vanish.
"""

import re
from typing import Dict, List, Tuple

from ..algebra import Distribution, PiecewiseSmooth, make_distribution
from ..errors import DomainViolation, NumericalOverflow
from ..expr import Scalar, chop
from ..utils.config_loader import DEFAULTS, KernelSettings
from ..utils.logger import KernelLogger
from .operators import (
    Compose,
    DeltaMinus,
    DeltaPlus,
    Derivative,
    Named,
    OperatorExpr,
    Project,
    Restricted,
    SecondDerivativeNeg,
    project,
)
from .wavefunction import WaveFunction

log = KernelLogger("schrodinger")

MINUS_VALUE = "psi_-(0) = 0"
MINUS_SLOPE = "psi_-'(0) = 0"
PLUS_VALUE = "psi_+(0) = 0"
PLUS_SLOPE = "psi_+'(0) = 0"

CONDITIONS: Dict[str, Tuple[str, ...]] = {
    "HC": (MINUS_VALUE, MINUS_SLOPE),
    "HS": (MINUS_VALUE, MINUS_SLOPE, PLUS_VALUE, PLUS_SLOPE),
    "HD": (MINUS_VALUE, PLUS_VALUE),
}


def boundary_data(psi: Distribution) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
    """(psi_-(0), psi_-'(0), psi_+(0), psi_+'(0))"""
    return WaveFunction.of(psi).boundary_data()


def violated_conditions(
    operator: str, psi: Distribution, settings: KernelSettings = DEFAULTS
) -> List[str]:
    """Boundary conditions of the operator's maximal domain that psi fails"""
    a, da, b, db = boundary_data(psi)
    values = {MINUS_VALUE: a, MINUS_SLOPE: da, PLUS_VALUE: b, PLUS_SLOPE: db}
    return [c for c in CONDITIONS[operator] if chop(values[c], settings.eps_zero) != 0]


def decays(psi: Distribution, settings: KernelSettings = DEFAULTS) -> bool:
    """|psi|^2 at the ends of the truncation window is below the decay bound"""
    L = settings.window
    try:
        return all(abs(psi.piece_at(x)(x)) ** 2 <= settings.decay_bound for x in (-L, L))
    except NumericalOverflow:
        return False


def _in_domain(
    operator: str, psi: Distribution, check_decay: bool, settings: KernelSettings
) -> bool:
    if violated_conditions(operator, psi, settings):
        return False
    return decays(psi, settings) if check_decay else True


def in_domain_max_HC(
    psi: Distribution, check_decay: bool = False, settings: KernelSettings = DEFAULTS
) -> bool:
    return _in_domain("HC", psi, check_decay, settings)


def in_domain_HS(
    psi: Distribution, check_decay: bool = False, settings: KernelSettings = DEFAULTS
) -> bool:
    return _in_domain("HS", psi, check_decay, settings)


def in_domain_max_HD(
    psi: Distribution, check_decay: bool = False, settings: KernelSettings = DEFAULTS
) -> bool:
    return _in_domain("HD", psi, check_decay, settings)


def require_domain(operator: str):
    def guard(psi: Distribution, settings: KernelSettings = DEFAULTS) -> None:
        failed = violated_conditions(operator, psi, settings)
        if failed:
            raise DomainViolation(operator, ", ".join(failed))

    return guard


H_C = Named(
    "HC",
    SecondDerivativeNeg() + DeltaPlus(1) + 2 * Compose(DeltaPlus(0), Derivative()),
)
H_S = Named("HS", Restricted(H_C, require_domain("HS")))
H_D = Named(
    "HD",
    SecondDerivativeNeg() + DeltaMinus(1) + DeltaMinus(0) - DeltaPlus(1) + DeltaPlus(0),
)
P_PLUS = Named("Pplus", Project(1))
P_MINUS = Named("Pminus", Project(-1))
DX = Named("dx", Derivative())

_NAMED: Dict[str, OperatorExpr] = {
    "HC": H_C,
    "HS": H_S,
    "HD": H_D,
    "Pplus": P_PLUS,
    "Pminus": P_MINUS,
    "dx": DX,
}
_INDEXED = re.compile(r"^(deltaplus|deltaminus)\((\d+)\)$")


def operator_from_name(name: str) -> OperatorExpr:
    """HC, HS, HD, Pplus, Pminus, dx, deltaplus(n) or deltaminus(n)"""
    text = name.strip().replace(" ", "")
    if text in _NAMED:
        return _NAMED[text]
    match = _INDEXED.match(text)
    if match:
        kind, order = match.group(1), int(match.group(2))
        primitive = DeltaPlus(order) if kind == "deltaplus" else DeltaMinus(order)
        return Named(text, primitive)
    known = ", ".join(list(_NAMED) + ["deltaplus(n)", "deltaminus(n)"])
    raise ValueError(f"unknown operator '{name}', expected one of {known}")


def hc_reduced_form(psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    """-theta(-x) psi_-'' - theta(x) psi_+'': H_C on its maximal domain"""
    wave = WaveFunction.of(psi)
    minus = -wave.minus_part.derivative.derivative
    plus = -wave.plus_part.derivative.derivative
    return make_distribution(PiecewiseSmooth((0.0,), (minus, plus)), (), settings)


def hd_boundary_combs(psi: Distribution) -> Tuple[Scalar, Scalar]:
    """(delta' coefficient, delta coefficient) that H_D leaves at 0"""
    a, _, b, _ = boundary_data(psi)
    return 2 * (a - b), a + b


def apply_HC(psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    wave = WaveFunction.of(psi)
    result = H_C(wave, settings)
    if wave.breakpoints in ((), (0.0,)) and in_domain_max_HC(wave, settings=settings):
        reduced = hc_reduced_form(wave, settings)
        if result.has_deltas or not result.equals(reduced, settings=settings):
            log.warning(f"H_C image of {wave} disagrees with the reduced form {reduced}")
    return result


def apply_HS(psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    return H_S(WaveFunction.of(psi), settings)


def apply_HD(psi: Distribution, settings: KernelSettings = DEFAULTS) -> Distribution:
    return H_D(WaveFunction.of(psi), settings)


def commutator_HD_P(
    sign: int, psi: Distribution, settings: KernelSettings = DEFAULTS
) -> Distribution:
    """[H_D, P+-] psi; zero on the maximal domain of H_D"""
    wave = WaveFunction.of(psi)
    require_domain("HD")(wave, settings)
    left = apply_HD(project(sign, wave, settings), settings)
    right = project(sign, apply_HD(wave, settings), settings)
    return left - right
