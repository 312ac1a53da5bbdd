"""
Eigenvalue checks, the truncated L2 inner product and symmetry defects
"""

from typing import Union

import numpy as np
import sympy

from ..algebra import Distribution, integrate_complex, merge_points
from ..errors import DecayCheckFailed, NotInL2, NumericalOverflow
from ..expr import X, Scalar, to_sympy
from ..utils.config_loader import DEFAULTS, KernelSettings
from ..utils.logger import KernelLogger
from .operators import OperatorExpr
from .wavefunction import EnergyValue, WaveFunction

log = KernelLogger("spectral")


def is_eigenfunction(
    H: OperatorExpr,
    psi: Distribution,
    E: Union[EnergyValue, float],
    tol: float = DEFAULTS.eps_zero,
    settings: KernelSettings = DEFAULTS,
) -> bool:
    """H psi - E psi normalizes to zero"""
    return eigen_residual(H, psi, E, settings).is_zero(tol, settings)


def eigen_residual(
    H: OperatorExpr,
    psi: Distribution,
    E: Union[EnergyValue, float],
    settings: KernelSettings = DEFAULTS,
) -> Distribution:
    energy = EnergyValue.of(E)
    return H(psi, settings) - energy.E * psi


def inner_product(
    phi: Distribution, psi: Distribution, settings: KernelSettings = DEFAULTS
) -> Scalar:
    """<phi, psi> = integral of conj(phi) psi over [-L, L], L = settings.window"""
    phi, psi = WaveFunction.of(phi), WaveFunction.of(psi)
    L = settings.window
    for end in (-L, L):
        try:
            magnitude = abs(np.conj(phi.piece_at(end)(end)) * psi.piece_at(end)(end))
        except NumericalOverflow:
            magnitude = float("inf")
        if magnitude > settings.decay_bound:
            raise DecayCheckFailed(L, magnitude, settings.decay_bound)

    inside = [w for w in merge_points(phi.breakpoints, psi.breakpoints) if -L < w < L]
    cuts = [-L] + inside + [L]
    total = 0j
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        mid = (lo + hi) / 2.0
        f, g = phi.piece_at(mid), psi.piece_at(mid)
        if f.is_zero_structurally() or g.is_zero_structurally():
            continue

        def integrand(x, f=f.kernel, g=g.kernel):
            return np.conj(complex(f(x))) * complex(g(x))

        imaginary = f.expr.has(sympy.I) or g.expr.has(sympy.I)
        total += integrate_complex(integrand, lo, hi, settings, imaginary=imaginary)
    return total


def symmetry_defect(
    H: OperatorExpr,
    phi: Distribution,
    psi: Distribution,
    settings: KernelSettings = DEFAULTS,
) -> Scalar:
    """<H phi, psi> - <phi, H psi>"""
    H_phi = H(phi, settings)
    H_psi = H(psi, settings)
    for name, image in (("phi", H_phi), ("psi", H_psi)):
        if image.has_deltas:
            raise NotInL2(
                f"{H}({name}) contains delta combs at "
                f"{[d.point for d in image.deltas]!r}; the L2 pairing is undefined"
            )
    defect = inner_product(H_phi, psi, settings) - inner_product(phi, H_psi, settings)
    log.debug(f"symmetry defect of {H}: {defect!r}")
    return defect


def confined_eigenfunction(k: float, a: float = 1.0, b: float = 0.0) -> WaveFunction:
    """theta(x) (a sin kx + b cos kx)"""
    kx = to_sympy(float(k)) * X
    plus = to_sympy(a) * sympy.sin(kx) + to_sympy(b) * sympy.cos(kx)
    return WaveFunction.from_parts(0, plus)


def dirichlet_eigenfunction(sign: int, k: float) -> WaveFunction:
    """theta(+-x) sin kx"""
    wave = sympy.sin(to_sympy(float(k)) * X)
    if sign > 0:
        return WaveFunction.from_parts(0, wave)
    return WaveFunction.from_parts(wave, 0)
