"""
Confined free particle: delta-hat operators, the Hamiltonians H_C, H_S and H_D,
the half-line projectors and their domain and spectral checks
"""

from .hamiltonians import (
    DX,
    H_C,
    H_D,
    H_S,
    P_MINUS,
    P_PLUS,
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
    operator_from_name,
    violated_conditions,
)
from .operators import (
    Compose,
    DeltaMinus,
    DeltaPlus,
    Derivative,
    Named,
    OperatorExpr,
    Project,
    Restricted,
    ScalarMultiple,
    SecondDerivativeNeg,
    Sum,
    delta_minus,
    delta_plus,
    project,
)
from .spectral import (
    confined_eigenfunction,
    dirichlet_eigenfunction,
    eigen_residual,
    inner_product,
    is_eigenfunction,
    symmetry_defect,
)
from .wavefunction import EnergyValue, WaveFunction

__all__ = [
    "DX",
    "H_C",
    "H_D",
    "H_S",
    "P_MINUS",
    "P_PLUS",
    "apply_HC",
    "apply_HD",
    "apply_HS",
    "boundary_data",
    "commutator_HD_P",
    "decays",
    "hc_reduced_form",
    "hd_boundary_combs",
    "in_domain_HS",
    "in_domain_max_HC",
    "in_domain_max_HD",
    "operator_from_name",
    "violated_conditions",
    "Compose",
    "DeltaMinus",
    "DeltaPlus",
    "Derivative",
    "Named",
    "OperatorExpr",
    "Project",
    "Restricted",
    "ScalarMultiple",
    "SecondDerivativeNeg",
    "Sum",
    "delta_minus",
    "delta_plus",
    "project",
    "confined_eigenfunction",
    "dirichlet_eigenfunction",
    "eigen_residual",
    "inner_product",
    "is_eigenfunction",
    "symmetry_defect",
    "EnergyValue",
    "WaveFunction",
]
