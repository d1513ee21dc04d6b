"""Exact finite-field Fourier toolkit.

Constructs finite fields, multiplicative and additive characters, Gauss
sums, and compressed Fourier matrices in exact cyclotomic arithmetic, and
decides the nonvanishing-minors property both by exhaustive minor
enumeration and by the closed-form index-3 criterion.

Objects derived from a :class:`Field` (elements, subgroups, characters)
hold a reference to it; keep the field in scope while using them.
"""

from ._core import (  # noqa: F401
    AddCharacter,
    BoundCheck,
    CftMatrix,
    CharSelector,
    CycMatrix,
    CycNum,
    Field,
    FieldElement,
    GaussSumSet,
    GroupAlgebraElement,
    MinorWitness,
    MultCharacter,
    NvmMethod,
    NvmReport,
    OrderLimitError,
    Spectrum,
    Subgroup,
    SubgroupChar,
    TSums,
    annihilator,
    apply_symmetry_action,
    canonical_character,
    cft_matrix,
    chebotarev_check,
    cyclotomic_polynomial,
    det_exact,
    euler_phi,
    extend_from_representatives,
    extensions,
    factor_prime_power,
    fourier_transform,
    gauss_set,
    gauss_sum,
    inverse_fourier,
    is_chi_symmetric,
    kernel_vector,
    known_criterion,
    make_field_for_q,
    max_cyclotomic_order,
    nvm_brute,
    nvm_instance,
    nvm_theorem_index3_nontrivial,
    orbit_representatives,
    restrict_char,
    scan_range,
    set_max_cyclotomic_order,
    support,
    support_hat,
    t_sums,
    t_sums_from,
    uncertainty_bound_holds,
    uncertainty_bound_report,
    violation_witness,
)

__all__ = [
    "AddCharacter",
    "BoundCheck",
    "CftMatrix",
    "CharSelector",
    "CycMatrix",
    "CycNum",
    "Field",
    "FieldElement",
    "GaussSumSet",
    "GroupAlgebraElement",
    "MinorWitness",
    "MultCharacter",
    "NvmMethod",
    "NvmReport",
    "OrderLimitError",
    "Spectrum",
    "Subgroup",
    "SubgroupChar",
    "TSums",
    "annihilator",
    "apply_symmetry_action",
    "canonical_character",
    "cft_matrix",
    "chebotarev_check",
    "cyclotomic_polynomial",
    "det_exact",
    "euler_phi",
    "extend_from_representatives",
    "extensions",
    "factor_prime_power",
    "fourier_transform",
    "gauss_set",
    "gauss_sum",
    "inverse_fourier",
    "is_chi_symmetric",
    "kernel_vector",
    "known_criterion",
    "make_field_for_q",
    "max_cyclotomic_order",
    "nvm_brute",
    "nvm_instance",
    "nvm_theorem_index3_nontrivial",
    "orbit_representatives",
    "restrict_char",
    "scan_range",
    "set_max_cyclotomic_order",
    "support",
    "support_hat",
    "t_sums",
    "t_sums_from",
    "uncertainty_bound_holds",
    "uncertainty_bound_report",
    "violation_witness",
]

__version__ = "0.1.0"
