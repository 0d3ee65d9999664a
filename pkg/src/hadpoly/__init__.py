"""Exact Hadamard-product calculus on numerators of polynomial-interpolated
power series, with coefficient-inequality checkers and verification suites."""

from .analysis import (
    PropertyReport,
    RootIsolation,
    SymmetryCertificate,
    check_functional_eq,
    gamma_contract,
    gamma_expand,
    has_internal_zeros,
    interlaces,
    is_gamma_positive,
    is_log_concave,
    is_real_rooted,
    is_ulc,
    is_unimodal,
    isolate_roots,
    symmetry_certificate,
)
from .decomp import (
    SymDecomp,
    decomposition_is_gamma_positive,
    decomposition_is_interlacing,
    decomposition_is_nonnegative,
    defect1_ell,
    i_decompose,
    r_decompose,
)
from .ehrhart import ReeveData, closed_form, counterexample_report, product_f, reeve
from .generators import TrialConfig
from .operators import (
    HomogRep,
    bullet,
    bullet_monomial,
    diamond,
    diamond_power,
    f_from_h,
    h_from_f,
    hadamard,
    msupp,
    subdivision,
    w_inverse,
    w_transform,
)
from .poly import Poly, Rational, TaggedPoly, gcd, reflect, reverse

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "Rational",
    "TaggedPoly",
    "HomogRep",
    "SymDecomp",
    "PropertyReport",
    "SymmetryCertificate",
    "RootIsolation",
    "ReeveData",
    "TrialConfig",
    "gcd",
    "reverse",
    "reflect",
    "w_transform",
    "w_inverse",
    "subdivision",
    "f_from_h",
    "h_from_f",
    "hadamard",
    "bullet",
    "bullet_monomial",
    "diamond",
    "diamond_power",
    "msupp",
    "has_internal_zeros",
    "is_log_concave",
    "is_unimodal",
    "is_ulc",
    "is_real_rooted",
    "isolate_roots",
    "interlaces",
    "symmetry_certificate",
    "check_functional_eq",
    "gamma_expand",
    "gamma_contract",
    "is_gamma_positive",
    "i_decompose",
    "r_decompose",
    "defect1_ell",
    "decomposition_is_nonnegative",
    "decomposition_is_interlacing",
    "decomposition_is_gamma_positive",
    "reeve",
    "product_f",
    "closed_form",
    "counterexample_report",
]
