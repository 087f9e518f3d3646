"""Superderivations and Rota-Baxter operators."""

from .derivations import (
    DerivationCandidate,
    antisymmetric_derivations,
    check_antisymmetric,
    check_superderivation,
    derivation_bracket,
    derivation_space,
    find_invertible,
)
from .rota_baxter import (
    RotaBaxterOp,
    check_pe_rota_baxter,
    check_rb_form_compat,
    check_rota_baxter,
    rb_derived_product,
    rb_symplectic,
    search_rota_baxter,
)

__all__ = [
    'DerivationCandidate',
    'RotaBaxterOp',
    'antisymmetric_derivations',
    'check_antisymmetric',
    'check_pe_rota_baxter',
    'check_rb_form_compat',
    'check_rota_baxter',
    'check_superderivation',
    'derivation_bracket',
    'derivation_space',
    'find_invertible',
    'rb_derived_product',
    'rb_symplectic',
    'search_rota_baxter',
]
