"""Pseudo-Euclidean and symplectic bilinear forms."""

from .forms import (
    BilinearFormRep,
    FormFlavor,
    FormParity,
    check_alpha_compatible,
    check_form_shape,
    check_form_value,
    check_isometry,
    check_nondegenerate,
)
from .pseudo_euclidean import (
    check_invariant,
    check_phi_invariant,
    check_phi_quadratic_malcev,
    check_pseudo_euclidean,
    opposite_pe,
    pe_untwist,
    pe_yau_twist,
)
from .symplectic import (
    check_symplectic,
    check_symplectic_malcev,
    derivation_symplectic,
    opposite_symplectic,
)

__all__ = [
    'BilinearFormRep',
    'FormFlavor',
    'FormParity',
    'check_alpha_compatible',
    'check_form_shape',
    'check_form_value',
    'check_invariant',
    'check_isometry',
    'check_nondegenerate',
    'check_phi_invariant',
    'check_phi_quadratic_malcev',
    'check_pseudo_euclidean',
    'check_symplectic',
    'check_symplectic_malcev',
    'derivation_symplectic',
    'opposite_pe',
    'opposite_symplectic',
    'pe_untwist',
    'pe_yau_twist',
]
