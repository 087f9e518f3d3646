"""Hom-superalgebras, their identities and constructions."""

from .algebra import HomAlgebra, check_grading
from .constructions import (
    alpha_power_twist,
    check_alternative_type,
    commutator_bracket,
    opposite,
    search_automorphisms,
    untwist,
    yau_twist,
)
from .identities import (
    associator,
    associator_tensor,
    check_alternative,
    check_cyclic_associator,
    check_flexible,
    check_hom_associative,
    check_hom_malcev,
    check_left_alternative,
    check_morphism,
    check_multiplicative,
    check_right_alternative,
    is_alternative,
    is_involutive,
    is_regular,
)
from .report import AxiomEntry, AxiomReport, Witness

__all__ = [
    'AxiomEntry',
    'AxiomReport',
    'HomAlgebra',
    'Witness',
    'alpha_power_twist',
    'associator',
    'associator_tensor',
    'check_alternative',
    'check_alternative_type',
    'check_cyclic_associator',
    'check_flexible',
    'check_grading',
    'check_hom_associative',
    'check_hom_malcev',
    'check_left_alternative',
    'check_morphism',
    'check_multiplicative',
    'check_right_alternative',
    'commutator_bracket',
    'is_alternative',
    'is_involutive',
    'is_regular',
    'opposite',
    'search_automorphisms',
    'untwist',
    'yau_twist',
]
