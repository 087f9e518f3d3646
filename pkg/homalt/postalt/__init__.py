"""Hom-post-alternative and Hom-pre-alternative structures."""

from .axioms import (
    POST_ALTERNATIVE_AXIOMS,
    PRE_ALTERNATIVE_AXIOMS,
    ass_l,
    ass_m,
    ass_r,
    check_post_alternative,
    check_pre_alternative,
)
from .splitting import check_bullet_equals_product, rb_to_postalt, symplectic_split
from .structure import PostAltStructure, bullet, postalt_yau_twist

__all__ = [
    'POST_ALTERNATIVE_AXIOMS',
    'PRE_ALTERNATIVE_AXIOMS',
    'PostAltStructure',
    'ass_l',
    'ass_m',
    'ass_r',
    'bullet',
    'check_bullet_equals_product',
    'check_post_alternative',
    'check_pre_alternative',
    'postalt_yau_twist',
    'rb_to_postalt',
    'symplectic_split',
]
