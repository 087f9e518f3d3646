"""Axiom suites of Hom-post-alternative and Hom-pre-alternative structures.

The ten post-alternative axioms use the three-term bullet x•y = x≺y + x≻y + x·y;
the four pre-alternative axioms use the two-term bullet x≺y + x≻y and are
computed separately.
"""

import logging

import numpy as np

from homalt.errors import IndexOutOfRange, NotPreAlt
from homalt.gsla import compose_left, compose_right, koszul_tensor, rearrange
from homalt.homalg.report import AxiomReport, tensor_entry
from homalt.postalt.structure import PostAltStructure

logger = logging.getLogger(__name__)

POST_ALTERNATIVE_AXIOMS = tuple(f'post-alternative-{i}' for i in range(1, 11))
PRE_ALTERNATIVE_AXIOMS = tuple(f'pre-alternative-{i}' for i in range(1, 5))


class _Terms:
    """Shorthand for the two bracketings of a structure's products.

    left(outer, inner) is (x inner y) outer α(z); right(outer, inner) is
    α(x) outer (y inner z). Both are (n, n, n, n) tensors.
    """

    def __init__(self, structure: PostAltStructure):
        self.alpha = structure.alpha.matrix
        self.degrees = structure.degrees

    def left(self, outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
        return compose_left(outer, inner, self.alpha)

    def right(self, outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
        return compose_right(outer, inner, self.alpha)

    def sign(self, *pairs: tuple[int, int]) -> np.ndarray:
        return koszul_tensor(self.degrees, 3, pairs)


def post_alternative_defects(structure: PostAltStructure) -> list[np.ndarray]:
    t = _Terms(structure)
    P, S, D = structure.prec, structure.succ, structure.dot
    B = P + S + D
    s_xy, s_yz = t.sign((0, 1)), t.sign((1, 2))

    dot_assoc = t.left(D, D) - t.right(D, D)
    first = dot_assoc + s_xy * rearrange(dot_assoc, 1, 0, 2)
    second = dot_assoc + s_yz * rearrange(dot_assoc, 0, 2, 1)

    mixed = t.left(P, D) - t.right(D, P)
    third = mixed + s_xy * rearrange(mixed, 1, 0, 2)

    succ_dot = t.left(D, S) - t.right(S, D)
    fourth = succ_dot + s_yz * rearrange(succ_dot, 0, 2, 1)

    # sign attached to the first and last terms
    fifth = (s_xy * rearrange(t.left(D, S) - t.right(S, D), 1, 0, 2)
             - t.right(D, S) + t.left(D, P))

    sixth = (rearrange(t.left(D, P) - t.right(D, S), 2, 0, 1)
             + s_xy * rearrange(t.left(P, D) - t.right(D, P), 2, 1, 0))

    middle = t.left(P, S) - t.right(S, P)
    prec_bullet = t.left(P, P) - t.right(P, B)
    succ_bullet = t.left(S, B) - t.right(S, S)
    seventh = middle + s_xy * rearrange(prec_bullet, 1, 0, 2)
    eighth = middle + s_yz * rearrange(succ_bullet, 0, 2, 1)
    ninth = succ_bullet + s_xy * rearrange(succ_bullet, 1, 0, 2)
    tenth = rearrange(prec_bullet, 2, 0, 1) + s_xy * rearrange(prec_bullet, 2, 1, 0)

    return [first, second, third, fourth, fifth, sixth, seventh, eighth, ninth, tenth]


def check_post_alternative(structure: PostAltStructure) -> AxiomReport:
    """All ten post-alternative axioms, one entry each."""
    logger.debug("post-alternative suite (dim %d)", structure.dim)
    defects = post_alternative_defects(structure)
    return AxiomReport([tensor_entry(name, defect)
                        for name, defect in zip(POST_ALTERNATIVE_AXIOMS, defects)])


def _require_pre_alternative(structure: PostAltStructure) -> None:
    if not structure.is_pre_alternative:
        raise NotPreAlt("the dot product of the structure is not zero")


def associator_tensors(structure: PostAltStructure) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(ass_l, ass_m, ass_r) over all basis triples."""
    _require_pre_alternative(structure)
    t = _Terms(structure)
    P, S = structure.prec, structure.succ
    bullet = P + S
    ass_l = t.left(S, bullet) - t.right(S, S)
    ass_m = t.left(P, S) - t.right(S, P)
    ass_r = t.left(P, P) - t.right(P, bullet)
    return ass_l, ass_m, ass_r


def ass_l(structure: PostAltStructure, i: int, j: int, k: int) -> np.ndarray:
    """(x•y)≻α(z) − α(x)≻(y≻z) on basis vectors."""
    return _at(structure, 0, i, j, k)


def ass_m(structure: PostAltStructure, i: int, j: int, k: int) -> np.ndarray:
    """(x≻y)≺α(z) − α(x)≻(y≺z) on basis vectors."""
    return _at(structure, 1, i, j, k)


def ass_r(structure: PostAltStructure, i: int, j: int, k: int) -> np.ndarray:
    """(x≺y)≺α(z) − α(x)≺(y•z) on basis vectors."""
    return _at(structure, 2, i, j, k)


def _at(structure: PostAltStructure, which: int, i: int, j: int, k: int) -> np.ndarray:
    for index in (i, j, k):
        if not 0 <= index < structure.dim:
            raise IndexOutOfRange(f"basis index {index} outside 0..{structure.dim - 1}")
    return associator_tensors(structure)[which][i, j, k].copy()


def check_pre_alternative(structure: PostAltStructure) -> AxiomReport:
    """The four pre-alternative axioms; the dot product must vanish."""
    ass_left, ass_mid, ass_right = associator_tensors(structure)
    sign = _Terms(structure).sign
    s_xy, s_yz = sign((0, 1)), sign((1, 2))
    defects = [
        ass_mid + s_xy * rearrange(ass_right, 1, 0, 2),
        ass_mid + s_yz * rearrange(ass_left, 0, 2, 1),
        ass_left + s_xy * rearrange(ass_left, 1, 0, 2),
        ass_right + s_yz * rearrange(ass_right, 0, 2, 1),
    ]
    return AxiomReport([tensor_entry(name, defect)
                        for name, defect in zip(PRE_ALTERNATIVE_AXIOMS, defects)])
