"""Identity checkers for Hom-superalgebras.

Every checker builds the defect of its identity as one tensor over all basis
tuples at once and reports the first nonzero tuple in lexicographic order.
Checking on homogeneous basis tuples is enough because every identity is
multilinear.
"""

import logging

import numpy as np

from homalt.errors import DimensionMismatch
from homalt.gsla import (
    GradedMap,
    compose_left,
    compose_right,
    identity_matrix,
    koszul_tensor,
    matmul,
    pull,
    push,
    rank,
    rearrange,
)
from homalt.homalg.algebra import HomAlgebra
from homalt.homalg.report import AxiomReport, tensor_entry

logger = logging.getLogger(__name__)


def associator_tensor(algebra: HomAlgebra) -> np.ndarray:
    """as(x, y, z) = (x·y)·α(z) − α(x)·(y·z) for all basis triples, shape (n, n, n, n)."""
    c, alpha = algebra.product, algebra.alpha.matrix
    return compose_left(c, c, alpha) - compose_right(c, c, alpha)


def associator(algebra: HomAlgebra, i: int, j: int, k: int) -> np.ndarray:
    algebra.check_index(i, j, k)
    return associator_tensor(algebra)[i, j, k].copy()


def _sign(algebra: HomAlgebra, slots: int, *pairs: tuple[int, int]) -> np.ndarray:
    return koszul_tensor(algebra.degrees, slots, pairs)


def check_multiplicative(algebra: HomAlgebra) -> AxiomReport:
    c, alpha = algebra.product, algebra.alpha.matrix
    defect = push(alpha, c) - pull(c, alpha, alpha)
    return AxiomReport([tensor_entry('multiplicative', defect)])


def check_hom_associative(algebra: HomAlgebra) -> AxiomReport:
    logger.debug("hom-associativity on %s (dim %d)", algebra.name or 'algebra', algebra.dim)
    return AxiomReport([tensor_entry('hom-associative', associator_tensor(algebra))])


def left_alternative_defect(algebra: HomAlgebra, assoc: np.ndarray = None) -> np.ndarray:
    assoc = associator_tensor(algebra) if assoc is None else assoc
    return assoc + _sign(algebra, 3, (0, 1)) * rearrange(assoc, 1, 0, 2)


def right_alternative_defect(algebra: HomAlgebra, assoc: np.ndarray = None) -> np.ndarray:
    assoc = associator_tensor(algebra) if assoc is None else assoc
    return assoc + _sign(algebra, 3, (1, 2)) * rearrange(assoc, 0, 2, 1)


def check_left_alternative(algebra: HomAlgebra) -> AxiomReport:
    return AxiomReport([tensor_entry('left-alternative', left_alternative_defect(algebra))])


def check_right_alternative(algebra: HomAlgebra) -> AxiomReport:
    return AxiomReport([tensor_entry('right-alternative', right_alternative_defect(algebra))])


def check_alternative(algebra: HomAlgebra) -> AxiomReport:
    """Left and right Hom-alternativity as two entries."""
    logger.debug("alternativity on %s (dim %d)", algebra.name or 'algebra', algebra.dim)
    assoc = associator_tensor(algebra)
    return AxiomReport([
        tensor_entry('left-alternative', left_alternative_defect(algebra, assoc)),
        tensor_entry('right-alternative', right_alternative_defect(algebra, assoc)),
    ])


def is_alternative(algebra: HomAlgebra) -> bool:
    return check_alternative(algebra).holds


def check_flexible(algebra: HomAlgebra) -> AxiomReport:
    assoc = associator_tensor(algebra)
    sign = _sign(algebra, 3, (0, 1), (0, 2), (1, 2))
    return AxiomReport([tensor_entry('flexible', assoc + sign * rearrange(assoc, 2, 1, 0))])


def check_cyclic_associator(algebra: HomAlgebra) -> AxiomReport:
    assoc = associator_tensor(algebra)
    sign = _sign(algebra, 3, (0, 1), (0, 2))
    return AxiomReport([
        tensor_entry('cyclic-associator', assoc - sign * rearrange(assoc, 1, 2, 0)),
    ])


def antisymmetry_defect(bracket: HomAlgebra) -> np.ndarray:
    b = bracket.product
    return b + _sign(bracket, 2, (0, 1)) * rearrange(b, 1, 0)


def malcev_defect(bracket: HomAlgebra) -> np.ndarray:
    """Defect of the quartic Hom-Malcev super-identity over all basis quadruples.

    (−1)^{|y||z|}[α[x,z], α[y,t]] is compared with the four cyclically shifted
    terms [[[x,y],αz],α²t], each carrying the sign of its permutation.
    """
    b = bracket.product
    alpha = bracket.alpha.matrix
    n = bracket.dim
    if n == 0:
        return b.reshape((0,) * 5)
    twisted = push(alpha, b)
    step = np.tensordot(twisted, b, axes=([2], [0]))
    lhs = np.tensordot(step, twisted, axes=([2], [2])).transpose(0, 3, 1, 4, 2)
    alpha_squared = matmul(alpha, alpha)
    nested = np.tensordot(compose_left(b, b, alpha), pull(b, identity_matrix(n), alpha_squared),
                          axes=([3], [0]))
    rhs = (nested
           + _sign(bracket, 4, (0, 1), (0, 2), (0, 3)) * rearrange(nested, 1, 2, 3, 0)
           + _sign(bracket, 4, (0, 2), (0, 3), (1, 2), (1, 3)) * rearrange(nested, 2, 3, 0, 1)
           + _sign(bracket, 4, (3, 0), (3, 1), (3, 2)) * rearrange(nested, 3, 0, 1, 2))
    return _sign(bracket, 4, (1, 2)) * lhs - rhs


def check_hom_malcev(bracket: HomAlgebra) -> AxiomReport:
    """Super-anticommutativity and the quartic identity, as separate entries."""
    logger.debug("hom-Malcev identity on %s (dim %d)", bracket.name or 'bracket', bracket.dim)
    return AxiomReport([
        tensor_entry('malcev-antisymmetry', antisymmetry_defect(bracket)),
        tensor_entry('malcev-identity', malcev_defect(bracket)),
    ])


def check_morphism(f: GradedMap, source: HomAlgebra, target: HomAlgebra,
                   weak: bool = False) -> AxiomReport:
    """f∘μ = μ'∘(f⊗f) and, unless weak, f∘α = α'∘f."""
    if not (source.space.same_shape(target.space) and f.space.same_shape(source.space)):
        raise DimensionMismatch(
            f"map on {f.space.label()} between {source.space.label()} "
            f"and {target.space.label()} algebras"
        )
    m = f.matrix
    report = AxiomReport([
        tensor_entry('product-compatible', push(m, source.product) - pull(target.product, m, m)),
    ])
    if not weak:
        twist = matmul(m, source.alpha.matrix) - matmul(target.alpha.matrix, m)
        report.add(tensor_entry('twist-compatible', twist.T))
    return report


def is_regular(algebra: HomAlgebra) -> bool:
    return rank(algebra.alpha.matrix) == algebra.dim


def is_involutive(algebra: HomAlgebra) -> bool:
    return algebra.alpha.is_involutive()
