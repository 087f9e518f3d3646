"""Constructions producing new Hom-superalgebras from old ones."""

import logging
from typing import Iterable, Iterator, Optional

import numpy as np

from homalt.errors import NotAMorphism, NotMultiplicative
from homalt.gsla import (
    GradedMap,
    even_maps_with_entries,
    invert,
    koszul_tensor,
    matmul,
    pull,
    push,
    rearrange,
)
from homalt.homalg.algebra import HomAlgebra
from homalt.homalg.identities import check_alternative, check_morphism, check_multiplicative
from homalt.homalg.report import AxiomReport, tensor_entry

logger = logging.getLogger(__name__)


def _swap_sign(algebra: HomAlgebra) -> np.ndarray:
    return koszul_tensor(algebra.degrees, 2, [(0, 1)])


def opposite(algebra: HomAlgebra) -> HomAlgebra:
    """x ·op y = −(−1)^{|x||y|} y·x with the same twist."""
    product = -_swap_sign(algebra) * rearrange(algebra.product, 1, 0)
    return algebra.with_product(product, name=_derived_name('op', algebra))


def commutator_bracket(algebra: HomAlgebra) -> HomAlgebra:
    """[x, y] = x·y − (−1)^{|x||y|} y·x with the same twist."""
    bracket = algebra.product - _swap_sign(algebra) * rearrange(algebra.product, 1, 0)
    return algebra.with_product(bracket, name=_derived_name('bracket', algebra))


def _require_morphism(beta: GradedMap, algebra: HomAlgebra) -> None:
    report = check_morphism(beta, algebra, algebra)
    if not report.holds:
        failed = report.failures()[0]
        logger.warning("twisting map fails %s at %s", failed.name, failed.witness.indices)
        raise NotAMorphism(f"map is not a self-morphism: {failed.name} fails at "
                           f"{failed.witness.indices}")


def _require_multiplicative(algebra: HomAlgebra) -> None:
    report = check_multiplicative(algebra)
    if not report.holds:
        indices = report.failures()[0].witness.indices
        logger.warning("twist map of %s is not multiplicative at %s", algebra.name, indices)
        raise NotMultiplicative(f"α(x·y) != α(x)·α(y) at basis pair {indices}")


def yau_twist(algebra: HomAlgebra, beta: GradedMap) -> HomAlgebra:
    """Product β(x·y) with twist β∘α, for a self-morphism β."""
    _require_morphism(beta, algebra)
    logger.info("Yau twist of %s", algebra.name or 'algebra')
    return algebra.with_product(push(beta.matrix, algebra.product), beta.compose(algebra.alpha),
                                name=_derived_name('twist', algebra))


def untwist(algebra: HomAlgebra) -> HomAlgebra:
    """Product α⁻¹(x)·α⁻¹(y) with identity twist; needs α invertible and multiplicative."""
    inverse = invert(algebra.alpha)
    _require_multiplicative(algebra)
    logger.info("untwisting %s", algebra.name or 'algebra')
    product = pull(algebra.product, inverse.matrix, inverse.matrix)
    return algebra.with_product(product, GradedMap.identity(algebra.space),
                                name=_derived_name('untwist', algebra))


def alpha_power_twist(algebra: HomAlgebra, n: int) -> HomAlgebra:
    """Product αⁿ(x)·αⁿ(y) with twist α^{n+1}."""
    if n < 0:
        raise ValueError("twist power must be non-negative")
    _require_multiplicative(algebra)
    power = algebra.alpha.power(n)
    product = pull(algebra.product, power.matrix, power.matrix)
    return algebra.with_product(product, algebra.alpha.power(n + 1),
                                name=_derived_name(f'alpha^{n}', algebra))


def check_alternative_type(algebra: HomAlgebra, untwisted: np.ndarray) -> AxiomReport:
    """α(x·'y) = x·y for a candidate product ·', and (A, ·') alternative."""
    plain = HomAlgebra(algebra.space, untwisted)
    report = AxiomReport([
        tensor_entry('twist-recovers-product',
                     push(algebra.alpha.matrix, plain.product) - algebra.product),
    ])
    return report.extend(check_alternative(plain), prefix='untwisted-')


def search_automorphisms(algebra: HomAlgebra, entries: Iterable,
                         gram: Optional[np.ndarray] = None,
                         limit: Optional[int] = None) -> Iterator[GradedMap]:
    """Invertible diagonal self-morphisms with diagonal drawn from ``entries``.

    With ``gram`` only isometries Mᵀ G M = G are yielded.
    """
    values = [v for v in entries if v != 0]
    found = 0
    for candidate in even_maps_with_entries(algebra.space, values):
        if candidate.is_identity():
            continue
        if gram is not None:
            m = candidate.matrix
            if np.any(matmul(matmul(m.T, gram), m) != gram):
                continue
        if not check_morphism(candidate, algebra, algebra).holds:
            continue
        logger.debug("automorphism found: diag%s", tuple(str(v) for v in np.diag(candidate.matrix)))
        yield candidate
        found += 1
        if limit is not None and found >= limit:
            return


def _derived_name(tag: str, algebra: HomAlgebra) -> str:
    return f'{tag}({algebra.name})' if algebra.name else ''
