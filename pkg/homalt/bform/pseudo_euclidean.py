"""Pseudo-Euclidean (invariant, supersymmetric, nondegenerate) forms."""

import logging
from typing import Optional

import numpy as np

from homalt.errors import NotAnIsometry, NotPseudoEuclidean
from homalt.gsla import GradedMap, koszul_tensor, matmul
from homalt.homalg import HomAlgebra, opposite, untwist, yau_twist
from homalt.homalg.report import AxiomReport, scalar_entry
from homalt.bform.forms import (
    BilinearFormRep,
    FormFlavor,
    check_alpha_compatible,
    check_isometry,
    nondegenerate_entry,
    required_shape,
)

logger = logging.getLogger(__name__)


def _phi(algebra: HomAlgebra, phi: Optional[GradedMap]) -> np.ndarray:
    return (phi if phi is not None else GradedMap.identity(algebra.space)).matrix


def invariance_defect(product: np.ndarray, gram: np.ndarray, phi: np.ndarray) -> np.ndarray:
    """Ψ(x·y, φz) − Ψ(φx, y·z) over all basis triples."""
    if gram.shape[0] == 0:
        return product.copy()
    left = np.tensordot(product, matmul(gram, phi), axes=([2], [0]))
    right = np.tensordot(matmul(phi.T, gram), product, axes=([1], [2]))
    return left - right


def check_phi_invariant(algebra: HomAlgebra, form: BilinearFormRep,
                        phi: Optional[GradedMap] = None) -> AxiomReport:
    """Ψ(x·y, φ(z)) = Ψ(φ(x), y·z); φ defaults to the identity."""
    defect = invariance_defect(algebra.product, form.gram, _phi(algebra, phi))
    return AxiomReport([scalar_entry('invariant', defect)])


def check_invariant(algebra: HomAlgebra, form: BilinearFormRep) -> AxiomReport:
    return check_phi_invariant(algebra, form, None)


def check_pseudo_euclidean(algebra: HomAlgebra, form: BilinearFormRep,
                           phi: Optional[GradedMap] = None) -> AxiomReport:
    """Shape, nondegeneracy, (φ-)invariance and α-compatibility."""
    logger.debug("pseudo-Euclidean suite on %s (dim %d)", algebra.name or 'algebra', algebra.dim)
    report = required_shape(form, FormFlavor.SUPERSYMMETRIC)
    report.add(nondegenerate_entry(form))
    report.extend(check_phi_invariant(algebra, form, phi))
    report.extend(check_alpha_compatible(form, algebra.alpha))
    return report


def require_pseudo_euclidean(algebra: HomAlgebra, form: BilinearFormRep,
                             phi: Optional[GradedMap]) -> None:
    report = check_pseudo_euclidean(algebra, form, phi)
    if not report.holds:
        failed = report.failures()[0]
        logger.warning("pseudo-Euclidean precondition fails: %s", failed.name)
        raise NotPseudoEuclidean(f"algebra with form is not pseudo-Euclidean: {failed.name} fails")


def pe_yau_twist(algebra: HomAlgebra, form: BilinearFormRep,
                 beta: GradedMap) -> tuple[HomAlgebra, BilinearFormRep, GradedMap]:
    """Twist a pseudo-Euclidean algebra by an isometric self-morphism β.

    The result carries the same form and is β-pseudo-Euclidean.
    """
    require_pseudo_euclidean(algebra, form, None)
    if not check_isometry(beta, form, form):
        logger.warning("twisting map is not an isometry of the form")
        raise NotAnIsometry("Ψ(βx, βy) != Ψ(x, y)")
    return yau_twist(algebra, beta), form, beta


def opposite_pe(algebra: HomAlgebra, form: BilinearFormRep,
                phi: Optional[GradedMap] = None) -> tuple[HomAlgebra, BilinearFormRep]:
    require_pseudo_euclidean(algebra, form, phi)
    return opposite(algebra), form


def pe_untwist(algebra: HomAlgebra, form: BilinearFormRep) -> tuple[HomAlgebra, BilinearFormRep]:
    """A regular α-pseudo-Euclidean algebra untwists to a pseudo-Euclidean one, same form."""
    require_pseudo_euclidean(algebra, form, algebra.alpha)
    return untwist(algebra), form


def check_phi_quadratic_malcev(bracket: HomAlgebra, form: BilinearFormRep,
                               phi: Optional[GradedMap] = None) -> AxiomReport:
    """B([x,y], φz) + (−1)^{|x||y|} B(φy, [x,z]) = 0, with shape and α-compatibility."""
    b, gram, m = bracket.product, form.gram, _phi(bracket, phi)
    if bracket.dim:
        first = np.tensordot(b, matmul(gram, m), axes=([2], [0]))
        second = np.tensordot(matmul(m.T, gram), b, axes=([1], [2])).transpose(1, 0, 2)
        sign = koszul_tensor(bracket.degrees, 3, [(0, 1)])[..., 0]
        defect = first + sign * second
    else:
        defect = b.copy()
    report = required_shape(form, FormFlavor.SUPERSYMMETRIC)
    report.add(nondegenerate_entry(form))
    report.add(scalar_entry('quadratic-invariant', defect))
    report.extend(check_alpha_compatible(form, bracket.alpha))
    return report
