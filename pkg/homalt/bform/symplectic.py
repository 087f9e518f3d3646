"""Symplectic (closed, super-skew, nondegenerate) forms."""

import logging

import numpy as np

from homalt.errors import (
    GradingError,
    NotADerivation,
    NotAlternative,
    NotAntisymmetric,
    NotSymplectic,
    SingularMatrix,
)
from homalt.gsla import GradedMap, koszul_tensor, matmul, rank, rearrange
from homalt.homalg import HomAlgebra, check_alternative, opposite
from homalt.homalg.report import AxiomReport, scalar_entry
from homalt.opx.derivations import DerivationCandidate, check_antisymmetric, check_superderivation
from homalt.bform.forms import (
    BilinearFormRep,
    FormFlavor,
    FormParity,
    nondegenerate_entry,
    required_shape,
)
from homalt.bform.pseudo_euclidean import require_pseudo_euclidean

logger = logging.getLogger(__name__)


def closedness_defect(product: np.ndarray, alpha: np.ndarray, gram: np.ndarray,
                      degrees: tuple[int, ...]) -> np.ndarray:
    """Cyclic sum (−1)^{|x||z|} ω(αx, y·z) + (−1)^{|y||x|} ω(αy, z·x) + (−1)^{|z||y|} ω(αz, x·y)."""
    if gram.shape[0] == 0:
        return np.zeros((0, 0, 0), dtype=object)
    cross = np.tensordot(matmul(alpha.T, gram), product, axes=([1], [2]))

    def sign(a: int, b: int) -> np.ndarray:
        return koszul_tensor(degrees, 3, [(a, b)])[..., 0]

    return (sign(0, 2) * cross
            + sign(1, 0) * rearrange(cross, 1, 2, 0)
            + sign(2, 1) * rearrange(cross, 2, 0, 1))


def check_symplectic(algebra: HomAlgebra, form: BilinearFormRep) -> AxiomReport:
    """Shape (super-skew, even), nondegeneracy and closedness."""
    logger.debug("symplectic suite on %s (dim %d)", algebra.name or 'algebra', algebra.dim)
    report = required_shape(form, FormFlavor.SUPER_SKEW)
    report.add(nondegenerate_entry(form))
    defect = closedness_defect(algebra.product, algebra.alpha.matrix, form.gram, algebra.degrees)
    report.add(scalar_entry('closed', defect))
    return report


def check_symplectic_malcev(bracket: HomAlgebra, form: BilinearFormRep) -> AxiomReport:
    """Closedness of ω for a bracket."""
    defect = closedness_defect(bracket.product, bracket.alpha.matrix, form.gram, bracket.degrees)
    return AxiomReport([scalar_entry('closed', defect)])


def derivation_symplectic(algebra: HomAlgebra, form: BilinearFormRep,
                          d: GradedMap) -> BilinearFormRep:
    """ω(x, y) = Ψ(D x, y) for an invertible antisymmetric even derivation D."""
    if d.degree != 0:
        raise GradingError("the derivation must be even")
    require_pseudo_euclidean(algebra, form, algebra.alpha)
    if not check_superderivation(algebra, DerivationCandidate(d, 0)).holds:
        logger.warning("map is not a superderivation")
        raise NotADerivation("D(x·y) != D(x)·y + x·D(y)")
    antisymmetry = check_antisymmetric(form, d)
    if not antisymmetry.holds:
        logger.warning("map is not antisymmetric at %s", antisymmetry.failures()[0].witness.indices)
        raise NotAntisymmetric("Ψ(Dx, y) + Ψ(x, Dy) != 0")
    if rank(d.matrix) != d.dim:
        raise SingularMatrix("the derivation must be invertible")
    gram = matmul(d.matrix.T, form.gram)
    logger.info("symplectic form from a derivation on %s", algebra.name or 'algebra')
    return BilinearFormRep(form.space, gram, FormFlavor.SUPER_SKEW, FormParity.EVEN)


def _require_symplectic(algebra: HomAlgebra, form: BilinearFormRep) -> None:
    report = check_symplectic(algebra, form)
    if not report.holds:
        failed = report.failures()[0]
        logger.warning("symplectic precondition fails: %s", failed.name)
        raise NotSymplectic(f"form is not symplectic for the algebra: {failed.name} fails")


def opposite_symplectic(algebra: HomAlgebra,
                        form: BilinearFormRep) -> tuple[HomAlgebra, BilinearFormRep]:
    _require_symplectic(algebra, form)
    if not check_alternative(algebra).holds:
        raise NotAlternative("opposite symplectic structure needs a Hom-alternative algebra")
    return opposite(algebra), form
