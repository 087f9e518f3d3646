"""Splitting a Hom-alternative product into a post- or pre-alternative structure."""

import logging

import numpy as np

from homalt.errors import NotAlternative, NotSymplectic
from homalt.gsla import (
    identity_matrix,
    invert,
    koszul_tensor,
    matmul,
    pull,
    rearrange,
    solve_columns,
    zeros,
)
from homalt.homalg import HomAlgebra, check_alternative
from homalt.bform import BilinearFormRep, check_symplectic
from homalt.opx import RotaBaxterOp
from homalt.opx.rota_baxter import require_rota_baxter
from homalt.postalt.structure import PostAltStructure

logger = logging.getLogger(__name__)


def rb_to_postalt(algebra: HomAlgebra, operator: RotaBaxterOp) -> PostAltStructure:
    """x≺y = x·R(y), x≻y = R(x)·y and x·'y = λ x·y."""
    if not check_alternative(algebra).holds:
        raise NotAlternative("Rota-Baxter splitting needs a Hom-alternative algebra")
    require_rota_baxter(algebra, operator)
    c, m = algebra.product, operator.matrix
    identity = identity_matrix(algebra.dim)
    logger.info("splitting %s by a Rota-Baxter operator of weight %s",
                algebra.name or 'algebra', operator.weight)
    return PostAltStructure(algebra.space, pull(c, identity, m), pull(c, m, identity),
                            operator.weight * c, algebra.alpha)


def symplectic_split(algebra: HomAlgebra, form: BilinearFormRep) -> PostAltStructure:
    """Pre-alternative structure compatible with a symplectic form.

    e_i≺e_j and e_i≻e_j are the unique vectors v with
    ω(v, α²(z)) = ω(e_i, α⁻¹(e_j)·z) and
    ω(v, α²(z)) = (−1)^{|i|(|j|+|z|)} ω(e_j, z·α⁻¹(e_i)) for every basis z.
    Every pair is solved against the same matrix H[a][k] = ω(e_a, α²(e_k)).
    """
    inverse = invert(algebra.alpha).matrix
    report = check_symplectic(algebra, form)
    if not report.holds:
        failed = report.failures()[0]
        logger.warning("symplectic precondition fails: %s", failed.name)
        raise NotSymplectic(f"form is not symplectic for the algebra: {failed.name} fails")
    if not check_alternative(algebra).holds:
        raise NotAlternative("symplectic splitting needs a Hom-alternative algebra")
    n = algebra.dim
    if n == 0:
        return PostAltStructure.zero(algebra.space, algebra.alpha)
    c, w, alpha = algebra.product, form.gram, algebra.alpha.matrix
    identity = identity_matrix(n)
    h = matmul(w, matmul(alpha, alpha))
    prec_rhs = np.tensordot(w, pull(c, inverse, identity), axes=([1], [2]))
    succ_raw = np.tensordot(w, pull(c, identity, inverse), axes=([1], [2]))
    sign = koszul_tensor(algebra.degrees, 3, [(0, 1), (0, 2)])[..., 0]
    succ_rhs = sign * rearrange(succ_raw, 1, 2, 0)
    rhs = np.concatenate([prec_rhs.reshape(n * n, n), succ_rhs.reshape(n * n, n)]).T
    solution = solve_columns(h.T, rhs).T
    prec = solution[:n * n].reshape(n, n, n)
    succ = solution[n * n:].reshape(n, n, n)
    logger.info("symplectic splitting of %s solved %d systems", algebra.name or 'algebra',
                2 * n * n)
    return PostAltStructure(algebra.space, prec, succ, zeros((n, n, n)), algebra.alpha)


def check_bullet_equals_product(algebra: HomAlgebra, form: BilinearFormRep,
                                structure: PostAltStructure) -> bool:
    """≺ + ≻ (+ ·) reproduces the algebra's product exactly."""
    if not structure.space.same_shape(algebra.space):
        return False
    difference = structure.prec + structure.succ + structure.dot - algebra.product
    if algebra.dim and np.any(np.tensordot(difference, form.gram, axes=([2], [0])) != 0):
        return False
    return not np.any(difference != 0)
