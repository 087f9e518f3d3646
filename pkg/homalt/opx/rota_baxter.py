"""Rota-Baxter operators of weight λ."""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

import numpy as np

from homalt.errors import (
    DimensionMismatch,
    GradingError,
    NotAlternative,
    NotAntisymmetric,
    NotRotaBaxter,
    SingularMatrix,
    WrongWeight,
)
from homalt.gsla import GradedMap, identity_matrix, inverse_matrix, matmul, pull, push, rank, zeros
from homalt.homalg import HomAlgebra, check_alternative
from homalt.homalg.report import AxiomReport, flag_entry, scalar_entry, tensor_entry
from homalt.bform.forms import BilinearFormRep, FormFlavor, FormParity
from homalt.bform.pseudo_euclidean import check_pseudo_euclidean, require_pseudo_euclidean

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RotaBaxterOp:
    """Even map R with its weight λ."""
    map: GradedMap
    weight: Fraction = Fraction(0)

    def __post_init__(self):
        if self.map.degree != 0:
            raise GradingError("a Rota-Baxter operator must be even")
        object.__setattr__(self, 'weight', Fraction(self.weight))

    @property
    def matrix(self) -> np.ndarray:
        return self.map.matrix


def _check_space(algebra: HomAlgebra, operator: RotaBaxterOp) -> None:
    if not operator.map.space.same_shape(algebra.space):
        raise DimensionMismatch("operator and algebra live on different spaces")


def derived_product_tensor(product: np.ndarray, operator: RotaBaxterOp) -> np.ndarray:
    """x∘y = R(x)·y + x·R(y) + λ x·y."""
    n = product.shape[0]
    m, identity = operator.matrix, identity_matrix(n)
    return pull(product, m, identity) + pull(product, identity, m) + operator.weight * product


def check_rota_baxter(algebra: HomAlgebra, operator: RotaBaxterOp) -> AxiomReport:
    """Evenness, commutation with α and R(x)·R(y) = R(R(x)·y + x·R(y) + λx·y)."""
    _check_space(algebra, operator)
    m, c = operator.matrix, algebra.product
    commutator = matmul(algebra.alpha.matrix, m) - matmul(m, algebra.alpha.matrix)
    if algebra.dim:
        identity_defect = pull(c, m, m) - push(m, derived_product_tensor(c, operator))
    else:
        identity_defect = c.copy()
    return AxiomReport([
        flag_entry('even', operator.map.degree == 0),
        tensor_entry('commutes-with-alpha', commutator.T),
        tensor_entry('rota-baxter', identity_defect),
    ])


def require_rota_baxter(algebra: HomAlgebra, operator: RotaBaxterOp) -> None:
    report = check_rota_baxter(algebra, operator)
    if not report.holds:
        failed = report.failures()[0]
        logger.warning("Rota-Baxter precondition fails: %s at %s", failed.name,
                       failed.witness.indices)
        raise NotRotaBaxter(f"operator is not Rota-Baxter of weight {operator.weight}: "
                            f"{failed.name} fails")


def rb_derived_product(algebra: HomAlgebra, operator: RotaBaxterOp) -> HomAlgebra:
    """The Hom-alternative product x∘y = R(x)·y + x·R(y) + λx·y."""
    require_rota_baxter(algebra, operator)
    if not check_alternative(algebra).holds:
        raise NotAlternative("derived product needs a Hom-alternative algebra")
    name = f'rb({algebra.name})' if algebra.name else ''
    return algebra.with_product(derived_product_tensor(algebra.product, operator), name=name)


def check_rb_form_compat(form: BilinearFormRep, operator: RotaBaxterOp) -> AxiomReport:
    """Ψ(Rx, y) + Ψ(x, Ry) + λΨ(x, y) = 0."""
    m, gram = operator.matrix, form.gram
    defect = matmul(m.T, gram) + matmul(gram, m) + operator.weight * gram
    return AxiomReport([scalar_entry('rb-compatible', defect)])


def check_pe_rota_baxter(algebra: HomAlgebra, form: BilinearFormRep,
                         operator: RotaBaxterOp) -> AxiomReport:
    report = check_pseudo_euclidean(algebra, form)
    report.extend(check_rota_baxter(algebra, operator))
    return report.extend(check_rb_form_compat(form, operator))


def rb_symplectic(algebra: HomAlgebra, form: BilinearFormRep,
                  operator: RotaBaxterOp) -> BilinearFormRep:
    """Ψ_R(x, y) = Ψ(R⁻¹x, y) for an invertible weight-zero operator."""
    if operator.weight != 0:
        raise WrongWeight(f"weight must be 0, got {operator.weight}")
    if not check_rb_form_compat(form, operator).holds:
        logger.warning("operator is not compatible with the form")
        raise NotAntisymmetric("Ψ(Rx, y) + Ψ(x, Ry) != 0")
    if rank(operator.matrix) != form.dim:
        raise SingularMatrix("the Rota-Baxter operator must be invertible")
    require_pseudo_euclidean(algebra, form, algebra.alpha)
    require_rota_baxter(algebra, operator)
    gram = matmul(inverse_matrix(operator.matrix).T, form.gram) if form.dim else form.gram
    logger.info("symplectic form from a Rota-Baxter operator on %s", algebra.name or 'algebra')
    return BilinearFormRep(form.space, gram, FormFlavor.SUPER_SKEW, FormParity.EVEN)


def search_rota_baxter(algebra: HomAlgebra, weight, entries: Iterable,
                       limit: Optional[int] = None,
                       max_candidates: int = 100_000) -> Iterator[RotaBaxterOp]:
    """Even operators with matrix entries drawn from ``entries`` that are Rota-Baxter.

    Enumeration is exhaustive over the parity-allowed positions and stops
    after ``max_candidates`` matrices.
    """
    space = algebra.space
    values = [Fraction(v) for v in entries]
    positions = [(int(r), int(c)) for r, c in np.argwhere(space.parity_mask(0))]
    found = 0
    for tried, choice in enumerate(itertools.product(values, repeat=len(positions))):
        if tried >= max_candidates:
            logger.debug("Rota-Baxter search stopped after %d candidates", tried)
            return
        matrix = zeros((space.dim, space.dim))
        for value, position in zip(choice, positions):
            matrix[position] = value
        operator = RotaBaxterOp(GradedMap(space, matrix, 0), weight)
        if check_rota_baxter(algebra, operator).holds:
            yield operator
            found += 1
            if limit is not None and found >= limit:
                return
