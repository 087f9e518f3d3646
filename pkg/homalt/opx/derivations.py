"""α^k-superderivations and their antisymmetry with respect to a form."""

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional

import numpy as np

from homalt.config import ToolkitConfig
from homalt.errors import DimensionMismatch, GradingError
from homalt.gsla import (
    GradedMap,
    SuperSpace,
    koszul_sign,
    matmul,
    nullspace,
    pull,
    push,
    rank,
    zeros,
)
from homalt.homalg import HomAlgebra
from homalt.homalg.report import AxiomReport, scalar_entry, tensor_entry

if TYPE_CHECKING:
    from homalt.bform.forms import BilinearFormRep

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivationCandidate:
    """A homogeneous map together with the twist power k of its Leibniz rule."""
    map: GradedMap
    power: int = 0

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("derivation power must be non-negative")

    @property
    def degree(self) -> int:
        return self.map.degree

    @property
    def space(self) -> SuperSpace:
        return self.map.space


def _row_signs(space: SuperSpace, degree: int) -> np.ndarray:
    """(−1)^{|i|·degree} for each basis index i."""
    return np.array([koszul_sign(d, degree) for d in space.degrees], dtype=object)


def leibniz_defect(algebra: HomAlgebra, candidate: DerivationCandidate) -> np.ndarray:
    """D(x·y) − D(x)·α^k(y) − (−1)^{|x||D|} α^k(x)·D(y) over basis pairs."""
    c = algebra.product
    d = candidate.map.matrix
    twist = algebra.alpha.power(candidate.power).matrix
    if algebra.dim == 0:
        return c.copy()
    signs = _row_signs(algebra.space, candidate.degree)[:, None, None]
    return push(d, c) - pull(c, d, twist) - signs * pull(c, twist, d)


def check_superderivation(algebra: HomAlgebra, candidate: DerivationCandidate) -> AxiomReport:
    if not candidate.space.same_shape(algebra.space):
        raise DimensionMismatch("derivation and algebra live on different spaces")
    return AxiomReport([tensor_entry('superderivation', leibniz_defect(algebra, candidate))])


def antisymmetry_defect(form: 'BilinearFormRep', d: GradedMap) -> np.ndarray:
    """Ψ(Dx, y) + (−1)^{|x||D|} Ψ(x, Dy) as a matrix over (x, y)."""
    gram = form.gram
    signs = _row_signs(form.space, d.degree)[:, None]
    return matmul(d.matrix.T, gram) + signs * matmul(gram, d.matrix)


def check_antisymmetric(form: 'BilinearFormRep', d: GradedMap,
                        phi: Optional[GradedMap] = None) -> AxiomReport:
    """Antisymmetry of D for the form; with φ also φ∘D = D∘φ."""
    if not d.space.same_shape(form.space):
        raise DimensionMismatch("map and form live on different spaces")
    report = AxiomReport([scalar_entry('antisymmetric', antisymmetry_defect(form, d))])
    if phi is not None:
        commutator = matmul(phi.matrix, d.matrix) - matmul(d.matrix, phi.matrix)
        report.add(tensor_entry('commutes-with-phi', commutator.T))
    return report


def derivation_bracket(first: DerivationCandidate,
                       second: DerivationCandidate) -> DerivationCandidate:
    """[D1, D2] = D1∘D2 − (−1)^{|D1||D2|} D2∘D1."""
    if not first.space.same_shape(second.space):
        raise DimensionMismatch("derivations live on different spaces")
    a, b = first.map, second.map
    sign = koszul_sign(a.degree, b.degree)
    return DerivationCandidate(a.compose(b) - b.compose(a).scaled(sign),
                               first.power + second.power)


def _map_basis(space: SuperSpace, degree: int, diagonal: bool = False) -> list[tuple[int, int]]:
    """Matrix positions an homogeneous map of the given degree may occupy."""
    mask = space.parity_mask(degree)
    return [(int(r), int(c)) for r, c in np.argwhere(mask) if not diagonal or r == c]


def _unit_map(space: SuperSpace, degree: int, position: tuple[int, int]) -> GradedMap:
    matrix = zeros((space.dim, space.dim))
    matrix[position] = 1
    return GradedMap(space, matrix, degree)


def _solve_linear_family(space: SuperSpace, degree: int, defect_of,
                         diagonal: bool = False) -> list[GradedMap]:
    """Basis of the maps D of a given degree for which the linear defect_of(D) vanishes."""
    positions = _map_basis(space, degree, diagonal)
    if not positions:
        return []
    columns = [defect_of(_unit_map(space, degree, p)).reshape(-1) for p in positions]
    system = np.stack(columns, axis=1)
    if system.shape[0] == 0:
        system = zeros((1, len(positions)))
    maps = []
    for vector in nullspace(system, columns=len(positions)):
        matrix = zeros((space.dim, space.dim))
        for value, position in zip(vector, positions):
            matrix[position] = value
        maps.append(GradedMap(space, matrix, degree))
    return maps


def derivation_space(algebra: HomAlgebra, power: int = 0, degree: int = 0) -> list[GradedMap]:
    """Exact basis of the α^k-superderivations of the given degree."""
    if degree not in (0, 1):
        raise GradingError(f"degree must be 0 or 1, got {degree}")
    basis = _solve_linear_family(
        algebra.space, degree,
        lambda d: leibniz_defect(algebra, DerivationCandidate(d, power)),
    )
    logger.debug("derivation space of degree %d, power %d has dimension %d",
                 degree, power, len(basis))
    return basis


def antisymmetric_derivations(algebra: HomAlgebra, form: 'BilinearFormRep',
                              power: int = 0, degree: int = 0,
                              diagonal: bool = False) -> list[GradedMap]:
    """Basis of the superderivations that are antisymmetric for the form.

    With ``diagonal`` only maps diagonal in the basis are solved for.
    """
    def defect(d: GradedMap) -> np.ndarray:
        leibniz = leibniz_defect(algebra, DerivationCandidate(d, power)).reshape(-1)
        return np.concatenate([leibniz, antisymmetry_defect(form, d).reshape(-1)])

    return _solve_linear_family(algebra.space, degree, defect, diagonal)


def find_invertible(basis: list[GradedMap], bound: Optional[int] = None) -> Optional[GradedMap]:
    """First invertible integer combination Σ a_i B_i with |a_i| <= bound.

    ``bound`` defaults to the configured search bound.
    Coefficient vectors are tried by increasing maximum norm, so small answers
    come first.
    """
    if not basis:
        return None
    bound = ToolkitConfig.SEARCH_BOUND if bound is None else bound
    space, degree = basis[0].space, basis[0].degree
    for norm in range(1, bound + 1):
        for coefficients in itertools.product(range(-norm, norm + 1), repeat=len(basis)):
            if max(abs(a) for a in coefficients) != norm:
                continue
            matrix = sum((a * b.matrix for a, b in zip(coefficients, basis) if a),
                         zeros((space.dim, space.dim)))
            if rank(matrix) == space.dim:
                return GradedMap(space, matrix, degree)
    return None