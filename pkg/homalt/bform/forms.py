"""Bilinear forms on superspaces."""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from homalt.errors import DimensionMismatch
from homalt.gsla import SuperSpace, exact_array, kernel_vector, koszul_tensor, matmul, rank
from homalt.gsla.graded import frozen
from homalt.homalg.report import AxiomEntry, AxiomReport, flag_entry, scalar_entry

logger = logging.getLogger(__name__)


class FormFlavor(str, Enum):
    """Symmetry type of a form."""
    SUPERSYMMETRIC = "supersymmetric"
    SUPER_SKEW = "super-skew"


class FormParity(str, Enum):
    """Parity of a form."""
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True, eq=False)
class BilinearFormRep:
    """Gram matrix gram[i][j] = Ψ(e_i, e_j) with its declared flavor and parity."""

    space: SuperSpace
    gram: np.ndarray
    flavor: FormFlavor = FormFlavor.SUPERSYMMETRIC
    parity: FormParity = FormParity.EVEN

    def __post_init__(self):
        n = self.space.dim
        gram = exact_array(self.gram) if n else np.zeros((0, 0), dtype=object)
        if gram.shape != (n, n):
            raise DimensionMismatch(f"gram matrix of shape {gram.shape} on a {n}-dim space")
        object.__setattr__(self, 'gram', frozen(gram))
        object.__setattr__(self, 'flavor', FormFlavor(self.flavor))
        object.__setattr__(self, 'parity', FormParity(self.parity))

    @property
    def dim(self) -> int:
        return self.space.dim

    def value(self, u, v):
        """Ψ(u, v) = uᵀ G v."""
        return check_form_value(self, u, v)

    def equals(self, other: 'BilinearFormRep') -> bool:
        return (self.space.same_shape(other.space) and self.flavor == other.flavor
                and self.parity == other.parity and bool(np.all(self.gram == other.gram)))

    def with_gram(self, gram, flavor: FormFlavor = None) -> 'BilinearFormRep':
        return BilinearFormRep(self.space, gram, flavor or self.flavor, self.parity)


def check_form_value(form: BilinearFormRep, u, v):
    u, v = exact_array(u), exact_array(v)
    if u.shape != (form.dim,) or v.shape != (form.dim,):
        raise DimensionMismatch(f"vectors of shapes {u.shape}, {v.shape} for a {form.dim}-dim form")
    if form.dim == 0:
        return Fraction(0)
    return u.dot(form.gram.dot(v))


def swap_signs(space: SuperSpace) -> np.ndarray:
    """Matrix of (−1)^{|i||j|}."""
    return koszul_tensor(space.degrees, 2, [(0, 1)])[..., 0]


def symmetry_entry(space: SuperSpace, gram: np.ndarray, flavor: FormFlavor) -> AxiomEntry:
    sign = 1 if flavor == FormFlavor.SUPERSYMMETRIC else -1
    return scalar_entry(flavor.value, gram - sign * swap_signs(space) * gram.T)


def parity_entry(space: SuperSpace, gram: np.ndarray, parity: FormParity) -> AxiomEntry:
    degree = 0 if parity == FormParity.EVEN else 1
    allowed = space.parity_mask(degree)
    return scalar_entry(parity.value, np.where(allowed, 0, gram))


def nondegenerate_entry(form: BilinearFormRep) -> AxiomEntry:
    """Nondegeneracy; a failing entry carries a nonzero x with Ψ(x, ·) = 0."""
    if check_nondegenerate(form):
        return AxiomEntry('nondegenerate', True)
    return flag_entry('nondegenerate', False, (), kernel_vector(form.gram))


def check_form_shape(form: BilinearFormRep) -> AxiomReport:
    """The gram matrix against the declared flavor and parity."""
    return AxiomReport([
        symmetry_entry(form.space, form.gram, form.flavor),
        parity_entry(form.space, form.gram, form.parity),
    ])


def required_shape(form: BilinearFormRep, flavor: FormFlavor,
                   parity: FormParity = FormParity.EVEN) -> AxiomReport:
    """Shape entries for a structure that needs a particular flavor and parity."""
    declared = form.flavor == flavor and form.parity == parity
    if not declared:
        logger.debug("form declared %s/%s, %s/%s required", form.flavor.value,
                     form.parity.value, flavor.value, parity.value)
    return AxiomReport([
        flag_entry('declaration', declared),
        symmetry_entry(form.space, form.gram, flavor),
        parity_entry(form.space, form.gram, parity),
    ])


def check_nondegenerate(form: BilinearFormRep) -> bool:
    return rank(form.gram) == form.dim if form.dim else True


def check_isometry(f, source: BilinearFormRep, target: BilinearFormRep) -> bool:
    """Ψ'(f x, f y) = Ψ(x, y), i.e. Mᵀ G' M = G."""
    if not (source.space.same_shape(target.space) and f.space.same_shape(source.space)):
        raise DimensionMismatch("isometry check needs one space for the map and both forms")
    if source.dim == 0:
        return True
    m = f.matrix
    return bool(np.all(matmul(matmul(m.T, target.gram), m) == source.gram))


def check_alpha_compatible(form: BilinearFormRep, alpha) -> AxiomReport:
    """Ψ(α x, α y) = Ψ(x, y)."""
    m = alpha.matrix
    defect = matmul(matmul(m.T, form.gram), m) - form.gram
    return AxiomReport([scalar_entry('alpha-compatible', defect)])
