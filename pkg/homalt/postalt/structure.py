"""Hom-post-alternative structures: three products sharing one twist."""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from homalt.errors import DimensionMismatch, GradingError, NotAMorphism
from homalt.gsla import GradedMap, SuperSpace, exact_array, is_zero, push, zeros
from homalt.gsla.graded import frozen
from homalt.homalg import HomAlgebra, check_grading, check_morphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PostAltStructure:
    """Products ≺ (prec), ≻ (succ) and · (dot) with twist α."""

    space: SuperSpace
    prec: np.ndarray
    succ: np.ndarray
    dot: Optional[np.ndarray] = None
    alpha: Optional[GradedMap] = None

    def __post_init__(self):
        n = self.space.dim
        for label in ('prec', 'succ', 'dot'):
            raw = getattr(self, label)
            tensor = zeros((n, n, n)) if raw is None or n == 0 else exact_array(raw)
            check_grading(self.space, tensor, label)
            object.__setattr__(self, label, frozen(tensor))
        alpha = self.alpha if self.alpha is not None else GradedMap.identity(self.space)
        if alpha.degree != 0:
            raise GradingError("the twist map must be even")
        if not alpha.space.same_shape(self.space):
            raise DimensionMismatch("twist and structure live on different spaces")
        object.__setattr__(self, 'alpha', alpha)

    @classmethod
    def zero(cls, space: SuperSpace, alpha: Optional[GradedMap] = None) -> 'PostAltStructure':
        n = space.dim
        return cls(space, zeros((n, n, n)), zeros((n, n, n)), zeros((n, n, n)), alpha)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.space.degrees

    @property
    def is_pre_alternative(self) -> bool:
        """True when the dot product vanishes identically."""
        return is_zero(self.dot)

    def products(self) -> dict[str, np.ndarray]:
        return {'prec': self.prec, 'succ': self.succ, 'dot': self.dot}

    def equals(self, other: 'PostAltStructure') -> bool:
        return (self.space.same_shape(other.space) and self.alpha.equals(other.alpha)
                and all(np.all(mine == other.products()[label])
                        for label, mine in self.products().items()))


def bullet(structure: PostAltStructure) -> HomAlgebra:
    """The algebra x•y = x≺y + x≻y + x·y with the same twist."""
    return HomAlgebra(structure.space, structure.prec + structure.succ + structure.dot,
                      structure.alpha)


def postalt_yau_twist(structure: PostAltStructure, beta: GradedMap) -> PostAltStructure:
    """Push all three products through β and replace α by β∘α."""
    for label, tensor in structure.products().items():
        algebra = HomAlgebra(structure.space, tensor, structure.alpha)
        report = check_morphism(beta, algebra, algebra)
        if not report.holds:
            failed = report.failures()[0]
            logger.warning("twisting map fails %s for %s", failed.name, label)
            raise NotAMorphism(f"map is not a morphism of the {label} product: {failed.name} fails")
    m = beta.matrix
    return PostAltStructure(structure.space, push(m, structure.prec), push(m, structure.succ),
                            push(m, structure.dot), beta.compose(structure.alpha))
