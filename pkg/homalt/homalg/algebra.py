"""Hom-superalgebras given by structure constants."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from homalt.errors import DimensionMismatch, GradingError, IndexOutOfRange
from homalt.gsla import GradedMap, SuperSpace, exact_array, multiply, zeros
from homalt.gsla.graded import frozen


def check_grading(space: SuperSpace, tensor: np.ndarray, label: str = 'product') -> None:
    """Raise GradingError unless c[i, j, k] = 0 whenever |k| != |i| + |j| mod 2."""
    n = space.dim
    if tensor.shape != (n, n, n):
        raise DimensionMismatch(f"{label} tensor has shape {tensor.shape}, expected {(n, n, n)}")
    degrees = np.array(space.degrees, dtype=int)
    allowed = (degrees[:, None, None] + degrees[None, :, None] + degrees[None, None, :]) % 2 == 0
    bad = np.argwhere(~allowed & (tensor != 0))
    if len(bad):
        i, j, k = (int(v) for v in bad[0])
        raise GradingError(
            f"{label} is not even: {space.basis_names[i]}·{space.basis_names[j]} "
            f"has a component on {space.basis_names[k]}"
        )


@dataclass(frozen=True, eq=False)
class HomAlgebra:
    """Triple (space, product, alpha) with an even product and an even twist map."""

    space: SuperSpace
    product: np.ndarray
    alpha: Optional[GradedMap] = None
    name: str = field(default='')

    def __post_init__(self):
        n = self.space.dim
        product = exact_array(self.product) if n else zeros((0, 0, 0))
        check_grading(self.space, product)
        alpha = self.alpha if self.alpha is not None else GradedMap.identity(self.space)
        if alpha.degree != 0:
            raise GradingError("the twist map must be even")
        if not alpha.space.same_shape(self.space):
            raise DimensionMismatch(
                f"twist acts on {alpha.space.label()}, algebra lives on {self.space.label()}"
            )
        object.__setattr__(self, 'product', frozen(product))
        object.__setattr__(self, 'alpha', alpha)

    @classmethod
    def zero(cls, space: SuperSpace, alpha: Optional[GradedMap] = None) -> 'HomAlgebra':
        return cls(space, zeros((space.dim,) * 3), alpha, name=f'ZERO({space.label()})')

    @classmethod
    def from_entries(cls, space: SuperSpace, entries: Iterable[tuple[int, int, int, Fraction]],
                     alpha: Optional[GradedMap] = None, name: str = '') -> 'HomAlgebra':
        """Build from sparse (i, j, k, value) entries meaning e_i·e_j has value on e_k."""
        n = space.dim
        product = zeros((n, n, n))
        for i, j, k, value in entries:
            for index in (i, j, k):
                if not 0 <= index < n:
                    raise IndexOutOfRange(f"basis index {index} outside 0..{n - 1}")
            product[i, j, k] += Fraction(value)
        return cls(space, product, alpha, name)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def degrees(self) -> tuple[int, ...]:
        return self.space.degrees

    def multiply(self, x, y) -> np.ndarray:
        return multiply(self.product, x, y)

    def basis_product(self, i: int, j: int) -> np.ndarray:
        self.check_index(i, j)
        return self.product[i, j].copy()

    def check_index(self, *indices: int) -> None:
        for index in indices:
            if not 0 <= index < self.dim:
                raise IndexOutOfRange(f"basis index {index} outside 0..{self.dim - 1}")

    def with_product(self, product: np.ndarray, alpha: Optional[GradedMap] = None,
                     name: str = '') -> 'HomAlgebra':
        return HomAlgebra(self.space, product, alpha if alpha is not None else self.alpha, name)

    def equals(self, other: 'HomAlgebra') -> bool:
        return (self.space.same_shape(other.space)
                and bool(np.all(self.product == other.product))
                and self.alpha.equals(other.alpha))

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        """Nonzero structure constants in lexicographic order."""
        return [(int(i), int(j), int(k), Fraction(self.product[i, j, k]))
                for i, j, k in np.argwhere(self.product != 0)]
