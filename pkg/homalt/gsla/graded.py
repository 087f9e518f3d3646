"""Graded bases, graded maps and the Koszul sign."""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from homalt.errors import DimensionMismatch, GradingError

Degree = int


def koszul_sign(d1: Degree, d2: Degree) -> Fraction:
    """Sign picked up when elements of degrees d1 and d2 are transposed."""
    if d1 not in (0, 1) or d2 not in (0, 1):
        raise GradingError(f"degrees must be 0 or 1, got ({d1}, {d2})")
    return Fraction(-1) if d1 == 1 and d2 == 1 else Fraction(1)


def exact_array(data, shape: Optional[tuple] = None) -> np.ndarray:
    """Build an object array of Fractions from nested sequences."""
    array = np.array(data, dtype=object)
    if shape is not None:
        array = array.reshape(shape)
    flat = array.reshape(-1)
    for index, value in enumerate(flat):
        if isinstance(value, float):
            raise TypeError("floating point entries are not allowed")
        flat[index] = Fraction(value)
    return flat.reshape(array.shape)


def zeros(shape) -> np.ndarray:
    return np.full(shape, Fraction(0), dtype=object)


def identity_matrix(n: int) -> np.ndarray:
    matrix = zeros((n, n))
    for i in range(n):
        matrix[i, i] = Fraction(1)
    return matrix


def unit_vector(n: int, i: int) -> np.ndarray:
    vector = zeros(n)
    vector[i] = Fraction(1)
    return vector


def is_zero(array: np.ndarray) -> bool:
    return not np.any(array != 0)


def frozen(array: np.ndarray) -> np.ndarray:
    copy = np.array(array, dtype=object, copy=True)
    copy.setflags(write=False)
    return copy


@dataclass(frozen=True)
class SuperSpace:
    """Vector superspace with an ordered homogeneous basis, even vectors first."""

    even_dim: int
    odd_dim: int
    basis_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.even_dim < 0 or self.odd_dim < 0:
            raise GradingError("dimensions must be non-negative")
        names = tuple(self.basis_names) or tuple(f'e{i}' for i in range(self.dim))
        if len(names) != self.dim:
            raise DimensionMismatch(
                f"{len(names)} basis names for a {self.even_dim}|{self.odd_dim} space"
            )
        if len(set(names)) != len(names):
            raise GradingError(f"basis names must be distinct: {names}")
        object.__setattr__(self, 'basis_names', names)

    @property
    def dim(self) -> int:
        return self.even_dim + self.odd_dim

    @property
    def degrees(self) -> tuple[Degree, ...]:
        return tuple(self.degree(i) for i in range(self.dim))

    def degree(self, i: int) -> Degree:
        return 0 if i < self.even_dim else 1

    def indices_of_degree(self, degree: Degree) -> range:
        return range(0, self.even_dim) if degree == 0 else range(self.even_dim, self.dim)

    def parity_mask(self, degree: Degree) -> np.ndarray:
        """Boolean (n, n) mask of the entries a map of the given degree may use."""
        degrees = np.array(self.degrees, dtype=int)
        return (degrees[:, None] + degrees[None, :]) % 2 == degree

    def same_shape(self, other: 'SuperSpace') -> bool:
        return self.even_dim == other.even_dim and self.odd_dim == other.odd_dim

    def label(self) -> str:
        return f'{self.even_dim}|{self.odd_dim}'


@dataclass(frozen=True, eq=False)
class GradedMap:
    """Homogeneous linear map; column j of the matrix is the image of basis vector j."""

    space: SuperSpace
    matrix: np.ndarray
    degree: Degree = 0

    def __post_init__(self):
        n = self.space.dim
        matrix = exact_array(self.matrix)
        if matrix.size == 0 and n == 0:
            matrix = zeros((0, 0))
        if matrix.shape != (n, n):
            raise DimensionMismatch(f"expected a {n}x{n} matrix, got {matrix.shape}")
        if self.degree not in (0, 1):
            raise GradingError(f"map degree must be 0 or 1, got {self.degree}")
        forbidden = ~self.space.parity_mask(self.degree)
        if np.any(matrix[forbidden] != 0):
            row, col = (int(v) for v in np.argwhere(forbidden & (matrix != 0))[0])
            kind = 'even' if self.degree == 0 else 'odd'
            raise GradingError(
                f"{kind} map sends basis vector {col} to a combination involving {row}"
            )
        object.__setattr__(self, 'matrix', frozen(matrix))

    @classmethod
    def identity(cls, space: SuperSpace) -> 'GradedMap':
        return cls(space, identity_matrix(space.dim), 0)

    @classmethod
    def zero(cls, space: SuperSpace, degree: Degree = 0) -> 'GradedMap':
        return cls(space, zeros((space.dim, space.dim)), degree)

    @classmethod
    def diagonal(cls, space: SuperSpace, entries: Sequence) -> 'GradedMap':
        matrix = zeros((space.dim, space.dim))
        for i, value in enumerate(entries):
            matrix[i, i] = Fraction(value)
        return cls(space, matrix, 0)

    @property
    def dim(self) -> int:
        return self.space.dim

    def apply(self, vector) -> np.ndarray:
        vector = exact_array(vector)
        if vector.shape != (self.dim,):
            raise DimensionMismatch(f"vector of length {vector.shape} for a {self.dim}-dim map")
        return self.matrix.dot(vector) if self.dim else zeros(0)

    def compose(self, other: 'GradedMap') -> 'GradedMap':
        """self ∘ other."""
        _check_same_space(self, other)
        return GradedMap(self.space, _matmul(self.matrix, other.matrix),
                         (self.degree + other.degree) % 2)

    def power(self, k: int) -> 'GradedMap':
        if k < 0:
            raise ValueError("use invert() for negative powers")
        result = GradedMap.identity(self.space)
        for _ in range(k):
            result = result.compose(self)
        return result

    def scaled(self, factor) -> 'GradedMap':
        return GradedMap(self.space, self.matrix * Fraction(factor), self.degree)

    def __add__(self, other: 'GradedMap') -> 'GradedMap':
        _check_same_space(self, other)
        if self.degree != other.degree:
            raise GradingError("cannot add maps of different degrees")
        return GradedMap(self.space, self.matrix + other.matrix, self.degree)

    def __sub__(self, other: 'GradedMap') -> 'GradedMap':
        return self + other.scaled(-1)

    def equals(self, other: 'GradedMap') -> bool:
        return (self.space.same_shape(other.space) and self.degree == other.degree
                and bool(np.all(self.matrix == other.matrix)))

    def is_identity(self) -> bool:
        return self.equals(GradedMap.identity(self.space))

    def is_involutive(self) -> bool:
        return self.compose(self).is_identity()

    def rows(self) -> list[list[Fraction]]:
        return [[Fraction(v) for v in row] for row in self.matrix]


def compose(*maps: GradedMap) -> GradedMap:
    """Compose left to right as written: compose(f, g, h) = f ∘ g ∘ h."""
    if not maps:
        raise ValueError("compose needs at least one map")
    result = maps[0]
    for other in maps[1:]:
        result = result.compose(other)
    return result


def apply(graded_map: GradedMap, vector) -> np.ndarray:
    return graded_map.apply(vector)


def matmul(left, right) -> np.ndarray:
    left, right = exact_array(left), exact_array(right)
    if left.ndim != 2 or right.ndim not in (1, 2) or left.shape[1] != right.shape[0]:
        raise DimensionMismatch(f"cannot multiply {left.shape} by {right.shape}")
    return _matmul(left, right)


def _matmul(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    if left.shape[1] == 0:
        return zeros((left.shape[0],) + right.shape[1:])
    return left.dot(right)


def _check_same_space(a: GradedMap, b: GradedMap) -> None:
    if not a.space.same_shape(b.space):
        raise DimensionMismatch(
            f"maps on {a.space.label()} and {b.space.label()} spaces do not compose"
        )


def even_maps_with_entries(space: SuperSpace, entries: Iterable) -> Iterable[GradedMap]:
    """Diagonal even maps whose diagonal entries are drawn from ``entries``."""
    values = [Fraction(v) for v in entries]
    for diagonal in itertools.product(values, repeat=space.dim):
        yield GradedMap.diagonal(space, diagonal)
