"""Exact linear algebra over the rationals.

Rank, solving and kernels all go through one fraction-free (Bareiss)
elimination on integer rows. Each input row is first scaled by the lcm of its
denominators, which changes neither the rank nor the solution set.
"""

import logging
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from homalt.errors import DimensionMismatch, SingularMatrix
from homalt.gsla.graded import GradedMap, exact_array, identity_matrix, zeros

logger = logging.getLogger(__name__)


def _integer_row(row: Sequence[Fraction]) -> list[int]:
    scale = 1
    for value in row:
        scale = math.lcm(scale, Fraction(value).denominator)
    return [int(Fraction(value) * scale) for value in row]


def _as_rows(matrix) -> list[list[Fraction]]:
    array = exact_array(matrix)
    if array.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {array.shape}")
    return [list(row) for row in array]


def bareiss_echelon(rows: list[list[int]], columns: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Returns the echelon rows and the pivot column of each nonzero row. Every
    division is exact because each entry is a minor of the input.
    """
    work = [list(row) for row in rows]
    pivots: list[int] = []
    previous = 1
    r = 0
    for c in range(columns):
        if r == len(work):
            break
        pivot_row = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        pivot = work[r][c]
        for i in range(r + 1, len(work)):
            factor = work[i][c]
            for j in range(c + 1, columns):
                work[i][j] = (pivot * work[i][j] - factor * work[r][j]) // previous
            work[i][c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return work, pivots


def rank(matrix) -> int:
    rows = _as_rows(matrix)
    if not rows:
        return 0
    columns = len(rows[0])
    _, pivots = bareiss_echelon([_integer_row(row) for row in rows], columns)
    return len(pivots)


def _back_substitute(echelon: list[list[int]], pivots: list[int], n: int,
                     rhs_columns: int) -> np.ndarray:
    """Solve an upper-triangular augmented system with n unknowns."""
    solution = zeros((n, rhs_columns))
    for r in reversed(range(len(pivots))):
        c = pivots[r]
        row = echelon[r]
        for k in range(rhs_columns):
            total = Fraction(row[n + k])
            for j in range(c + 1, n):
                if row[j]:
                    total -= row[j] * solution[j, k]
            solution[c, k] = total / row[c]
    return solution


def solve_columns(h, b) -> np.ndarray:
    """Solve H·X = B for every column of B with a single elimination."""
    h_rows = _as_rows(h)
    n = len(h_rows)
    if any(len(row) != n for row in h_rows):
        raise DimensionMismatch("solve_columns needs a square matrix")
    b_array = exact_array(b)
    if b_array.ndim == 1:
        b_array = b_array.reshape(n, 1) if n else zeros((0, 1))
    if b_array.shape[0] != n:
        raise DimensionMismatch(f"right-hand side has {b_array.shape[0]} rows, expected {n}")
    columns = b_array.shape[1]
    augmented = [_integer_row(list(h_rows[i]) + list(b_array[i])) for i in range(n)]
    echelon, pivots = bareiss_echelon(augmented, n + columns)
    square_pivots = [c for c in pivots if c < n]
    if len(square_pivots) < n:
        raise SingularMatrix(f"matrix of size {n} has rank {len(square_pivots)}")
    return _back_substitute(echelon, pivots, n, columns)


def solve_square(h, r) -> np.ndarray:
    """Unique exact solution v of H·v = r."""
    r_array = exact_array(r)
    return solve_columns(h, r_array.reshape(-1, 1)).reshape(-1)


def inverse_matrix(matrix) -> np.ndarray:
    n = len(_as_rows(matrix))
    return solve_columns(matrix, identity_matrix(n))


def invert(graded_map: GradedMap) -> GradedMap:
    """Inverse of a graded map; raises SingularMatrix when it has none."""
    inverse = inverse_matrix(graded_map.matrix) if graded_map.dim else zeros((0, 0))
    return GradedMap(graded_map.space, inverse, graded_map.degree)


def nullspace(matrix, columns: int = None) -> list[np.ndarray]:
    """Exact basis of the kernel {v : M·v = 0}."""
    array = exact_array(matrix)
    rows = [list(row) for row in array] if array.ndim == 2 else _as_rows(array)
    if columns is None:
        columns = len(rows[0]) if rows else 0
    if not rows:
        return [_unit(columns, f) for f in range(columns)]
    echelon, pivots = bareiss_echelon([_integer_row(row) for row in rows], columns)
    free = [c for c in range(columns) if c not in pivots]
    basis = []
    for f in free:
        vector = zeros(columns)
        vector[f] = Fraction(1)
        for r in reversed(range(len(pivots))):
            c = pivots[r]
            row = echelon[r]
            total = Fraction(0)
            for j in range(c + 1, columns):
                if row[j]:
                    total -= row[j] * vector[j]
            vector[c] = total / row[c]
        basis.append(vector)
    logger.debug("kernel of a %dx%d system has dimension %d", len(rows), columns, len(basis))
    return basis


def _unit(n: int, i: int) -> np.ndarray:
    vector = zeros(n)
    vector[i] = Fraction(1)
    return vector


def kernel_vector(matrix) -> np.ndarray:
    """Some nonzero vector v with v·M = 0 (left kernel), or None when M is nondegenerate."""
    transposed = exact_array(matrix).T
    basis = nullspace(transposed, columns=transposed.shape[1])
    return basis[0] if basis else None
