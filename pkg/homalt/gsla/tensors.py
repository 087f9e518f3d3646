"""Structure-constant tensors and the index juggling the identity checks need.

A bilinear product on an n-dim space is stored as an (n, n, n) tensor ``c`` with
e_i·e_j = Σ_k c[i, j, k] e_k. A trilinear expression T(x, y, z) is an
(n, n, n, n) tensor whose last axis is the output coordinate.
"""

from typing import Sequence

import numpy as np

from homalt.errors import DimensionMismatch
from homalt.gsla.graded import exact_array, identity_matrix, zeros


def _dot(a: np.ndarray, b: np.ndarray, axes) -> np.ndarray:
    """tensordot that copes with zero-length axes on object arrays."""
    a_axes, b_axes = axes
    if any(a.shape[i] == 0 for i in a_axes):
        kept_a = [d for i, d in enumerate(a.shape) if i not in a_axes]
        kept_b = [d for i, d in enumerate(b.shape) if i not in b_axes]
        return zeros(tuple(kept_a + kept_b))
    return np.tensordot(a, b, axes=axes)


def push(matrix: np.ndarray, tensor: np.ndarray) -> np.ndarray:
    """Apply a map to the output slot: (M·T)(x, y, ...) = M(T(x, y, ...))."""
    return _dot(tensor, matrix, ([tensor.ndim - 1], [1]))


def pull(tensor: np.ndarray, first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Precompose the two inputs of a product: T(A x, B y)."""
    step = _dot(first, tensor, ([0], [0]))
    return _dot(second, step, ([0], [1])).transpose(1, 0, 2)


def compose_left(outer: np.ndarray, inner: np.ndarray, alpha: np.ndarray) -> np.ndarray:
    """(x ∘inner y) ∘outer α(z) as a trilinear tensor."""
    n = outer.shape[0]
    return _dot(inner, pull(outer, identity_matrix(n), alpha), ([2], [0]))


def compose_right(outer: np.ndarray, inner: np.ndarray, alpha: np.ndarray) -> np.ndarray:
    """α(x) ∘outer (y ∘inner z) as a trilinear tensor."""
    n = outer.shape[0]
    return _dot(pull(outer, alpha, identity_matrix(n)), inner, ([1], [2])).transpose(0, 2, 3, 1)


def rearrange(tensor: np.ndarray, *order: int) -> np.ndarray:
    """Reorder the input slots: result[v0, v1, ...] = tensor[v_order[0], v_order[1], ...]."""
    inputs = len(order)
    if sorted(order) != list(range(inputs)) or inputs > tensor.ndim:
        raise DimensionMismatch(f"bad slot order {order} for a rank {tensor.ndim} tensor")
    axes = list(np.argsort(order)) + list(range(inputs, tensor.ndim))
    return tensor.transpose(axes)


def koszul_tensor(degrees: Sequence[int], slots: int,
                  pairs: Sequence[tuple[int, int]]) -> np.ndarray:
    """Sign tensor over ``slots`` basis indices.

    Entry (i_0, ..., i_{slots-1}) is (-1)^{Σ |i_a||i_b|} over the given slot
    pairs (a, b). Its shape has a trailing length-1 axis so it broadcasts
    against a tensor whose last axis is the output coordinate.
    """
    parity = np.array(degrees, dtype=int)
    grids = np.meshgrid(*([parity] * slots), indexing='ij') if slots else []
    exponent = np.zeros((len(parity),) * slots, dtype=int)
    for a, b in pairs:
        exponent = exponent + grids[a] * grids[b]
    signs = np.where(exponent % 2 == 0, 1, -1).astype(object)
    return signs[..., np.newaxis]


def multiply(structure: np.ndarray, x, y) -> np.ndarray:
    """Bilinear product of two coordinate vectors."""
    x, y = exact_array(x), exact_array(y)
    n = structure.shape[0]
    if x.shape != (n,) or y.shape != (n,):
        raise DimensionMismatch(f"vectors of shapes {x.shape}, {y.shape} for a {n}-dim product")
    if n == 0:
        return zeros(0)
    return _dot(_dot(x, structure, ([0], [0])), y, ([0], [0]))
