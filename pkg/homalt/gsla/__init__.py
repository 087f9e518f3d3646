"""Graded superspace linear algebra over exact rationals."""

from .graded import (
    Degree,
    GradedMap,
    SuperSpace,
    apply,
    compose,
    even_maps_with_entries,
    exact_array,
    identity_matrix,
    is_zero,
    koszul_sign,
    matmul,
    unit_vector,
    zeros,
)
from .linalg import (
    inverse_matrix,
    invert,
    kernel_vector,
    nullspace,
    rank,
    solve_columns,
    solve_square,
)
from .tensors import (
    compose_left,
    compose_right,
    koszul_tensor,
    multiply,
    pull,
    push,
    rearrange,
)

__all__ = [
    'Degree',
    'GradedMap',
    'SuperSpace',
    'apply',
    'compose',
    'compose_left',
    'compose_right',
    'even_maps_with_entries',
    'exact_array',
    'identity_matrix',
    'inverse_matrix',
    'invert',
    'is_zero',
    'kernel_vector',
    'koszul_sign',
    'koszul_tensor',
    'matmul',
    'multiply',
    'nullspace',
    'pull',
    'push',
    'rank',
    'rearrange',
    'solve_columns',
    'solve_square',
    'unit_vector',
    'zeros',
]
