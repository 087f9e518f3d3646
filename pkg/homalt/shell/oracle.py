"""Brute-force identity oracle.

Evaluates identities on random homogeneous combinations of basis vectors with
sparse dictionary arithmetic, independently of the tensor contractions used by
the checkers. Agreement between the two paths is what the tests rely on.
"""

import itertools
import logging
import random
from fractions import Fraction
from typing import Callable, Optional, Union

import numpy as np

from homalt.config import ToolkitConfig
from homalt.errors import NotPreAlt, UnknownIdentity, UsageError
from homalt.homalg import HomAlgebra
from homalt.postalt import PostAltStructure

logger = logging.getLogger(__name__)

Vector = dict[int, Fraction]
Table = dict[tuple[int, int], Vector]
Element = tuple[Vector, int]

COEFFICIENT_BOUND = 9


# Sparse arithmetic

def _table(tensor: np.ndarray) -> Table:
    table: Table = {}
    for i, j, k in np.argwhere(tensor != 0):
        table.setdefault((int(i), int(j)), {})[int(k)] = Fraction(tensor[i, j, k])
    return table


def _columns(matrix: np.ndarray) -> dict[int, Vector]:
    """Column j of a map as a sparse vector."""
    return {j: {int(i): Fraction(matrix[i, j]) for i in range(matrix.shape[0])
                     if matrix[i, j] != 0}
            for j in range(matrix.shape[1])}


def _add(*vectors: Vector) -> Vector:
    total: Vector = {}
    for vector in vectors:
        for k, v in vector.items():
            total[k] = total.get(k, Fraction(0)) + v
    return {k: v for k, v in total.items() if v != 0}


def _scale(factor: int, vector: Vector) -> Vector:
    return {k: factor * v for k, v in vector.items() if factor * v != 0}


def _sub(a: Vector, b: Vector) -> Vector:
    return _add(a, _scale(-1, b))


def _mul(table: Table, x: Vector, y: Vector) -> Vector:
    result: Vector = {}
    for i, xi in x.items():
        for j, yj in y.items():
            for k, c in table.get((i, j), {}).items():
                result[k] = result.get(k, Fraction(0)) + xi * yj * c
    return {k: v for k, v in result.items() if v != 0}


def _apply(columns: dict[int, Vector], x: Vector) -> Vector:
    result: Vector = {}
    for j, xj in x.items():
        for i, c in columns[j].items():
            result[i] = result.get(i, Fraction(0)) + xj * c
    return {k: v for k, v in result.items() if v != 0}


def sign(*degree_pairs: tuple[int, int]) -> int:
    """(−1) raised to the sum of products of the given degree pairs."""
    exponent = sum(a * b for a, b in degree_pairs)
    return -1 if exponent % 2 else 1


class _Context:
    """Sparse products of one algebra or structure plus its twist."""

    def __init__(self, alpha: np.ndarray, **tensors: np.ndarray):
        self.alpha = _columns(alpha)
        self.tables = {name: _table(tensor) for name, tensor in tensors.items()}

    def mul(self, name: str, x: Vector, y: Vector) -> Vector:
        if name == 'bullet':
            return _add(*(_mul(self.tables[part], x, y) for part in ('prec', 'succ', 'dot')))
        if name == 'bullet2':
            return _add(*(_mul(self.tables[part], x, y) for part in ('prec', 'succ')))
        return _mul(self.tables[name], x, y)

    def a(self, x: Vector) -> Vector:
        return _apply(self.alpha, x)

    def left(self, outer: str, inner: str, x: Vector, y: Vector, z: Vector) -> Vector:
        """(x inner y) outer α(z)."""
        return self.mul(outer, self.mul(inner, x, y), self.a(z))

    def right(self, outer: str, inner: str, x: Vector, y: Vector, z: Vector) -> Vector:
        """α(x) outer (y inner z)."""
        return self.mul(outer, self.a(x), self.mul(inner, y, z))

    def assoc(self, outer_left: str, inner_left: str, outer_right: str, inner_right: str,
              x: Vector, y: Vector, z: Vector) -> Vector:
        return _sub(self.left(outer_left, inner_left, x, y, z),
                    self.right(outer_right, inner_right, x, y, z))


# Algebra identities; the product table is called 'mu'

def _multiplicative(ctx: _Context, x: Element, y: Element) -> Vector:
    return _sub(ctx.a(ctx.mul('mu', x[0], y[0])), ctx.mul('mu', ctx.a(x[0]), ctx.a(y[0])))


def _as(ctx: _Context, x: Element, y: Element, z: Element) -> Vector:
    return ctx.assoc('mu', 'mu', 'mu', 'mu', x[0], y[0], z[0])


def _hom_associative(ctx, x, y, z):
    return _as(ctx, x, y, z)


def _left_alternative(ctx, x, y, z):
    return _add(_as(ctx, x, y, z), _scale(sign((x[1], y[1])), _as(ctx, y, x, z)))


def _right_alternative(ctx, x, y, z):
    return _add(_as(ctx, x, y, z), _scale(sign((y[1], z[1])), _as(ctx, x, z, y)))


def _flexible(ctx, x, y, z):
    s = sign((x[1], y[1]), (x[1], z[1]), (y[1], z[1]))
    return _add(_as(ctx, x, y, z), _scale(s, _as(ctx, z, y, x)))


def _cyclic_associator(ctx, x, y, z):
    s = sign((x[1], y[1]), (x[1], z[1]))
    return _sub(_as(ctx, x, y, z), _scale(s, _as(ctx, y, z, x)))


def _malcev_antisymmetry(ctx, x, y):
    return _add(ctx.mul('mu', x[0], y[0]), _scale(sign((x[1], y[1])), ctx.mul('mu', y[0], x[0])))


def _malcev_identity(ctx, x, y, z, t):
    def br(u, v):
        return ctx.mul('mu', u, v)

    def nested(p, q, r, s):
        return br(br(br(p[0], q[0]), ctx.a(r[0])), ctx.a(ctx.a(s[0])))

    dx, dy, dz, dt = x[1], y[1], z[1], t[1]
    lhs = _scale(sign((dy, dz)), br(ctx.a(br(x[0], z[0])), ctx.a(br(y[0], t[0]))))
    rhs = _add(
        nested(x, y, z, t),
        _scale(sign((dx, dy), (dx, dz), (dx, dt)), nested(y, z, t, x)),
        _scale(sign((dx, dz), (dx, dt), (dy, dz), (dy, dt)), nested(z, t, x, y)),
        _scale(sign((dt, dx), (dt, dy), (dt, dz)), nested(t, x, y, z)),
    )
    return _sub(lhs, rhs)


# Pre-alternative identities: associators of the two-term bullet

def _ass_l(ctx, x, y, z):
    return ctx.assoc('succ', 'bullet2', 'succ', 'succ', x[0], y[0], z[0])


def _ass_m(ctx, x, y, z):
    return ctx.assoc('prec', 'succ', 'succ', 'prec', x[0], y[0], z[0])


def _ass_r(ctx, x, y, z):
    return ctx.assoc('prec', 'prec', 'prec', 'bullet2', x[0], y[0], z[0])


def _pre_1(ctx, x, y, z):
    return _add(_ass_m(ctx, x, y, z), _scale(sign((x[1], y[1])), _ass_r(ctx, y, x, z)))


def _pre_2(ctx, x, y, z):
    return _add(_ass_m(ctx, x, y, z), _scale(sign((y[1], z[1])), _ass_l(ctx, x, z, y)))


def _pre_3(ctx, x, y, z):
    return _add(_ass_l(ctx, x, y, z), _scale(sign((x[1], y[1])), _ass_l(ctx, y, x, z)))


def _pre_4(ctx, x, y, z):
    return _add(_ass_r(ctx, x, y, z), _scale(sign((y[1], z[1])), _ass_r(ctx, x, z, y)))


# Post-alternative identities: the three-term bullet and the dot product

def _dot_assoc(ctx, x, y, z):
    return ctx.assoc('dot', 'dot', 'dot', 'dot', x[0], y[0], z[0])


def _prec_dot(ctx, x, y, z):
    return ctx.assoc('prec', 'dot', 'dot', 'prec', x[0], y[0], z[0])


def _dot_succ(ctx, x, y, z):
    return ctx.assoc('dot', 'succ', 'succ', 'dot', x[0], y[0], z[0])


def _mid(ctx, x, y, z):
    return ctx.assoc('prec', 'succ', 'succ', 'prec', x[0], y[0], z[0])


def _prec_bullet(ctx, x, y, z):
    return ctx.assoc('prec', 'prec', 'prec', 'bullet', x[0], y[0], z[0])


def _succ_bullet(ctx, x, y, z):
    return ctx.assoc('succ', 'bullet', 'succ', 'succ', x[0], y[0], z[0])


def _post_1(ctx, x, y, z):
    return _add(_dot_assoc(ctx, x, y, z), _scale(sign((x[1], y[1])), _dot_assoc(ctx, y, x, z)))


def _post_2(ctx, x, y, z):
    return _add(_dot_assoc(ctx, x, y, z), _scale(sign((y[1], z[1])), _dot_assoc(ctx, x, z, y)))


def _post_3(ctx, x, y, z):
    return _add(_prec_dot(ctx, x, y, z), _scale(sign((x[1], y[1])), _prec_dot(ctx, y, x, z)))


def _post_4(ctx, x, y, z):
    return _add(_dot_succ(ctx, x, y, z), _scale(sign((y[1], z[1])), _dot_succ(ctx, x, z, y)))


def _post_5(ctx, x, y, z):
    return _add(
        _scale(sign((x[1], y[1])), _dot_succ(ctx, y, x, z)),
        _scale(-1, ctx.right('dot', 'succ', x[0], y[0], z[0])),
        ctx.left('dot', 'prec', x[0], y[0], z[0]),
    )


def _post_6(ctx, x, y, z):
    first = _sub(ctx.left('dot', 'prec', z[0], x[0], y[0]),
                 ctx.right('dot', 'succ', z[0], x[0], y[0]))
    return _add(first, _scale(sign((x[1], y[1])), _prec_dot(ctx, z, y, x)))


def _post_7(ctx, x, y, z):
    return _add(_mid(ctx, x, y, z), _scale(sign((x[1], y[1])), _prec_bullet(ctx, y, x, z)))


def _post_8(ctx, x, y, z):
    return _add(_mid(ctx, x, y, z), _scale(sign((y[1], z[1])), _succ_bullet(ctx, x, z, y)))


def _post_9(ctx, x, y, z):
    return _add(_succ_bullet(ctx, x, y, z), _scale(sign((x[1], y[1])), _succ_bullet(ctx, y, x, z)))


def _post_10(ctx, x, y, z):
    return _add(_prec_bullet(ctx, z, x, y), _scale(sign((x[1], y[1])), _prec_bullet(ctx, z, y, x)))


ALGEBRA_IDENTITIES: dict[str, tuple[int, Callable]] = {
    'multiplicative': (2, _multiplicative),
    'hom-associative': (3, _hom_associative),
    'left-alternative': (3, _left_alternative),
    'right-alternative': (3, _right_alternative),
    'flexible': (3, _flexible),
    'cyclic-associator': (3, _cyclic_associator),
    'malcev-antisymmetry': (2, _malcev_antisymmetry),
    'malcev-identity': (4, _malcev_identity),
}

PRE_ALTERNATIVE_IDENTITIES: dict[str, tuple[int, Callable]] = {
    f'pre-alternative-{i}': (3, fn) for i, fn in enumerate((_pre_1, _pre_2, _pre_3, _pre_4), 1)
}

POST_ALTERNATIVE_IDENTITIES: dict[str, tuple[int, Callable]] = {
    f'post-alternative-{i}': (3, fn)
    for i, fn in enumerate((_post_1, _post_2, _post_3, _post_4, _post_5,
                            _post_6, _post_7, _post_8, _post_9, _post_10), 1)
}

IDENTITY_CATALOG = tuple(ALGEBRA_IDENTITIES) + tuple(PRE_ALTERNATIVE_IDENTITIES) + tuple(
    POST_ALTERNATIVE_IDENTITIES)


def random_element(rng: random.Random, degrees: tuple[int, ...], degree: int) -> Element:
    """Combination of the basis vectors of one degree with small integer coefficients."""
    vector = {}
    for index, d in enumerate(degrees):
        if d == degree:
            coefficient = rng.randint(-COEFFICIENT_BOUND, COEFFICIENT_BOUND)
            if coefficient:
                vector[index] = Fraction(coefficient)
    return vector, degree


def _context(source: Union[HomAlgebra, PostAltStructure], identity: str) -> _Context:
    alpha = source.alpha.matrix
    if identity in ALGEBRA_IDENTITIES:
        if isinstance(source, PostAltStructure):
            return _Context(alpha, mu=source.prec + source.succ + source.dot)
        return _Context(alpha, mu=source.product)
    if not isinstance(source, PostAltStructure):
        raise UsageError(f"identity {identity!r} needs a post-alternative structure")
    if identity in PRE_ALTERNATIVE_IDENTITIES and np.any(source.dot != 0):
        raise NotPreAlt("the dot product of the structure is not zero")
    return _Context(alpha, prec=source.prec, succ=source.succ, dot=source.dot)


def lookup_identity(identity: str) -> tuple[int, Callable]:
    for catalog in (ALGEBRA_IDENTITIES, PRE_ALTERNATIVE_IDENTITIES, POST_ALTERNATIVE_IDENTITIES):
        if identity in catalog:
            return catalog[identity]
    raise UnknownIdentity(f"unknown identity {identity!r}; known: {', '.join(IDENTITY_CATALOG)}")


def oracle_check(source: Union[HomAlgebra, PostAltStructure], identity: str,
                 trials: Optional[int] = None, seed: Optional[int] = None) -> bool:
    """True when the identity vanishes on every random trial.

    Algebra identities applied to a post-alternative structure use the sum of
    its three products.
    """
    arity, evaluate = lookup_identity(identity)
    trials = ToolkitConfig.ORACLE_TRIALS if trials is None else trials
    if trials <= 0:
        raise UsageError(f"trials must be positive, got {trials}")
    seed = ToolkitConfig.ORACLE_SEED if seed is None else seed
    ctx = _context(source, identity)
    rng = random.Random(seed)
    degrees = source.space.degrees
    # cycle through every degree pattern so odd slots are always exercised
    patterns = list(itertools.product(sorted(set(degrees)) or [0], repeat=arity))
    for trial in range(trials):
        pattern = patterns[trial % len(patterns)]
        elements = [random_element(rng, degrees, degree) for degree in pattern]
        defect = evaluate(ctx, *elements)
        if defect:
            logger.debug("oracle: %s fails on trial %d", identity, trial)
            return False
    return True
