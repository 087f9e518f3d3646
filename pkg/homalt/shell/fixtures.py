"""Deterministic fixture algebras with their companion forms and operators."""

import itertools
import logging
import math
import re
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from homalt.errors import SingularMatrix, UnknownFixture
from homalt.gsla import GradedMap, SuperSpace, identity_matrix, multiply, zeros
from homalt.homalg import HomAlgebra, check_hom_malcev
from homalt.bform import BilinearFormRep, FormFlavor, derivation_symplectic
from homalt.opx import antisymmetric_derivations, find_invertible
from homalt.shell.document import AlgebraDocument, OperatorKind, from_algebra, map_spec

logger = logging.getLogger(__name__)

FIXTURE_NAMES = ('ZERO(p|q)', 'DUAL', 'GRASSMANN(n)', 'OCT', 'BROKEN2', 'TSTAR', 'NONMALCEV3')

ZERO_PATTERN = re.compile(r'^ZERO\((\d+)\|(\d+)\)$')
GRASSMANN_PATTERN = re.compile(r'^GRASSMANN\((\d+)\)$')


# Zero products

def _pair_blocks(n: int, block: list[list[int]]) -> np.ndarray:
    matrix = zeros((n, n))
    for start in range(0, n, 2):
        for r in range(2):
            for c in range(2):
                matrix[start + r, start + c] = block[r][c]
    return matrix


def _block_diagonal(even: np.ndarray, odd: np.ndarray) -> np.ndarray:
    p, q = even.shape[0], odd.shape[0]
    matrix = zeros((p + q, p + q))
    matrix[:p, :p] = even
    matrix[p:, p:] = odd
    return matrix


def zero_fixture(p: int, q: int) -> AlgebraDocument:
    """Zero product on p|q, with forms and operators whenever the block sizes allow them.

    The pseudo-Euclidean form is the identity on the even block and
    [[0, 1], [-1, 0]] pairs on the odd block; the symplectic one pairs
    [[0, 1], [-1, 0]] on the even block with [[0, 1], [1, 0]] on the odd block.
    D = R is the antisymmetric map turning the first into the second.
    """
    space = SuperSpace(p, q)
    algebra = HomAlgebra.zero(space)
    forms, operators = {}, []
    if q % 2 == 0:
        pe = _block_diagonal(identity_matrix(p), _pair_blocks(q, [[0, 1], [-1, 0]]))
        forms['pe'] = BilinearFormRep(space, pe, FormFlavor.SUPERSYMMETRIC)
    if p % 2 == 0 and q % 2 == 0:
        symplectic = _block_diagonal(_pair_blocks(p, [[0, 1], [-1, 0]]),
                                     _pair_blocks(q, [[0, 1], [1, 0]]))
        forms['symplectic'] = BilinearFormRep(space, symplectic, FormFlavor.SUPER_SKEW)
        d = GradedMap(space, _block_diagonal(_pair_blocks(p, [[0, -1], [1, 0]]),
                                             _pair_blocks(q, [[1, 0], [0, -1]])))
        operators = [map_spec('D', d, OperatorKind.DERIVATION),
                     map_spec('R', d, OperatorKind.ROTA_BAXTER)]
    return from_algebra(algebra, forms, operators)


# Dual numbers

def dual_algebra() -> HomAlgebra:
    space = SuperSpace(2, 0, ('1', 'x'))
    return HomAlgebra.from_entries(space, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], name='DUAL')


def dual_fixture() -> AlgebraDocument:
    algebra = dual_algebra()
    space = algebra.space
    pe = BilinearFormRep(space, [[0, 1], [1, 0]], FormFlavor.SUPERSYMMETRIC)
    operators = [
        map_spec('R', GradedMap(space, [[0, 0], [1, 0]]), OperatorKind.ROTA_BAXTER),
        map_spec('D', GradedMap.diagonal(space, [0, 1]), OperatorKind.DERIVATION),
        map_spec('beta', GradedMap.diagonal(space, [1, 2]), OperatorKind.MORPHISM),
    ]
    return from_algebra(algebra, {'pe': pe}, operators)


# Grassmann algebras

def grassmann_monomials(n: int) -> list[tuple[int, ...]]:
    """Monomials in n odd generators, even degree first, then by size and lexicographically."""
    subsets = [s for size in range(n + 1) for s in itertools.combinations(range(n), size)]
    return sorted(subsets, key=lambda s: (len(s) % 2, len(s), s))


def _merge_sign(left: tuple[int, ...], right: tuple[int, ...]) -> int:
    inversions = sum(1 for a in left for b in right if a > b)
    return -1 if inversions % 2 else 1


def grassmann_algebra(n: int) -> HomAlgebra:
    monomials = grassmann_monomials(n)
    index = {m: i for i, m in enumerate(monomials)}
    even = sum(1 for m in monomials if len(m) % 2 == 0)
    names = tuple('1' if not m else ''.join(f't{g + 1}' for g in m) for m in monomials)
    space = SuperSpace(even, len(monomials) - even, names)
    entries = []
    for left, right in itertools.product(monomials, repeat=2):
        if set(left) & set(right):
            continue
        merged = tuple(sorted(left + right))
        entries.append((index[left], index[right], index[merged], _merge_sign(left, right)))
    return HomAlgebra.from_entries(space, entries, name=f'GRASSMANN({n})')


def grassmann_automorphism(n: int, generator_map) -> GradedMap:
    """Automorphism induced by a linear map of the generators (column j = image of t_{j+1})."""
    algebra = grassmann_algebra(n)
    monomials = grassmann_monomials(n)
    index = {m: i for i, m in enumerate(monomials)}
    g = np.array(generator_map, dtype=object)
    dim = algebra.dim
    images = []
    for monomial in monomials:
        image = zeros(dim)
        image[index[()]] = Fraction(1)
        for generator in monomial:
            factor = zeros(dim)
            for target in range(n):
                factor[index[(target,)]] = Fraction(g[target, generator])
            image = multiply(algebra.product, image, factor)
        images.append(image)
    return GradedMap(algebra.space, np.array(images, dtype=object).T, 0)


def grassmann_fixture(n: int) -> AlgebraDocument:
    algebra = grassmann_algebra(n)
    operators = []
    if n:
        shear = identity_matrix(n)
        for j in range(n - 1):
            shear[j + 1, j] = Fraction(1)
        beta = grassmann_automorphism(n, shear)
        operators.append(map_spec('beta', beta, OperatorKind.MORPHISM))
    return from_algebra(algebra, {}, operators)


# Octonions

def _cd_conjugate(a: tuple) -> tuple:
    if len(a) == 1:
        return a
    half = len(a) // 2
    return _cd_conjugate(a[:half]) + tuple(-v for v in a[half:])


def _cd_add(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _cd_sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def cayley_dickson_product(x: tuple, y: tuple) -> tuple:
    """(a, b)(c, d) = (ac − d*b, da + bc*) on coordinate tuples of length 2^k."""
    if len(x) == 1:
        return (x[0] * y[0],)
    half = len(x) // 2
    a, b, c, d = x[:half], x[half:], y[:half], y[half:]
    first = _cd_sub(cayley_dickson_product(a, c), cayley_dickson_product(_cd_conjugate(d), b))
    second = _cd_add(cayley_dickson_product(d, a), cayley_dickson_product(b, _cd_conjugate(c)))
    return first + second


def octonion_algebra() -> HomAlgebra:
    space = SuperSpace(8, 0, ('1',) + tuple(f'o{i}' for i in range(1, 8)))
    units = [tuple(Fraction(int(i == j)) for j in range(8)) for i in range(8)]
    entries = []
    for i, j in itertools.product(range(8), repeat=2):
        for k, value in enumerate(cayley_dickson_product(units[i], units[j])):
            if value:
                entries.append((i, j, k, value))
    return HomAlgebra.from_entries(space, entries, name='OCT')


def octonion_fixture() -> AlgebraDocument:
    algebra = octonion_algebra()
    beta = GradedMap.diagonal(algebra.space, [1, 1, 1, 1, -1, -1, -1, -1])
    return from_algebra(algebra, {}, [map_spec('beta', beta, OperatorKind.MORPHISM)])


# Negative controls

def broken2_algebra() -> HomAlgebra:
    return HomAlgebra.from_entries(SuperSpace(2, 0), [(0, 0, 1, 1), (1, 1, 0, 1)], name='BROKEN2')


def broken2_fixture() -> AlgebraDocument:
    return from_algebra(broken2_algebra())


NONMALCEV_BRACKET = [(0, 1, 2, 1), (1, 0, 2, -1), (0, 2, 0, 1), (2, 0, 0, -1)]


def non_malcev_algebra() -> HomAlgebra:
    """Product whose commutator is [e0,e1] = e2, [e0,e2] = e0, [e1,e2] = 0."""
    entries = [(i, j, k, Fraction(v, 2)) for i, j, k, v in NONMALCEV_BRACKET]
    return HomAlgebra.from_entries(SuperSpace(3, 0), entries, name='NONMALCEV3')


def search_non_malcev(space: Optional[SuperSpace] = None) -> Optional[HomAlgebra]:
    """First anticommutative bracket on 3|0 with basis-vector values that is not Hom-Malcev.

    The values of [e0,e1], [e0,e2] and [e1,e2] range over 0, e0, e1, e2.
    """
    space = space or SuperSpace(3, 0)
    pairs = [(0, 1), (0, 2), (1, 2)]
    for choice in itertools.product(range(-1, space.dim), repeat=len(pairs)):
        product = zeros((space.dim,) * 3)
        for (i, j), k in zip(pairs, choice):
            if k >= 0:
                product[i, j, k] = Fraction(1)
                product[j, i, k] = Fraction(-1)
        bracket = HomAlgebra(space, product)
        if not check_hom_malcev(bracket).holds:
            logger.debug("non-Malcev bracket found at choice %s", choice)
            return bracket
    return None


def non_malcev_fixture() -> AlgebraDocument:
    return from_algebra(non_malcev_algebra())


# A four-dimensional pseudo-Euclidean algebra with an invertible antisymmetric derivation

def tstar_algebra() -> HomAlgebra:
    """p1·p1 = p2 and p1·m2 = m2·p1 = m1 on the basis p1, p2, m1, m2."""
    space = SuperSpace(4, 0, ('p1', 'p2', 'm1', 'm2'))
    return HomAlgebra.from_entries(space, [(0, 0, 1, 1), (0, 3, 2, 1), (3, 0, 2, 1)],
                                   name='TSTAR')


def _primitive(graded_map: GradedMap) -> GradedMap:
    """Scale to coprime integer entries with a positive first nonzero entry."""
    entries = [Fraction(v) for v in graded_map.matrix.flat if v]
    if not entries:
        return graded_map
    scale = Fraction(math.lcm(*(v.denominator for v in entries)),
                     math.gcd(*(v.numerator for v in entries)))
    if entries[0] < 0:
        scale = -scale
    return graded_map.scaled(scale)


def search_symplectic_derivation(algebra: HomAlgebra,
                                 form: BilinearFormRep) -> Optional[GradedMap]:
    """Invertible antisymmetric even derivation found by exact solving.

    Diagonal derivations are tried before the whole space, each through
    find_invertible and so within the configured search bound.
    """
    for diagonal in (True, False):
        found = find_invertible(antisymmetric_derivations(algebra, form, diagonal=diagonal))
        if found is not None:
            logger.debug("invertible antisymmetric derivation found (diagonal=%s)", diagonal)
            return _primitive(found)
    return None


def tstar_fixture() -> AlgebraDocument:
    algebra = tstar_algebra()
    space = algebra.space
    gram = zeros((4, 4))
    for i, j in ((0, 2), (2, 0), (1, 3), (3, 1)):
        gram[i, j] = Fraction(1)
    pe = BilinearFormRep(space, gram, FormFlavor.SUPERSYMMETRIC)
    d = search_symplectic_derivation(algebra, pe)
    if d is None:
        raise SingularMatrix("TSTAR has no invertible antisymmetric derivation "
                             "within the search bound")
    forms = {
        'pe': pe,
        'symplectic': derivation_symplectic(algebra, pe, d),
    }
    operators = [
        map_spec('D', d, OperatorKind.DERIVATION),
        map_spec('beta', GradedMap.diagonal(space, [2, 4, Fraction(1, 2), Fraction(1, 4)]),
                 OperatorKind.MORPHISM),
    ]
    return from_algebra(algebra, forms, operators)


_GENERATORS: dict[str, Callable[[], AlgebraDocument]] = {
    'DUAL': dual_fixture,
    'OCT': octonion_fixture,
    'BROKEN2': broken2_fixture,
    'TSTAR': tstar_fixture,
    'NONMALCEV3': non_malcev_fixture,
}


def generate_fixture(name: str, params: Optional[dict] = None) -> AlgebraDocument:
    """Document for a named fixture such as "DUAL", "ZERO(0|2)" or "GRASSMANN(2)".

    ZERO and GRASSMANN also accept their sizes as params (p, q or n).
    """
    params = params or {}
    key = name.strip().upper()
    match = ZERO_PATTERN.match(key)
    if match:
        return zero_fixture(int(match.group(1)), int(match.group(2)))
    if key == 'ZERO':
        return zero_fixture(int(params.get('p', 0)), int(params.get('q', 0)))
    match = GRASSMANN_PATTERN.match(key)
    if match:
        return grassmann_fixture(int(match.group(1)))
    if key == 'GRASSMANN':
        return grassmann_fixture(int(params.get('n', 1)))
    if key in _GENERATORS:
        return _GENERATORS[key]()
    raise UnknownFixture(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")
