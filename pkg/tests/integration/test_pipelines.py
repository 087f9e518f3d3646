"""Whole constructions chained across modules, checked against the fixture suite."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from homalt.bform import (
    BilinearFormRep,
    check_form_shape,
    check_phi_quadratic_malcev,
    check_pseudo_euclidean,
    check_symplectic,
    derivation_symplectic,
    pe_yau_twist,
)
from homalt.gsla import GradedMap, SuperSpace, rank, zeros
from homalt.homalg import (
    HomAlgebra,
    alpha_power_twist,
    check_alternative,
    check_cyclic_associator,
    check_flexible,
    check_hom_malcev,
    commutator_bracket,
    opposite,
    untwist,
    yau_twist,
)
from homalt.opx import (
    RotaBaxterOp,
    check_rb_form_compat,
    check_rota_baxter,
    rb_derived_product,
    rb_symplectic,
)
from homalt.postalt import (
    PostAltStructure,
    bullet,
    check_bullet_equals_product,
    check_post_alternative,
    check_pre_alternative,
    postalt_yau_twist,
    rb_to_postalt,
    symplectic_split,
)
from homalt.shell import (
    checker_verdict,
    generate_fixture,
    oracle_check,
    to_algebra,
    to_form,
    to_map,
    to_rota_baxter,
)
from homalt.shell.fixtures import grassmann_automorphism, search_symplectic_derivation
from homalt.shell.oracle import ALGEBRA_IDENTITIES

ALTERNATIVE_FIXTURES = ['ZERO(1|1)', 'ZERO(0|2)', 'DUAL', 'GRASSMANN(1)', 'GRASSMANN(2)',
                        'OCT', 'TSTAR']

generator_maps = st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2),
                          min_size=2, max_size=2)


def algebra(name: str):
    return to_algebra(generate_fixture(name))


def scalar_operator(target, value, weight) -> RotaBaxterOp:
    return RotaBaxterOp(GradedMap.diagonal(target.space, [value] * target.dim), weight)


def graded_tstar_extension() -> tuple[HomAlgebra, BilinearFormRep]:
    """Dual extension of θ1θ2 = u on the basis u, u*, θ1, θ2, θ1*, θ2*, with its pairing."""
    space = SuperSpace(2, 4, ('u', 'u*', 't1', 't2', 't1*', 't2*'))
    source = HomAlgebra.from_entries(space, [
        (2, 3, 0, 1), (3, 2, 0, -1),
        (2, 1, 5, -1), (1, 2, 5, -1),
        (3, 1, 4, 1), (1, 3, 4, 1),
    ], name='T*(u)')
    gram = zeros((6, 6))
    for i, j, value in ((0, 1, 1), (1, 0, 1), (2, 4, 1), (4, 2, -1), (3, 5, 1), (5, 3, -1)):
        gram[i, j] = value
    return source, BilinearFormRep(space, gram)


def super_matrices() -> HomAlgebra:
    """M(1|1) on E11, E22 (even) and E12, E21 (odd), with E_ij E_jk = E_ik."""
    space = SuperSpace(2, 2, ('E11', 'E22', 'E12', 'E21'))
    return HomAlgebra.from_entries(space, [
        (0, 0, 0, 1), (0, 2, 2, 1), (2, 1, 2, 1), (2, 3, 0, 1),
        (1, 1, 1, 1), (1, 3, 3, 1), (3, 0, 3, 1), (3, 2, 1, 1),
    ], name='M(1|1)')


@pytest.mark.parametrize('name', ALTERNATIVE_FIXTURES)
def test_fixtures_are_alternative(name):
    assert check_alternative(algebra(name)).holds


@pytest.mark.parametrize('name', ALTERNATIVE_FIXTURES + ['GRASSMANN(3)', 'ZERO(2|2)'])
def test_alternative_fixtures_are_flexible_with_cyclic_associator(name):
    source = algebra(name)
    assert check_flexible(source).holds
    assert check_cyclic_associator(source).holds


def test_broken2_is_reported_with_its_witness():
    entry = check_alternative(algebra('BROKEN2'))['left-alternative']
    assert entry.witness.indices == (0, 0, 1)
    assert [str(v) for v in entry.witness.defect] == ['2', '0']


def test_octonion_commutator_is_malcev_and_control_is_not(octonions, non_malcev):
    assert check_hom_malcev(commutator_bracket(octonions)).holds
    assert not check_hom_malcev(commutator_bracket(non_malcev)).holds


@pytest.mark.parametrize('name', ['OCT', 'GRASSMANN(2)', 'DUAL'])
def test_opposite_and_twists_stay_alternative(name):
    document = generate_fixture(name)
    source = to_algebra(document)
    assert check_alternative(opposite(source)).holds
    twisted = yau_twist(source, to_map(document, 'beta'))
    assert check_alternative(twisted).holds
    assert check_alternative(untwist(twisted)).holds


@settings(max_examples=50, deadline=None, derandomize=True)
@given(generator_maps)
def test_grassmann_twists(generators):
    assume(rank(generators) == 2)
    source = algebra('GRASSMANN(2)')
    beta = grassmann_automorphism(2, generators)
    twisted = yau_twist(source, beta)
    assert check_alternative(twisted).holds
    assert check_alternative(untwist(twisted)).holds
    assert untwist(twisted).equals(source)


def test_dual_pseudo_euclidean_chain(dual):
    pe = to_form(generate_fixture('DUAL'), 'pe')
    assert check_pseudo_euclidean(dual, pe).holds
    assert check_phi_quadratic_malcev(commutator_bracket(dual), pe).holds
    twisted, _, _ = pe_yau_twist(dual, pe, GradedMap.identity(dual.space))
    assert twisted.equals(dual)


@pytest.mark.parametrize('name', ALTERNATIVE_FIXTURES)
@pytest.mark.parametrize('value, weight', [(0, 0), (0, 1), (-1, 1)])
def test_rota_baxter_splittings(name, value, weight):
    source = algebra(name)
    operator = scalar_operator(source, value, weight)
    structure = rb_to_postalt(source, operator)
    assert check_post_alternative(structure).holds
    product = bullet(structure)
    assert check_alternative(product).holds
    assert product.equals(rb_derived_product(source, operator))
    if weight == 0:
        assert check_pre_alternative(structure).holds


def test_dual_weight_zero_splitting(dual):
    operator = to_rota_baxter(generate_fixture('DUAL'))
    structure = rb_to_postalt(dual, operator)
    assert check_post_alternative(structure).holds
    assert check_pre_alternative(structure).holds
    assert bullet(structure).equals(rb_derived_product(dual, operator))


@pytest.mark.parametrize('n', [0, 1, 2])
def test_rota_baxter_survives_power_twists(n, grassmann2):
    beta = to_map(generate_fixture('GRASSMANN(2)'), 'beta')
    twisted = alpha_power_twist(yau_twist(grassmann2, beta), n)
    assert twisted.alpha.equals(beta.power(n + 1))
    assert check_rota_baxter(twisted, scalar_operator(twisted, -1, 1)).holds
    operator = to_rota_baxter(generate_fixture('DUAL'))
    assert check_rota_baxter(alpha_power_twist(algebra('DUAL'), n), operator).holds


@pytest.mark.parametrize('name', ['ZERO(0|2)', 'ZERO(2|0)', 'ZERO(2|2)'])
def test_zero_algebras_split_to_zero(name):
    document = generate_fixture(name)
    source = to_algebra(document)
    structure = symplectic_split(source, to_form(document, 'symplectic'))
    assert structure.equals(PostAltStructure.zero(source.space))


@pytest.mark.parametrize('name', ['TSTAR', 'ZERO(0|2)', 'ZERO(2|0)', 'ZERO(2|2)'])
def test_derivation_symplectic_splits(name):
    document = generate_fixture(name)
    source = to_algebra(document)
    omega = derivation_symplectic(source, to_form(document, 'pe'), to_map(document, 'D'))
    assert check_symplectic(source, omega).holds
    structure = symplectic_split(source, omega)
    assert check_pre_alternative(structure).holds
    assert check_bullet_equals_product(source, omega, structure)


def test_rota_baxter_and_derivation_forms_agree(odd_plane):
    document = generate_fixture('ZERO(0|2)')
    pe = to_form(document, 'pe')
    from_rb = rb_symplectic(odd_plane, pe, to_rota_baxter(document, 'R'))
    from_d = derivation_symplectic(odd_plane, pe, to_map(document, 'D'))
    assert from_rb.equals(from_d)


@pytest.mark.parametrize('name', ['DUAL', 'GRASSMANN(2)', 'OCT', 'BROKEN2', 'NONMALCEV3'])
def test_oracle_agrees_with_checkers(name):
    source = algebra(name)
    for identity in ALGEBRA_IDENTITIES:
        assert oracle_check(source, identity, 100, 0) == checker_verdict(source, identity)


def test_negative_controls(dual):
    odd = to_form(generate_fixture('ZERO(0|2)'), 'pe').with_gram([[1, 0], [0, 1]])
    assert not check_form_shape(odd).holds
    identity = RotaBaxterOp(GradedMap.identity(dual.space))
    assert not check_rb_form_compat(to_form(generate_fixture('DUAL'), 'pe'), identity).holds


def test_twisted_tstar_symplectic_split(tstar):
    document = generate_fixture('TSTAR')
    omega, beta = to_form(document, 'symplectic'), to_map(document, 'beta')
    twisted = yau_twist(tstar, beta)
    assert check_symplectic(twisted, omega).holds
    structure = symplectic_split(twisted, omega)
    assert structure.alpha.equals(beta)
    assert check_pre_alternative(structure).holds
    assert check_post_alternative(structure).holds
    assert check_bullet_equals_product(twisted, omega, structure)
    assert structure.equals(postalt_yau_twist(symplectic_split(tstar, omega), beta))


def test_graded_dual_extension_pipeline():
    source, pe = graded_tstar_extension()
    assert check_alternative(source).holds
    assert check_pseudo_euclidean(source, pe).holds
    d = search_symplectic_derivation(source, pe)
    assert d is not None and rank(d.matrix) == 6
    omega = derivation_symplectic(source, pe, d)
    assert check_symplectic(source, omega).holds
    structure = symplectic_split(source, omega)
    assert check_pre_alternative(structure).holds
    assert check_bullet_equals_product(source, omega, structure)
    assert check_post_alternative(structure).holds


@pytest.mark.parametrize('twisted', [False, True])
def test_super_matrix_commutator_is_hom_malcev(twisted):
    bracket = commutator_bracket(super_matrices())
    if twisted:
        beta = GradedMap.diagonal(bracket.space, [1, 1, Fraction(1, 2), 2])
        bracket = yau_twist(bracket, beta)
    assert check_hom_malcev(bracket).holds
    for identity in ('malcev-antisymmetry', 'malcev-identity'):
        assert checker_verdict(bracket, identity)
        assert oracle_check(bracket, identity, 60, 0)
