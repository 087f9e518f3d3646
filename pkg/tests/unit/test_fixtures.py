"""Fixture generators."""

import pytest

from homalt.bform import BilinearFormRep, check_pseudo_euclidean, check_symplectic, derivation_symplectic
from homalt.config import ToolkitConfig
from homalt.errors import SingularMatrix, UnknownFixture
from homalt.gsla import SuperSpace
from homalt.homalg import (
    HomAlgebra,
    check_alternative,
    check_hom_associative,
    check_hom_malcev,
    check_morphism,
    commutator_bracket,
)
from homalt.opx import DerivationCandidate, check_antisymmetric, check_rota_baxter, check_superderivation
from homalt.shell import generate_fixture, serialize, to_algebra, to_form, to_map, to_rota_baxter
from homalt.shell.fixtures import grassmann_automorphism, grassmann_monomials, search_symplectic_derivation


class TestZero:
    @pytest.mark.parametrize('p, q', [(0, 2), (2, 0), (2, 2), (4, 2)])
    def test_forms_and_operators(self, p, q):
        document = generate_fixture(f'ZERO({p}|{q})')
        algebra = to_algebra(document)
        pe, omega = to_form(document, 'pe'), to_form(document, 'symplectic')
        d = to_map(document, 'D')
        assert check_pseudo_euclidean(algebra, pe).holds
        assert check_symplectic(algebra, omega).holds
        assert check_antisymmetric(pe, d).holds
        assert derivation_symplectic(algebra, pe, d).equals(omega)
        assert check_rota_baxter(algebra, to_rota_baxter(document, 'R')).holds

    def test_params(self):
        document = generate_fixture('zero', {'p': 1, 'q': 1})
        assert (document.even_dim, document.odd_dim) == (1, 1)
        assert not document.forms
        assert not document.operators

    def test_odd_block_of_odd_size_has_no_form(self):
        assert not generate_fixture('ZERO(2|1)').forms


class TestGrassmann:
    def test_monomial_order(self):
        assert grassmann_monomials(2) == [(), (0, 1), (0,), (1,)]

    def test_basis(self, grassmann2):
        assert grassmann2.space.basis_names == ('1', 't1t2', 't1', 't2')
        assert grassmann2.space.degrees == (0, 0, 1, 1)
        assert list(grassmann2.basis_product(2, 3)) == [0, 1, 0, 0]
        assert list(grassmann2.basis_product(3, 2)) == [0, -1, 0, 0]
        assert not any(grassmann2.basis_product(2, 2))

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_associative_and_alternative(self, n):
        algebra = to_algebra(generate_fixture(f'GRASSMANN({n})'))
        assert check_hom_associative(algebra).holds
        assert check_alternative(algebra).holds

    def test_param(self):
        assert generate_fixture('GRASSMANN', {'n': 3}).odd_dim == 4

    def test_automorphism(self, grassmann2):
        beta = grassmann_automorphism(2, [[2, 1], [1, 1]])
        assert check_morphism(beta, grassmann2, grassmann2).holds
        fixture_beta = to_map(generate_fixture('GRASSMANN(2)'), 'beta')
        assert check_morphism(fixture_beta, grassmann2, grassmann2).holds


class TestNamedFixtures:
    def test_octonions(self, octonions):
        assert octonions.space.basis_names[0] == '1'
        assert check_alternative(octonions).holds
        assert not check_hom_associative(octonions).holds
        beta = to_map(generate_fixture('OCT'), 'beta')
        assert check_morphism(beta, octonions, octonions).holds

    def test_dual(self, dual):
        document = generate_fixture('DUAL')
        assert check_rota_baxter(dual, to_rota_baxter(document)).holds
        assert check_superderivation(dual, DerivationCandidate(to_map(document, 'D'))).holds
        assert check_morphism(to_map(document, 'beta'), dual, dual).holds

    def test_tstar(self, tstar):
        document = generate_fixture('TSTAR')
        pe, beta = to_form(document, 'pe'), to_map(document, 'beta')
        assert check_pseudo_euclidean(tstar, pe).holds
        assert check_morphism(beta, tstar, tstar).holds
        assert check_symplectic(tstar, to_form(document, 'symplectic')).holds
        assert to_map(document, 'D').matrix.tolist() == [[1, 0, 0, 0], [0, 2, 0, 0],
                                                          [0, 0, -1, 0], [0, 0, 0, -2]]
        omega = to_form(document, 'symplectic')
        assert omega.gram.tolist() == [[0, 0, 1, 0], [0, 0, 0, 2], [-1, 0, 0, 0], [0, -2, 0, 0]]

    def test_tstar_needs_the_search_bound(self, monkeypatch):
        monkeypatch.setattr(ToolkitConfig, 'SEARCH_BOUND', 0)
        with pytest.raises(SingularMatrix):
            generate_fixture('TSTAR')

    def test_symplectic_derivation_beyond_the_diagonal(self):
        space = SuperSpace(2, 0)
        form = BilinearFormRep(space, [[1, 0], [0, 1]])
        d = search_symplectic_derivation(HomAlgebra.zero(space), form)
        assert d.matrix.tolist() == [[0, 1], [-1, 0]]

    def test_broken2_is_not_alternative(self):
        assert not check_alternative(to_algebra(generate_fixture('BROKEN2'))).holds

    def test_non_malcev(self):
        algebra = to_algebra(generate_fixture('NONMALCEV3'))
        assert not check_hom_malcev(commutator_bracket(algebra)).holds

    @pytest.mark.parametrize('name', ['DUAL', 'OCT', 'TSTAR', 'ZERO(2|2)', 'GRASSMANN(2)'])
    def test_deterministic(self, name):
        assert serialize(generate_fixture(name)) == serialize(generate_fixture(name))

    def test_names_are_case_insensitive(self):
        assert generate_fixture('dual') == generate_fixture('DUAL')

    @pytest.mark.parametrize('name', ['SEDENIONS', 'ZERO(1)', 'GRASSMANN(x)'])
    def test_unknown(self, name):
        with pytest.raises(UnknownFixture):
            generate_fixture(name)
