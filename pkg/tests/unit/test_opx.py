"""Superderivations and Rota-Baxter operators."""

from fractions import Fraction

import pytest

from homalt.config import ToolkitConfig
from homalt.errors import GradingError, NotRotaBaxter, WrongWeight
from homalt.gsla import GradedMap, SuperSpace, rank
from homalt.homalg import check_alternative
from homalt.opx import (
    DerivationCandidate,
    RotaBaxterOp,
    antisymmetric_derivations,
    check_antisymmetric,
    check_pe_rota_baxter,
    check_rb_form_compat,
    check_rota_baxter,
    check_superderivation,
    derivation_bracket,
    derivation_space,
    find_invertible,
    rb_derived_product,
    rb_symplectic,
    search_rota_baxter,
)
from homalt.bform import derivation_symplectic
from homalt.postalt import bullet, rb_to_postalt
from homalt.shell import generate_fixture, to_form, to_map, to_rota_baxter


class TestDerivations:
    def test_dual_numbers(self, dual):
        basis = derivation_space(dual)
        assert len(basis) == 1
        assert basis[0].matrix[0, 0] == 0 and basis[0].matrix[1, 1] != 0
        assert check_superderivation(dual, DerivationCandidate(basis[0])).holds

    def test_fixture_derivation(self, dual):
        d = to_map(generate_fixture('DUAL'), 'D')
        assert check_superderivation(dual, DerivationCandidate(d)).holds

    def test_identity_is_not_a_derivation(self, dual):
        report = check_superderivation(dual, DerivationCandidate(GradedMap.identity(dual.space)))
        assert not report.holds

    def test_bad_degree(self, dual):
        with pytest.raises(GradingError):
            derivation_space(dual, degree=2)

    def test_negative_power(self, dual):
        with pytest.raises(ValueError):
            DerivationCandidate(GradedMap.identity(dual.space), -1)

    def test_odd_derivations_of_grassmann(self, grassmann2):
        for d in derivation_space(grassmann2, degree=1):
            assert check_superderivation(grassmann2, DerivationCandidate(d)).holds

    def test_bracket_of_derivations_is_a_derivation(self, grassmann2):
        basis = derivation_space(grassmann2)
        bracket = derivation_bracket(DerivationCandidate(basis[0]), DerivationCandidate(basis[-1]))
        assert check_superderivation(grassmann2, bracket).holds

    def test_antisymmetric_derivations(self, tstar):
        pe = to_form(generate_fixture('TSTAR'), 'pe')
        basis = antisymmetric_derivations(tstar, pe)
        assert basis
        for d in basis:
            assert check_superderivation(tstar, DerivationCandidate(d)).holds
            assert check_antisymmetric(pe, d).holds
        invertible = find_invertible(basis)
        assert invertible is not None
        assert rank(invertible.matrix) == 4
        assert check_antisymmetric(pe, invertible).holds
        assert check_superderivation(tstar, DerivationCandidate(invertible)).holds

    def test_find_invertible_on_empty_basis(self):
        assert find_invertible([]) is None

    def test_find_invertible_respects_configured_bound(self, tstar, monkeypatch):
        basis = antisymmetric_derivations(tstar, to_form(generate_fixture('TSTAR'), 'pe'))
        monkeypatch.setattr(ToolkitConfig, 'SEARCH_BOUND', 0)
        assert find_invertible(basis) is None

    def test_antisymmetry_with_phi(self, tstar):
        document = generate_fixture('TSTAR')
        pe, d = to_form(document, 'pe'), to_map(document, 'D')
        report = check_antisymmetric(pe, d, to_map(document, 'beta'))
        assert report.names() == ['antisymmetric', 'commutes-with-phi']
        assert report.holds


class TestRotaBaxter:
    def test_dual_operator(self, dual):
        operator = to_rota_baxter(generate_fixture('DUAL'))
        assert operator.weight == 0
        assert check_rota_baxter(dual, operator).holds

    def test_identity_is_not_rota_baxter(self, dual):
        operator = RotaBaxterOp(GradedMap.identity(dual.space))
        assert not check_rota_baxter(dual, operator)['rota-baxter'].holds

    def test_minus_identity_of_weight_one(self, octonions, grassmann2):
        for algebra in (octonions, grassmann2):
            operator = RotaBaxterOp(GradedMap.diagonal(algebra.space, [-1] * algebra.dim), 1)
            assert check_rota_baxter(algebra, operator).holds

    def test_must_be_even(self):
        with pytest.raises(GradingError):
            RotaBaxterOp(GradedMap.zero(SuperSpace(1, 1), 1))

    def test_derived_product(self, dual):
        operator = to_rota_baxter(generate_fixture('DUAL'))
        derived = rb_derived_product(dual, operator)
        assert check_alternative(derived).holds
        assert derived.equals(bullet(rb_to_postalt(dual, operator)))

    def test_derived_product_needs_rota_baxter(self, dual):
        with pytest.raises(NotRotaBaxter):
            rb_derived_product(dual, RotaBaxterOp(GradedMap.identity(dual.space)))

    def test_form_compatibility(self, odd_plane):
        document = generate_fixture('ZERO(0|2)')
        pe = to_form(document, 'pe')
        assert check_rb_form_compat(pe, to_rota_baxter(document, 'R')).holds
        assert not check_rb_form_compat(pe, RotaBaxterOp(GradedMap.identity(pe.space))).holds
        assert check_pe_rota_baxter(odd_plane, pe, to_rota_baxter(document, 'R')).holds

    def test_symplectic_form(self, odd_plane):
        document = generate_fixture('ZERO(0|2)')
        pe, operator = to_form(document, 'pe'), to_rota_baxter(document, 'R')
        omega = rb_symplectic(odd_plane, pe, operator)
        assert omega.gram.tolist() == [[0, 1], [1, 0]]
        # R is its own inverse, so D = R⁻¹ gives the same form
        assert omega.equals(derivation_symplectic(odd_plane, pe, to_map(document, 'D')))

    def test_symplectic_form_needs_weight_zero(self, odd_plane):
        document = generate_fixture('ZERO(0|2)')
        operator = RotaBaxterOp(to_map(document, 'R'), Fraction(1))
        with pytest.raises(WrongWeight):
            rb_symplectic(odd_plane, to_form(document, 'pe'), operator)

    def test_search(self, dual):
        found = list(search_rota_baxter(dual, 0, [0, 1], limit=5))
        assert found
        assert all(check_rota_baxter(dual, op).holds for op in found)

    def test_search_respects_candidate_cap(self, dual):
        assert list(search_rota_baxter(dual, 0, [1], max_candidates=0)) == []
