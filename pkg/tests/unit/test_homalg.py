"""Identity checkers and constructions on Hom-superalgebras."""

from fractions import Fraction

import numpy as np
import pytest

from homalt.errors import (
    GradingError,
    IndexOutOfRange,
    NotAMorphism,
    NotMultiplicative,
    SingularMatrix,
)
from homalt.gsla import GradedMap, SuperSpace
from homalt.homalg import (
    HomAlgebra,
    alpha_power_twist,
    associator,
    check_alternative,
    check_alternative_type,
    check_cyclic_associator,
    check_flexible,
    check_hom_associative,
    check_hom_malcev,
    check_left_alternative,
    check_morphism,
    check_multiplicative,
    check_right_alternative,
    commutator_bracket,
    is_involutive,
    is_regular,
    opposite,
    search_automorphisms,
    untwist,
    yau_twist,
)
from homalt.homalg.identities import malcev_defect
from homalt.shell import generate_fixture, to_algebra
from homalt.shell.fixtures import search_non_malcev

OCT_SIGN = [1, 1, 1, 1, -1, -1, -1, -1]


class TestAlgebra:
    def test_product_must_be_even(self):
        with pytest.raises(GradingError):
            HomAlgebra.from_entries(SuperSpace(1, 1), [(0, 0, 1, 1)])

    def test_entry_index_checked(self):
        with pytest.raises(IndexOutOfRange):
            HomAlgebra.from_entries(SuperSpace(2, 0), [(0, 2, 0, 1)])

    def test_twist_must_be_even(self):
        space = SuperSpace(1, 1)
        with pytest.raises(GradingError):
            HomAlgebra.zero(space, GradedMap(space, [[0, 1], [1, 0]], 1))

    def test_default_twist_is_identity(self, dual):
        assert dual.alpha.is_identity()
        assert dual.entries() == [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)]


class TestIdentities:
    def test_broken2_left_alternativity_witness(self, broken2):
        entry = check_alternative(broken2)['left-alternative']
        assert not entry.holds
        assert entry.witness.indices == (0, 0, 1)
        assert entry.witness.defect == (Fraction(2), Fraction(0))

    def test_associator_value(self, broken2):
        # (e0·e0)·e1 − e0·(e0·e1) = e1·e1 = e0
        assert list(associator(broken2, 0, 0, 1)) == [1, 0]

    def test_associator_index_checked(self, broken2):
        with pytest.raises(IndexOutOfRange):
            associator(broken2, 0, 0, 5)

    def test_octonions_alternative_not_associative(self, octonions):
        assert check_left_alternative(octonions).holds
        assert check_right_alternative(octonions).holds
        assert check_flexible(octonions).holds
        assert check_cyclic_associator(octonions).holds
        report = check_hom_associative(octonions)
        assert not report.holds
        assert any(report['hom-associative'].witness.defect)

    def test_associative_superalgebras_are_alternative(self, dual, grassmann2):
        assert check_alternative(dual).holds
        assert check_alternative(grassmann2).holds
        assert check_hom_associative(grassmann2).holds

    def test_report_names(self, dual):
        assert check_alternative(dual).names() == ['left-alternative', 'right-alternative']

    def test_multiplicative_twist(self, dual):
        twisted = HomAlgebra(dual.space, dual.product, GradedMap.diagonal(dual.space, [1, 2]))
        assert check_multiplicative(twisted).holds

    def test_octonion_commutator_is_malcev(self, octonions):
        assert check_hom_malcev(commutator_bracket(octonions)).holds

    def test_non_malcev_bracket(self, non_malcev):
        bracket = commutator_bracket(non_malcev)
        report = check_hom_malcev(bracket)
        assert report['malcev-antisymmetry'].holds
        assert not report['malcev-identity'].holds
        assert list(malcev_defect(bracket)[0, 1, 2, 0]) == [-1, 0, 0]

    def test_search_finds_a_non_malcev_bracket(self):
        bracket = search_non_malcev()
        assert bracket is not None
        assert not check_hom_malcev(bracket).holds

    def test_weak_morphism_checks_products_only(self, octonions):
        beta = GradedMap.diagonal(octonions.space, OCT_SIGN)
        assert check_morphism(beta, octonions, octonions, weak=True).names() == ['product-compatible']


class TestConstructions:
    def test_opposite_of_commutative_algebra_negates(self, dual):
        assert np.all(opposite(dual).product == -dual.product)

    def test_opposite_stays_alternative(self, octonions, grassmann2):
        assert check_alternative(opposite(octonions)).holds
        assert check_alternative(opposite(grassmann2)).holds

    @pytest.mark.parametrize('name', ['OCT', 'GRASSMANN(2)', 'DUAL', 'BROKEN2'])
    def test_opposite_is_an_involution(self, name):
        source = to_algebra(generate_fixture(name))
        assert opposite(opposite(source)).equals(source)

    def test_commutator_of_commutative_algebra_vanishes(self, dual):
        assert not np.any(commutator_bracket(dual).product != 0)

    def test_yau_twist(self, octonions):
        beta = GradedMap.diagonal(octonions.space, OCT_SIGN)
        twisted = yau_twist(octonions, beta)
        assert twisted.alpha.equals(beta)
        assert check_alternative(twisted).holds
        assert is_regular(twisted)
        assert is_involutive(twisted)

    def test_yau_twist_needs_a_morphism(self, broken2):
        with pytest.raises(NotAMorphism):
            yau_twist(broken2, GradedMap.diagonal(broken2.space, [1, 2]))

    def test_untwist_recovers_the_algebra(self, dual):
        twisted = yau_twist(dual, GradedMap.diagonal(dual.space, [1, 3]))
        assert untwist(twisted).equals(dual)

    def test_untwist_needs_invertible_twist(self, dual):
        degenerate = HomAlgebra(dual.space, dual.product, GradedMap.diagonal(dual.space, [1, 0]))
        with pytest.raises(SingularMatrix):
            untwist(degenerate)

    def test_untwist_needs_multiplicative_twist(self, broken2):
        twisted = HomAlgebra(broken2.space, broken2.product,
                             GradedMap.diagonal(broken2.space, [1, 2]))
        with pytest.raises(NotMultiplicative):
            untwist(twisted)

    def test_alpha_power_twist(self, dual):
        twisted = yau_twist(dual, GradedMap.diagonal(dual.space, [1, 2]))
        powered = alpha_power_twist(twisted, 2)
        assert powered.alpha.equals(GradedMap.diagonal(dual.space, [1, 8]))
        assert check_alternative(powered).holds

    def test_alternative_type(self, dual):
        twisted = yau_twist(dual, GradedMap.diagonal(dual.space, [1, 2]))
        report = check_alternative_type(twisted, dual.product)
        assert report.holds
        assert report.names() == ['twist-recovers-product', 'untwisted-left-alternative',
                                  'untwisted-right-alternative']

    def test_search_automorphisms(self, octonions):
        found = list(search_automorphisms(octonions, [1, -1], limit=3))
        assert found
        for beta in found:
            assert not beta.is_identity()
            assert check_morphism(beta, octonions, octonions).holds
