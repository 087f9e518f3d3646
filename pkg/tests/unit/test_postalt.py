"""Post-alternative and pre-alternative structures."""

import numpy as np
import pytest

from homalt.errors import IndexOutOfRange, NotAMorphism, NotAlternative, NotPreAlt
from homalt.bform import derivation_symplectic
from homalt.gsla import GradedMap, zeros
from homalt.homalg import check_alternative
from homalt.opx import RotaBaxterOp, rb_derived_product
from homalt.postalt import (
    PostAltStructure,
    ass_l,
    ass_m,
    ass_r,
    bullet,
    check_bullet_equals_product,
    check_post_alternative,
    check_pre_alternative,
    postalt_yau_twist,
    rb_to_postalt,
    symplectic_split,
)
from homalt.shell import generate_fixture, to_algebra, to_form, to_map, to_rota_baxter
from homalt.shell.fixtures import grassmann_automorphism


def minus_identity(algebra) -> RotaBaxterOp:
    return RotaBaxterOp(GradedMap.diagonal(algebra.space, [-1] * algebra.dim), 1)


class TestRotaBaxterSplitting:
    def test_dual_numbers(self, dual):
        operator = to_rota_baxter(generate_fixture('DUAL'))
        structure = rb_to_postalt(dual, operator)
        assert structure.is_pre_alternative
        assert check_post_alternative(structure).holds
        assert check_pre_alternative(structure).holds
        # 1≺1 = 1·R(1) = x
        assert list(structure.prec[0, 0]) == [0, 1]

    def test_weight_one_on_odd_elements(self, grassmann2):
        structure = rb_to_postalt(grassmann2, minus_identity(grassmann2))
        assert check_post_alternative(structure).holds
        assert check_alternative(bullet(structure)).holds
        assert bullet(structure).equals(rb_derived_product(grassmann2, minus_identity(grassmann2)))

    def test_zero_operator_of_weight_one(self, octonions):
        operator = RotaBaxterOp(GradedMap.zero(octonions.space), 1)
        structure = rb_to_postalt(octonions, operator)
        report = check_post_alternative(structure)
        assert len(report) == 10
        assert report.holds
        assert bullet(structure).equals(octonions)

    def test_needs_an_alternative_algebra(self, broken2):
        with pytest.raises(NotAlternative):
            rb_to_postalt(broken2, RotaBaxterOp(GradedMap.zero(broken2.space)))

    def test_pre_alternative_needs_zero_dot(self, grassmann2):
        structure = rb_to_postalt(grassmann2, minus_identity(grassmann2))
        with pytest.raises(NotPreAlt):
            check_pre_alternative(structure)

    def test_associators(self, dual):
        structure = rb_to_postalt(dual, to_rota_baxter(generate_fixture('DUAL')))
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    # all basis vectors are even, so no signs
                    assert not any(ass_m(structure, i, j, k) + ass_r(structure, j, i, k))
                    assert not any(ass_l(structure, i, j, k) + ass_l(structure, j, i, k))
        with pytest.raises(IndexOutOfRange):
            ass_l(structure, 0, 0, 2)

    def test_twist(self, grassmann2):
        structure = rb_to_postalt(grassmann2, minus_identity(grassmann2))
        beta = grassmann_automorphism(2, [[1, 0], [1, 1]])
        twisted = postalt_yau_twist(structure, beta)
        assert twisted.alpha.equals(beta)
        assert check_post_alternative(twisted).holds

    def test_twist_needs_a_morphism_of_every_product(self, dual):
        structure = rb_to_postalt(dual, to_rota_baxter(generate_fixture('DUAL')))
        with pytest.raises(NotAMorphism):
            postalt_yau_twist(structure, GradedMap.diagonal(dual.space, [1, 2]))

    def test_zero_structure(self, odd_plane):
        structure = PostAltStructure.zero(odd_plane.space)
        assert check_post_alternative(structure).holds
        assert check_pre_alternative(structure).holds

    def test_lopsided_split_fails_both_suites_together(self, broken2):
        # ≺ carries the whole product, ≻ and · vanish
        structure = PostAltStructure(broken2.space, broken2.product, zeros((2, 2, 2)),
                                     zeros((2, 2, 2)))
        post = check_post_alternative(structure)
        pre = check_pre_alternative(structure)
        post_verdicts = [post[f'post-alternative-{k}'].holds for k in range(7, 11)]
        pre_verdicts = [pre[f'pre-alternative-{k}'].holds for k in range(1, 5)]
        assert post_verdicts == pre_verdicts == [False, True, True, False]
        assert not post.holds and not pre.holds


class TestSymplecticSplitting:
    def test_tstar(self, tstar):
        omega = to_form(generate_fixture('TSTAR'), 'symplectic')
        structure = symplectic_split(tstar, omega)
        assert check_pre_alternative(structure).holds
        assert check_bullet_equals_product(tstar, omega, structure)
        # p1·m2 = m1 splits as −m1 + 2m1
        assert list(structure.prec[0, 3]) == [0, 0, -1, 0]
        assert list(structure.succ[0, 3]) == [0, 0, 2, 0]

    def test_zero_algebras_split_to_zero(self):
        for name in ('ZERO(0|2)', 'ZERO(2|0)', 'ZERO(2|2)'):
            document = generate_fixture(name)
            algebra = to_algebra(document)
            structure = symplectic_split(algebra, to_form(document, 'symplectic'))
            assert structure.equals(PostAltStructure.zero(algebra.space))

    def test_from_a_derivation(self, tstar):
        document = generate_fixture('TSTAR')
        omega = derivation_symplectic(tstar, to_form(document, 'pe'), to_map(document, 'D'))
        structure = symplectic_split(tstar, omega)
        assert check_pre_alternative(structure).holds
        assert bullet(structure).equals(tstar)

    @pytest.mark.parametrize('order', [[3, 2, 1, 0], [2, 0, 3, 1], [1, 0, 2, 3]])
    def test_split_follows_a_basis_permutation(self, tstar, order):
        omega = to_form(generate_fixture('TSTAR'), 'symplectic')
        structure = symplectic_split(tstar, omega)
        permuted = tstar.with_product(tstar.product[np.ix_(order, order, order)])
        moved = symplectic_split(permuted, omega.with_gram(omega.gram[np.ix_(order, order)]))
        assert np.all(moved.prec == structure.prec[np.ix_(order, order, order)])
        assert np.all(moved.succ == structure.succ[np.ix_(order, order, order)])
