import math

import pytest
from sympy import Rational

from utils.charlat import (
    GroupTooLarge, HalfLatticeError, NegativeMultiplicity, NotCompactDatum, NotDivisible, NotDominant,
    RankMismatch, TorusPoint, VirtualCharacter, compact_subdatum, divide_one_minus, doubled, inner_product,
    is_integral, true_coords, vc_alternating_sum, vc_constant_term, vc_dual, vc_evaluate, vc_inner_k,
    vc_lambda, vc_lambda_alternating, weight_half, weyl_character, weyl_dimension, weyl_enumerate,
)


STD = VirtualCharacter(1, {(1,): 1, (-1,): 1})


class TestWeights:
    def test_doubled_and_back(self):
        assert doubled(["1/2", 1]) == (1, 2)
        assert true_coords((1, 2)) == (Rational(1, 2), Rational(1))

    def test_doubled_rejects_thirds(self):
        with pytest.raises(HalfLatticeError):
            doubled(["1/3"])

    def test_weight_half_needs_even_coordinates(self):
        assert weight_half((4, -2)) == (2, -1)
        with pytest.raises(HalfLatticeError):
            weight_half((1,))

    def test_is_integral(self):
        assert is_integral((2, -4))
        assert not is_integral((3, 3))

    def test_inner_product(self):
        gram = [[Rational(1, 8)]]
        assert inner_product(gram, (2,), (4,)) == 1


class TestVirtualCharacter:
    def test_zero_multiplicities_are_pruned(self):
        ch = VirtualCharacter(1, {(2,): 1, (0,): 0})
        assert ch.support() == [(2,)]
        assert VirtualCharacter(1, {(2,): 1}) + VirtualCharacter(1, {(2,): -1}) == VirtualCharacter.empty(1)

    def test_rank_is_enforced(self):
        with pytest.raises(RankMismatch):
            VirtualCharacter(1, {(1, 2): 1})
        with pytest.raises(RankMismatch):
            STD + VirtualCharacter.trivial(2)

    def test_tensor_square(self):
        assert (STD * STD).terms == {(2,): 1, (0,): 2, (-2,): 1}

    def test_support_sorted_descending(self):
        ch = VirtualCharacter(2, {(0, 1): 1, (1, -5): 2, (0, 3): -1})
        assert ch.support() == [(1, -5), (0, 3), (0, 1)]

    def test_dual_and_dimension(self):
        ch = VirtualCharacter(1, {(3,): 2, (-1,): -1})
        assert vc_dual(ch).terms == {(-3,): 2, (1,): -1}
        assert ch.dimension() == 1
        assert not ch.is_effective()

    def test_exterior_powers(self):
        assert vc_lambda(STD, 0) == VirtualCharacter.trivial(1)
        assert vc_lambda(STD, 1) == STD
        assert vc_lambda(STD, 2) == VirtualCharacter.trivial(1)
        assert vc_lambda(STD, 3).is_empty()

    def test_exterior_powers_need_effective_input(self):
        with pytest.raises(NegativeMultiplicity):
            vc_lambda(-STD, 1)
        with pytest.raises(NegativeMultiplicity):
            vc_lambda_alternating(-STD)

    def test_alternating_exterior_algebra(self):
        assert vc_lambda_alternating(STD).terms == {(0,): 2, (1,): -1, (-1,): -1}
        assert vc_lambda_alternating(VirtualCharacter.trivial(1)).is_empty()

    def test_constant_term(self):
        assert vc_constant_term(STD * STD) == 2

    def test_divide_one_minus(self):
        a = VirtualCharacter(1, {(0,): 1, (4,): -1})
        assert divide_one_minus(a, (2,)).terms == {(0,): 1, (2,): 1}
        assert divide_one_minus(a, (4,)) == VirtualCharacter.trivial(1)

    def test_divide_one_minus_rejects_remainders(self):
        with pytest.raises(NotDivisible):
            divide_one_minus(VirtualCharacter.trivial(1), (2,))
        with pytest.raises(NotDivisible):
            divide_one_minus(STD, (0,))

    def test_evaluate(self):
        value = vc_evaluate(VirtualCharacter.monomial((2,)), TorusPoint((math.pi,)))
        assert value == pytest.approx(-1)
        assert vc_evaluate(STD, TorusPoint((0.0,))) == pytest.approx(2)
        with pytest.raises(RankMismatch):
            vc_evaluate(STD, TorusPoint((0.0, 0.0)))


class TestDatum:
    @pytest.mark.parametrize("name,order", [("sl2R", 1), ("su2", 2), ("su3", 6), ("sp4R", 2)])
    def test_weyl_orders(self, fixtures, name, order):
        assert fixtures[name].weyl_order == order
        assert len(weyl_enumerate(fixtures[name])) == order

    def test_weyl_group_signs(self, su3):
        assert sorted(w.sign for w in su3.weyl) == [-1, -1, -1, 1, 1, 1]

    def test_group_bound(self, su3):
        with pytest.raises(GroupTooLarge):
            weyl_enumerate(su3, bound=3)

    def test_rhos(self, sl2r, sp4r):
        assert sl2r.rho == (2,)
        assert sl2r.rho_k == (0,)
        assert sp4r.rho_n == (3, 3)
        assert sp4r.p_char.dimension() == 6

    def test_compact_subdatum(self, sp4r):
        k = compact_subdatum(sp4r)
        assert k.positive_roots == ((2, -2),)
        assert k.is_compact_type()

    def test_alternating_sum(self, su2):
        assert vc_alternating_sum(su2, (2,)).terms == {(2,): 1, (-2,): -1}
        assert vc_alternating_sum(su2, (0,)).is_empty()

    def test_su2_fundamental_character(self, su2):
        assert weyl_character(su2, (2,)).terms == {(2,): 1, (-2,): 1}

    @pytest.mark.parametrize("lam,dim", [((0, 0), 1), ((2, 0), 3), ((0, 2), 3), ((2, 2), 8), ((4, 0), 6)])
    def test_su3_dimensions(self, su3, lam, dim):
        assert weyl_character(su3, lam).dimension() == dim
        assert weyl_dimension(su3, lam) == dim

    def test_weyl_character_is_invariant(self, su3):
        ch = weyl_character(su3, (2, 2))
        for w in su3.weyl:
            assert ch.mapped(w.matrix) == ch

    def test_weyl_character_preconditions(self, su2, sl2r):
        with pytest.raises(NotDominant):
            weyl_character(su2, (-2,))
        with pytest.raises(NotCompactDatum):
            weyl_character(sl2r, (0,))

    def test_k_pairing(self, su3):
        adjoint = weyl_character(su3, (2, 2))
        fundamental = weyl_character(su3, (2, 0))
        assert vc_inner_k(su3, adjoint, adjoint) == 1
        assert vc_inner_k(su3, fundamental, weyl_character(su3, (0, 2))) == 0
        assert vc_inner_k(su3, adjoint * adjoint, VirtualCharacter.trivial(2)) == 1
