import pytest
from sympy import Rational, eye

from utils.charlat import NotCompactCartan, VirtualCharacter
from utils.clifford import (
    CliffordElement, NotInvertible, NotVector, PolarizedSpace, SpaceMismatch, SpinVector,
    clifford_inverse, clifford_mul, clifford_reverse, conjugation_action, epsilon_check, exterior_parts,
    half_spin_characters, orientation_check, quadratic_form, spin_action, spin_difference, spin_matrix,
    spin_square_check, spinoriality_check,
)
from utils.epcore import build_cartan_datum


SP1 = PolarizedSpace(1)
SP2 = PolarizedSpace(2)


def mul(sp, *xs):
    out = sp.unit()
    for x in xs:
        out = clifford_mul(sp, out, x)
    return out


class TestCliffordProduct:
    def test_generators_are_isotropic(self):
        for g in SP2.generators():
            assert clifford_mul(SP2, g, g).is_zero()

    def test_partner_anticommutator(self):
        e1, f1 = SP1.e(1), SP1.f(1)
        assert clifford_mul(SP1, e1, f1) + clifford_mul(SP1, f1, e1) == SP1.unit(2)

    def test_distinct_pairs_anticommute(self):
        e1, f2 = SP2.e(1), SP2.f(2)
        assert clifford_mul(SP2, e1, f2) + clifford_mul(SP2, f2, e1) == CliffordElement(2, {})

    def test_square_of_e1f1(self):
        x = clifford_mul(SP1, SP1.e(1), SP1.f(1))
        assert x == CliffordElement(1, {0b11: 1})
        assert clifford_mul(SP1, x, x) == x.scaled(2)

    def test_associativity(self):
        x = SP2.e(1) + SP2.f(2).scaled(Rational(1, 2))
        y = mul(SP2, SP2.f(1), SP2.e(2)) + SP2.unit(3)
        z = SP2.e(2) - SP2.f(1)
        assert clifford_mul(SP2, clifford_mul(SP2, x, y), z) == clifford_mul(SP2, x, clifford_mul(SP2, y, z))

    def test_vector_square_is_minus_q(self):
        v = SP1.vector([2], [3])
        assert clifford_mul(SP1, v, v) == SP1.unit(-quadratic_form(SP1, v, v))
        assert quadratic_form(SP1, v, v) == -12

    def test_space_mismatch(self):
        with pytest.raises(SpaceMismatch):
            clifford_mul(SP1, SP2.e(1), SP1.e(1))

    def test_quadratic_form_needs_vectors(self):
        with pytest.raises(NotVector):
            quadratic_form(SP1, SP1.unit(), SP1.e(1))

    def test_reverse(self):
        x = clifford_mul(SP1, SP1.e(1), SP1.f(1))
        assert clifford_reverse(SP1, x) == clifford_mul(SP1, SP1.f(1), SP1.e(1))

    def test_parity(self):
        x = clifford_mul(SP2, SP2.e(1), SP2.f(2))
        assert x.is_even() and not x.is_odd()
        assert SP2.e(2).is_odd()


class TestConjugation:
    def test_inverse_of_unit_vector_product(self):
        x = mul(SP1, SP1.e(1) + SP1.f(1), SP1.e(1) - SP1.f(1))
        assert clifford_mul(SP1, x, clifford_inverse(SP1, x)) == SP1.unit()

    def test_isotropic_vector_is_not_invertible(self):
        with pytest.raises(NotInvertible):
            clifford_inverse(SP1, SP1.e(1))

    def test_even_product_preserves_q(self):
        x = mul(SP2, SP2.e(1) + SP2.f(1), SP2.e(2) - SP2.f(2).scaled(2))
        for v in (SP2.e(1), SP2.f(2), SP2.vector([1, 2], [3, 4])):
            image = conjugation_action(SP2, x, v)
            assert image.degrees() <= {1}
            assert quadratic_form(SP2, image, image) == quadratic_form(SP2, v, v)

    def test_unit_vector_pair_acts_by_minus_one(self):
        # (e1+f1)(e1-f1) = 2 - 2 e1f1
        x = mul(SP1, SP1.e(1) + SP1.f(1), SP1.e(1) - SP1.f(1))
        assert x == SP1.unit().scaled(2) - mul(SP1, SP1.e(1), SP1.f(1)).scaled(2)
        assert conjugation_action(SP1, x, SP1.e(1)) == SP1.e(1).scaled(-1)
        assert conjugation_action(SP1, x, SP1.f(1)) == SP1.f(1).scaled(-1)

    def test_x_and_minus_x_act_alike(self):
        x = mul(SP2, SP2.e(1) + SP2.f(1), SP2.e(2) - SP2.f(2).scaled(2))
        for v in SP2.generators():
            assert conjugation_action(SP2, x, v) == conjugation_action(SP2, x.scaled(-1), v)

    def test_gram_of_basis_images_is_preserved(self):
        x = mul(SP2, SP2.e(1) + SP2.f(1), SP2.e(2) - SP2.f(2).scaled(2))
        basis = SP2.generators()
        images = [conjugation_action(SP2, x, v) for v in basis]
        for a, ia in zip(basis, images):
            for b, ib in zip(basis, images):
                assert quadratic_form(SP2, ia, ib) == quadratic_form(SP2, a, b)

    def test_wrong_inverse_is_rejected(self):
        x = mul(SP1, SP1.e(1) + SP1.f(1), SP1.e(1) - SP1.f(1))
        with pytest.raises(NotInvertible):
            conjugation_action(SP1, x, SP1.e(1), x_inv=x)


class TestSpinModule:
    def test_wedge_and_contract(self):
        vacuum = SpinVector.vacuum(1)
        assert spin_action(SP1, SP1.f(1), vacuum) == SpinVector(1, {1: 1})
        assert spin_action(SP1, SP1.e(1), vacuum).is_zero()
        assert spin_action(SP1, SP1.e(1), SpinVector(1, {1: 1})) == vacuum.scaled(2)

    def test_wedge_sign(self):
        # f_1 in front of f_2 needs no sign, f_2 in front of f_1 one swap
        assert spin_action(SP2, SP2.f(2), SpinVector(2, {0b01: 1})) == SpinVector(2, {0b11: -1})
        assert spin_action(SP2, SP2.f(1), SpinVector(2, {0b10: 1})) == SpinVector(2, {0b11: 1})

    def test_action_is_multiplicative(self):
        x = SP2.e(1) + SP2.f(2)
        y = mul(SP2, SP2.f(1), SP2.e(2)) + SP2.unit(Rational(1, 3))
        for s in SpinVector.basis(2):
            assert spin_action(SP2, clifford_mul(SP2, x, y), s) == spin_action(SP2, x, spin_action(SP2, y, s))

    def test_relation_holds_on_matrices(self):
        for i in (1, 2):
            anti = clifford_mul(SP2, SP2.e(i), SP2.f(i)) + clifford_mul(SP2, SP2.f(i), SP2.e(i))
            assert spin_matrix(SP2, anti) == 2 * eye(4)

    def test_parts(self):
        s = SpinVector(2, {0: 1, 0b01: 2, 0b11: 3})
        assert s.even_part() == SpinVector(2, {0: 1, 0b11: 3})
        assert s.odd_part() == SpinVector(2, {0b01: 2})


class TestHalfSpin:
    def test_rank_one(self):
        plus, minus = half_spin_characters([(2,)])
        assert plus.terms == {(1,): 1}
        assert minus.terms == {(-1,): 1}

    def test_two_equal_weights(self):
        plus, minus = half_spin_characters([(2,), (2,)])
        assert plus.terms == {(2,): 1, (-2,): 1}
        assert minus.terms == {(0,): 2}

    def test_empty_list_needs_rank(self):
        plus, minus = half_spin_characters([], 2)
        assert plus == VirtualCharacter.trivial(2)
        assert minus.is_empty()

    @pytest.mark.parametrize("mu,sign", [
        ([(2,)], -1),
        ([(2, 0), (0, 2)], 1),
        ([(2, 0), (0, 2), (2, 2)], -1),
    ])
    def test_spin_square(self, mu, sign):
        report = spin_square_check(mu)
        assert report.sign == sign
        assert report.equal

    def test_spin_square_of_difference(self):
        diff = spin_difference([(2,)])
        assert (diff * diff).terms == {(2,): 1, (0,): -2, (-2,): 1}

    def test_epsilon_flips_for_odd_m(self):
        report = epsilon_check([(2,)])
        assert report.parity_matched
        assert report.flipped
        assert report.even_side.terms == {(2,): 1}

    def test_epsilon_straight_for_even_m(self):
        report = epsilon_check([(2, 0), (0, 2)])
        assert report.parity_matched
        assert not report.flipped

    def test_exterior_parts(self):
        even, odd = exterior_parts(VirtualCharacter(1, {(2,): 1, (4,): 1}))
        assert even.terms == {(0,): 1, (6,): 1}
        assert odd.terms == {(2,): 1, (4,): 1}


class TestDatumLevel:
    def test_spinoriality(self, sl2r, su3, sp4r):
        assert spinoriality_check(sl2r).lifts
        assert spinoriality_check(su3).lifts
        report = spinoriality_check(sp4r)
        assert not report.lifts
        assert report.epsilon == (3, 3)

    def test_orientation(self, sl2r, sp4r):
        assert orientation_check(sl2r)
        assert orientation_check(sp4r)

    def test_real_roots_are_rejected(self):
        d = build_cartan_datum("split", 1, [(4,)], ["real"], [[Rational(1, 8)]], compact_cartan=False)
        with pytest.raises(NotCompactCartan):
            spinoriality_check(d)
