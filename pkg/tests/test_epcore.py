import math

import numpy as np
import pytest
from sympy import Rational

from utils.charlat import NegativeMultiplicity, NotCompactCartan, NotDominant, TorusPoint, VirtualCharacter
from utils.checks import with_zero_weight
from utils.clifford import PolarizedSpace
from utils.epcore import (
    BadClassification, DimensionMismatch, EpError, GramNotPositive, GramNotSymmetric, HcInputs, NotInvariant,
    NotRegular, NotSubcharacter, RegularCharacter, SingularElement, ZeroConstant, build_cartan_datum,
    casimir_shift, delta_characters, delta_plus_evaluate, dirac_square_check, discrete_expansion,
    dual_highest_weight, ep_index, ep_index_half, ep_number_discrete, ep_via_pseudo_check,
    gamma_identity_check, hc_constant, is_regular, k_type_character, normalized_orbital_factor,
    orbit_representative, orbital_general_formula, orbital_regular, pseudo_index, pseudo_orbital,
    sl2_dirac_model, theta_evaluate, weyl_det_factor,
)


def mono(*coords, mult=1):
    return VirtualCharacter.monomial(tuple(coords), mult)


def triv(rank=1):
    return VirtualCharacter.trivial(rank)


class TestBuildDatum:
    EIGHTH = [[Rational(1, 8)]]

    def test_unknown_class(self):
        with pytest.raises(BadClassification):
            build_cartan_datum("x", 1, [(4,)], ["imaginary"], self.EIGHTH)

    def test_zero_and_duplicate_roots(self):
        with pytest.raises(BadClassification):
            build_cartan_datum("x", 1, [(0,)], ["compact"], self.EIGHTH)
        with pytest.raises(BadClassification):
            build_cartan_datum("x", 1, [(4,), (4,)], ["compact", "noncompact"], self.EIGHTH)

    def test_real_root_in_compact_cartan(self):
        with pytest.raises(BadClassification):
            build_cartan_datum("x", 1, [(4,)], ["real"], self.EIGHTH)

    def test_tag_count(self):
        with pytest.raises(BadClassification):
            build_cartan_datum("x", 1, [(4,)], [], self.EIGHTH)

    def test_gram_shape_and_symmetry(self):
        with pytest.raises(GramNotSymmetric):
            build_cartan_datum("x", 2, [(2, 0)], ["noncompact"], [[1, 0], [1, 1]])
        with pytest.raises(GramNotSymmetric):
            build_cartan_datum("x", 2, [(2, 0)], ["noncompact"], [[1, 0]])

    def test_gram_positivity(self):
        with pytest.raises(GramNotPositive):
            build_cartan_datum("x", 1, [(4,)], ["compact"], [[Rational(-1, 8)]])


class TestEpIndex:
    def test_sl2_trivial(self, sl2r):
        assert ep_index(sl2r, triv(), triv()) == 2

    def test_sl2_shifted_sigma(self, sl2r):
        assert ep_index(sl2r, triv(), mono(4)) == -1
        assert ep_index(sl2r, mono(4), triv()) == -1

    def test_compact_group_is_hom_dimension(self, su3):
        adjoint = k_type_character(su3, (2, 2))
        assert ep_index(su3, adjoint, adjoint) == 1
        assert ep_index(su3, adjoint, triv(2)) == 0

    def test_effective_inputs_required(self, sl2r):
        with pytest.raises(NegativeMultiplicity):
            ep_index(sl2r, triv().scaled(-1), triv())

    @pytest.mark.parametrize("name", ["sl2R", "su2", "su3", "sp4R"])
    def test_vanishes_when_p_has_zero_weight(self, fixtures, name):
        d = with_zero_weight(fixtures[name])
        assert d.p_char.multiplicity(tuple([0] * d.rank)) > 0
        chars = [
            triv(d.rank),
            k_type_character(d, tuple([2] * d.rank)),
            k_type_character(d, tuple([4] + [0] * (d.rank - 1))),
        ]
        for tau in chars:
            for sigma in chars:
                assert ep_index(d, tau, sigma) == 0

    def test_non_compact_cartan_rejected(self):
        d = build_cartan_datum("split", 1, [(4,)], ["real"], [[Rational(1, 8)]], compact_cartan=False)
        with pytest.raises(NotCompactCartan):
            ep_index(d, triv(), triv())

    @pytest.mark.parametrize("sigma,expected", [((0,), 1), ((-4,), 0), ((4,), -1)])
    def test_half_index(self, sl2r, sigma, expected):
        assert ep_index_half(sl2r, mono(-4), triv(), mono(*sigma)) == expected

    def test_half_index_needs_subcharacter(self, sl2r):
        with pytest.raises(NotSubcharacter):
            ep_index_half(sl2r, mono(8), triv(), triv())
        with pytest.raises(NotSubcharacter):
            ep_index_half(sl2r, mono(-4, mult=2), triv(), triv())


class TestPseudoCoefficients:
    def test_sl2_values(self, sl2r):
        assert pseudo_index(sl2r, triv(), triv()) == 0
        assert pseudo_index(sl2r, triv(), mono(-2)) == 1

    @pytest.mark.parametrize("name", ["sl2R", "sp4R", "su3"])
    def test_ep_recovered(self, fixtures, name):
        d = fixtures[name]
        check = ep_via_pseudo_check(d, triv(d.rank), triv(d.rank))
        assert check.equal
        assert check.sign == 1

    @pytest.mark.parametrize("name", ["sl2R", "sp4R", "su3"])
    def test_lambda_identity(self, fixtures, name):
        assert gamma_identity_check(fixtures[name]).equal


class TestDiscreteSeries:
    def test_deltas(self, sl2r, sp4r):
        deltas = delta_characters(sl2r)
        assert deltas.delta_c == triv()
        assert deltas.delta_n.terms == {(0,): 1, (-4,): -1}
        sp = delta_characters(sp4r)
        assert sp.delta_full == sp.delta_c * sp.delta_n

    def test_regularity(self, su2, sl2r):
        assert is_regular(sl2r, (-2,))
        assert not is_regular(su2, (-2,))
        assert orbit_representative(su2, (-6,)) == (2,)
        with pytest.raises(NotRegular):
            RegularCharacter((-2,), su2)

    def test_sl2_expansion(self, sl2r):
        expansion = discrete_expansion(sl2r, mono(6))
        assert expansion.coeffs == {(6,): 1, (2,): -1}
        assert expansion.remainder.is_empty()

    def test_su2_expansion(self, su2):
        expansion = discrete_expansion(su2, triv())
        assert expansion.coeffs == {(0,): 1}
        assert expansion.remainder.is_empty()

    @pytest.mark.parametrize("name,tau", [
        ("su3", (2, 0)),
        ("su3", (2, 2)),
        ("sp4R", (0, 0)),
        ("sp4R", (2, 0)),
    ])
    def test_expansion_reconstructs(self, fixtures, name, tau):
        d = fixtures[name]
        ch = k_type_character(d, tau)
        expansion = discrete_expansion(d, ch)
        assert expansion.reconstruct(d) == ch * delta_characters(d).delta_full
        assert all(not is_regular(d, w) for w in expansion.remainder.support())

    @pytest.mark.parametrize("name,tau", [("su2", (2,)), ("sp4R", (2, 0)), ("su3", (2, 0))])
    def test_expansion_needs_invariant_tau(self, fixtures, name, tau):
        d = fixtures[name]
        with pytest.raises(NotInvariant):
            discrete_expansion(d, mono(*tau))

    def test_ep_number_needs_invariant_tau(self, su2):
        with pytest.raises(NotInvariant):
            ep_number_discrete(su2, mono(2), RegularCharacter((2,), su2))

    def test_orbit_sum_expands(self, su2):
        tau = mono(2) + mono(-2)
        expansion = discrete_expansion(su2, tau)
        assert expansion.reconstruct(su2) == tau * delta_characters(su2).delta_full

    def test_effective_tau_required(self, sl2r):
        with pytest.raises(NegativeMultiplicity):
            discrete_expansion(sl2r, mono(2, mult=-1))

    def test_ep_number(self, sl2r):
        assert ep_number_discrete(sl2r, triv(), RegularCharacter((0,), sl2r)) == 1
        assert ep_number_discrete(sl2r, triv(), RegularCharacter((-4,), sl2r)) == -1
        assert ep_number_discrete(sl2r, triv(), RegularCharacter((4,), sl2r)) == 0

    def test_theta(self, sl2r):
        t = TorusPoint((0.7,))
        expected = np.exp(0.7j) / (1 - np.exp(-1.4j))
        assert theta_evaluate(sl2r, RegularCharacter((2,), sl2r), t) == pytest.approx(expected)

    def test_theta_singular(self, sl2r):
        with pytest.raises(SingularElement):
            theta_evaluate(sl2r, RegularCharacter((2,), sl2r), TorusPoint((0.0,)))


class TestOrbitalIntegrals:
    def test_regular_orbital(self, sl2r):
        assert orbital_regular(sl2r, triv(), TorusPoint((1.0,))) == pytest.approx(1)
        assert orbital_regular(sl2r, mono(2), TorusPoint((1.0,))) == pytest.approx(np.exp(1j))
        with pytest.raises(SingularElement):
            orbital_regular(sl2r, triv(), TorusPoint((0.0,)))

    def test_pseudo_orbital(self, sl2r):
        value = pseudo_orbital(sl2r, triv(), TorusPoint((0.9,)))
        assert value == pytest.approx(1 / (2j * math.sin(0.9)))

    def test_general_formula(self):
        value = orbital_general_formula(1 + 0j, 2.0, 1, (2,), [(4,)], [[Rational(1, 8)]])
        assert value == pytest.approx(0.5)
        with pytest.raises(ZeroConstant):
            orbital_general_formula(1 + 0j, 0.0, 1, (2,), [(4,)], [[Rational(1, 8)]])

    def test_weyl_factor(self, sl2r):
        assert weyl_det_factor(sl2r, TorusPoint((0.8,))) == pytest.approx(4 * math.sin(0.8) ** 2)

    def test_casimir_shift(self, sl2r, su2, su3):
        assert casimir_shift(sl2r, (0,)) == Rational(-1, 2)
        assert casimir_shift(su2, (0,)) == 0
        assert dual_highest_weight(su3, (2, 0)) == (0, 2)
        with pytest.raises(NotDominant):
            casimir_shift(su2, (-2,))

    def test_hc_constant(self):
        r = 0.75
        assert hc_constant(HcInputs(1, 1, 1, 1, r)) == pytest.approx(-2 * math.pi * math.sqrt(2) * r)
        assert hc_constant(HcInputs(0, 0, 0, 1, 1.0)) == pytest.approx(1.0)

    @pytest.mark.parametrize("args", [(1, 2, 0, 1, 1.0), (1, 0, 0, 0, 1.0), (1, 0, 0, 1, 0.0)])
    def test_hc_inputs_validated(self, args):
        with pytest.raises(EpError):
            HcInputs(*args)


class TestSplitCartan:
    def test_rho_p(self, sl2r_split):
        assert sl2r_split.rho_p == (Rational(1),)
        assert sl2r_split.t_rank == 0

    @pytest.mark.parametrize("a", [0.3, 1.0, 2.5])
    def test_delta_plus(self, sl2r_split, a):
        assert delta_plus_evaluate(sl2r_split, [a]) == pytest.approx(2 * math.sinh(a))
        assert normalized_orbital_factor(sl2r_split, [a]) == pytest.approx(2 * math.sinh(a))

    def test_dimension_mismatch(self, sl2r_split):
        with pytest.raises(DimensionMismatch):
            delta_plus_evaluate(sl2r_split, [1.0, 2.0])
        with pytest.raises(DimensionMismatch):
            delta_plus_evaluate(sl2r_split, [1.0], TorusPoint((0.5,)))


class TestDiracSquare:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_sl2_identity(self, n):
        report = dirac_square_check(sl2_dirac_model(n), PolarizedSpace(1))
        assert report.max_defect == 0
        assert report.blocks == {"plus": 0, "minus": 0}
        assert report.dimension == 2 * n

    def test_space_must_match(self):
        with pytest.raises(DimensionMismatch):
            dirac_square_check(sl2_dirac_model(2), PolarizedSpace(2))

    def test_model_dimension(self):
        with pytest.raises(DimensionMismatch):
            sl2_dirac_model(0)
