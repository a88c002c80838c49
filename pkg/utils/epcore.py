"""
Euler-Poincare indices, discrete series data and orbital integral evaluators

Everything that can be exact is exact: indices, expansion coefficients,
Casimir shifts and the Dirac square are computed with integers, sympy
Rationals and Gaussian rationals. Evaluations at torus points, the
Harish-Chandra constant and the split-Cartan factors are floating.
"""

import math
import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import I, Matrix, Rational, eye, im, re, zeros
from sympy.physics.quantum import TensorProduct

try:
    from ..config import get_singular_threshold
    from .charlat import (
        ROOT_CLASSES, CartanDatum, NegativeMultiplicity, NotCompactCartan,
        TorusPoint, VirtualCharacter, Weight, check_dominant, compact_subdatum, inner_product,
        vc_alternating_sum, vc_constant_term, vc_dual, vc_evaluate, vc_inner_k,
        vc_lambda_alternating, weight_add, weight_neg, weight_scale, weight_sub,
        weyl_character,
    )
    from .clifford import PolarizedSpace, spin_difference, spin_matrix
except (ImportError, ValueError):
    from config import get_singular_threshold
    from utils.charlat import (
        ROOT_CLASSES, CartanDatum, NegativeMultiplicity, NotCompactCartan,
        TorusPoint, VirtualCharacter, Weight, check_dominant, compact_subdatum, inner_product,
        vc_alternating_sum, vc_constant_term, vc_dual, vc_evaluate, vc_inner_k,
        vc_lambda_alternating, weight_add, weight_neg, weight_scale, weight_sub,
        weyl_character,
    )
    from utils.clifford import PolarizedSpace, spin_difference, spin_matrix


class EpError(Exception):
    """Base exception for Euler-Poincare and orbital integral errors"""
    pass


class BadClassification(EpError):
    """Root tags are missing, unknown, or inconsistent with the Weyl group"""
    pass


class GramNotSymmetric(EpError):
    """The Gram matrix is not symmetric or has the wrong shape"""
    pass


class GramNotPositive(EpError):
    """The Gram matrix is not positive definite on the compact roots"""
    pass


class NotSubcharacter(EpError):
    """p_minus is not contained in the K-character of p"""
    pass


class SingularElement(EpError):
    """A denominator vanishes (numerically) at the torus point"""
    pass


class NotRegular(EpError):
    """The weight has a nontrivial stabilizer under the shifted Weyl action"""
    pass


class NonIntegralCoefficient(EpError):
    """An exact pairing that must be an integer is not"""
    pass


class NotInvariant(EpError):
    """tau is not invariant under the compact Weyl group, so it is not a K-character"""
    pass


class ZeroConstant(EpError):
    """Division by a vanishing Harish-Chandra constant"""
    pass


class DimensionMismatch(EpError):
    """Inputs of incompatible dimensions"""
    pass


# ============================================================================
# Datum construction
# ============================================================================

def build_cartan_datum(name: str, rank: int, positive_roots: Sequence[Weight],
                       root_class: Sequence[str], gram: Sequence[Sequence],
                       extra_generators: Sequence = (), compact_cartan: bool = True,
                       weyl_bound: Optional[int] = None) -> CartanDatum:
    """
    Validate raw root data and derive the full CartanDatum.

    Args:
        name: Label carried into reports
        rank: Rank of the torus
        positive_roots: Positive roots in doubled coordinates
        root_class: One tag per root, from ROOT_CLASSES
        gram: B on doubled coordinates (rank x rank, rational)
        extra_generators: Additional integer matrices in W(K,T)
        compact_cartan: Reject real and complex tags when True

    Raises:
        BadClassification: On missing/unknown tags, zero roots, or compact
            reflections that do not permute the roots up to sign
        GramNotSymmetric: If gram is not a symmetric rank x rank matrix
        GramNotPositive: If B is not positive definite on the compact roots
        GroupTooLarge: If W exceeds the configured bound
    """
    if rank < 1:
        raise BadClassification(f"Rank must be positive, got {rank}")
    roots = [tuple(int(x) for x in r) for r in positive_roots]
    classes = [str(c) for c in root_class]
    if len(roots) != len(classes):
        raise BadClassification(f"{len(roots)} roots but {len(classes)} classification tags")
    for r, c in zip(roots, classes):
        if len(r) != rank:
            raise BadClassification(f"Root {list(r)} does not have rank {rank}")
        if not any(r):
            raise BadClassification("Zero is not a root")
        if c not in ROOT_CLASSES:
            raise BadClassification(f"Unknown root class {c!r} (expected one of {', '.join(ROOT_CLASSES)})")
        if compact_cartan and c in ("real", "complex"):
            raise BadClassification(f"Root {list(r)} is tagged {c} in a compact Cartan datum")
    if len(set(roots)) != len(roots):
        raise BadClassification("Positive roots must be distinct")

    gram_q = [[Rational(x) for x in row] for row in gram]
    if len(gram_q) != rank or any(len(row) != rank for row in gram_q):
        raise GramNotSymmetric(f"Gram matrix must be {rank}x{rank}")
    if any(gram_q[i][j] != gram_q[j][i] for i in range(rank) for j in range(i)):
        raise GramNotSymmetric("Gram matrix is not symmetric")

    compact = [r for r, c in zip(roots, classes) if c == "compact"]
    if compact:
        block = np.array([[float(inner_product(gram_q, a, b)) for b in compact] for a in compact])
        if any(inner_product(gram_q, a, a) <= 0 for a in compact) or np.linalg.eigvalsh(block).min() < -1e-12:
            raise GramNotPositive("Gram matrix is not positive definite on the compact roots")

    d = CartanDatum.derive(name, rank, roots, classes, gram_q, extra_generators, weyl_bound)

    root_set = set(roots) | {weight_neg(r) for r in roots}
    for w in d.weyl:
        if any(w.apply(r) not in root_set for r in roots):
            raise BadClassification(f"Weyl group of {name} does not permute the roots")
    print(f"[Spinlat] Built datum {name}: rank {rank}, {len(roots)} positive roots, |W| = {d.weyl_order}",
          file=sys.stderr)
    return d


def _require_compact_cartan(d: CartanDatum) -> None:
    if not d.is_all_imaginary():
        raise NotCompactCartan(f"Datum {d.name} has real or complex roots")


def _require_effective(name: str, ch: VirtualCharacter) -> None:
    if not ch.is_effective():
        raise NegativeMultiplicity(f"{name} must be an effective character")


def _require_invariant(d: CartanDatum, name: str, ch: VirtualCharacter) -> None:
    for w in d.weyl:
        if ch.mapped(w.matrix) != ch:
            raise NotInvariant(f"{name} is not invariant under W(K,T) of {d.name}; give a K-character")


def _as_integer(value: Rational, what: str) -> int:
    if not value.is_integer:
        raise NonIntegralCoefficient(f"{what} came out as {value}, not an integer")
    return int(value)


# ============================================================================
# Weyl denominators and Euler-Poincare pairings
# ============================================================================

@dataclass(frozen=True)
class DeltaCharacters:
    delta_c: VirtualCharacter
    delta_n: VirtualCharacter
    delta_full: VirtualCharacter


def _one_minus_product(rank: int, roots: Sequence[Weight]) -> VirtualCharacter:
    result = VirtualCharacter.trivial(rank)
    for alpha in roots:
        result = result - result.shifted(weight_neg(alpha))
    return result


def delta_characters(d: CartanDatum) -> DeltaCharacters:
    """
    The products of (1 - e^{-alpha}) over compact, noncompact and all
    positive roots.

    Raises:
        NotCompactCartan: If d has real or complex roots
    """
    _require_compact_cartan(d)
    delta_c = _one_minus_product(d.rank, d.compact_roots)
    delta_n = _one_minus_product(d.rank, d.noncompact_roots)
    return DeltaCharacters(delta_c=delta_c, delta_n=delta_n, delta_full=delta_c * delta_n)


def k_type_character(d: CartanDatum, lam: Weight) -> VirtualCharacter:
    """Character of the irreducible K-module of highest weight lam."""
    return weyl_character(compact_subdatum(d), tuple(lam))


def ep_index(d: CartanDatum, tau: VirtualCharacter, sigma: VirtualCharacter) -> int:
    """
    sum_p (-1)^p dim(sigma (x) Lambda^p p (x) dual(tau))^K.

    Raises:
        NegativeMultiplicity: If tau or sigma is not effective
        NotCompactCartan: If d has real or complex roots
    """
    _require_compact_cartan(d)
    _require_effective("tau", tau)
    _require_effective("sigma", sigma)
    integrand = sigma * vc_lambda_alternating(d.p_char) * vc_dual(tau)
    return _as_integer(vc_inner_k(d, integrand, VirtualCharacter.trivial(d.rank)), "EP index")


def ep_index_half(d: CartanDatum, p_minus: VirtualCharacter, tau: VirtualCharacter,
                  sigma: VirtualCharacter) -> int:
    """
    Same pairing with Lambda_{-1}(p_minus) in place of Lambda_{-1}(p).

    Raises:
        NotSubcharacter: If p_minus is not effective or exceeds p_char
    """
    _require_compact_cartan(d)
    _require_effective("tau", tau)
    _require_effective("sigma", sigma)
    if not p_minus.is_effective() or any(m > d.p_char.multiplicity(w) for w, m in p_minus.items()):
        raise NotSubcharacter(f"{p_minus!r} is not a subcharacter of p")
    integrand = sigma * vc_lambda_alternating(p_minus) * vc_dual(tau)
    return _as_integer(vc_inner_k(d, integrand, VirtualCharacter.trivial(d.rank)), "EP half index")


def spin_characters_of(d: CartanDatum) -> VirtualCharacter:
    """chS+ - chS- for the polarization of p by the noncompact positive roots."""
    return spin_difference(d.noncompact_roots, d.rank)


def pseudo_index(d: CartanDatum, tau: VirtualCharacter, sigma: VirtualCharacter) -> int:
    """
    Pseudo-coefficient pairing dim(sigma (x) S+ (x) dual(tau))^K
    - dim(sigma (x) S- (x) dual(tau))^K.

    Raises:
        NonIntegralCoefficient: If the K-contraction is not an integer
    """
    _require_compact_cartan(d)
    integrand = sigma * spin_characters_of(d) * vc_dual(tau)
    return _as_integer(vc_inner_k(d, integrand, VirtualCharacter.trivial(d.rank)), "Pseudo index")


@dataclass(frozen=True)
class PseudoCheck:
    pseudo: int
    ep: int
    sign: int
    equal: bool


def ep_via_pseudo_check(d: CartanDatum, tau: VirtualCharacter, sigma: VirtualCharacter) -> PseudoCheck:
    """Recover ep_index(tau, sigma) as pseudo_index((S+ - S-) (x) tau, sigma)."""
    ep = ep_index(d, tau, sigma)
    pseudo = pseudo_index(d, spin_characters_of(d) * tau, sigma)
    if pseudo == ep:
        sign = 1
    elif pseudo == -ep:
        sign = -1
    else:
        sign = 0
    return PseudoCheck(pseudo=pseudo, ep=ep, sign=sign, equal=pseudo == ep)


@dataclass(frozen=True)
class GammaCheck:
    lhs: VirtualCharacter
    rhs: VirtualCharacter
    equal: bool


def gamma_identity_check(d: CartanDatum) -> GammaCheck:
    """Lambda_{-1}(p) against delta_n (x) dual(delta_n)."""
    delta_n = delta_characters(d).delta_n
    lhs = vc_lambda_alternating(d.p_char)
    rhs = delta_n * vc_dual(delta_n)
    return GammaCheck(lhs=lhs, rhs=rhs, equal=lhs == rhs)


# ============================================================================
# Discrete series on the compact Cartan
# ============================================================================

def shifted_action(d: CartanDatum, w, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho"""
    return weight_sub(w.apply(weight_add(lam, d.rho)), d.rho)


def is_regular(d: CartanDatum, lam: Weight) -> bool:
    shifted = weight_add(tuple(lam), d.rho)
    return sum(1 for w in d.weyl if w.apply(shifted) == shifted) == 1


def orbit_representative(d: CartanDatum, lam: Weight) -> Weight:
    """Lexicographically largest element of the shifted W-orbit of lam."""
    return max(shifted_action(d, w, tuple(lam)) for w in d.weyl)


def discrete_numerator(d: CartanDatum, lam: Weight) -> VirtualCharacter:
    """N_lam = e^{-rho} sum_w sign(w) e^{w(lam + rho)}."""
    return vc_alternating_sum(d, weight_add(tuple(lam), d.rho)).shifted(weight_neg(d.rho))


@dataclass(frozen=True)
class RegularCharacter:
    """
    Discrete series parameter: a weight with trivial stabilizer under the
    rho-shifted Weyl action.

    Raises:
        NotRegular: On construction with a singular weight
    """

    weight: Weight
    datum: CartanDatum = field(repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "weight", tuple(int(x) for x in self.weight))
        if len(self.weight) != self.datum.rank:
            raise NotRegular(f"Weight {list(self.weight)} does not have rank {self.datum.rank}")
        if not is_regular(self.datum, self.weight):
            raise NotRegular(f"Weight {list(self.weight)} is singular for {self.datum.name}")

    @property
    def numerator(self) -> VirtualCharacter:
        return discrete_numerator(self.datum, self.weight)


def _check_threshold(value: complex, what: str) -> None:
    if abs(value) < get_singular_threshold():
        raise SingularElement(f"{what} vanishes at this torus point")


def theta_evaluate(d: CartanDatum, that: RegularCharacter, t: TorusPoint) -> complex:
    """
    Discrete series character on the compact Cartan, N(t) / Delta(t).

    Raises:
        SingularElement: If Delta(t) is below the singularity threshold
    """
    denominator = vc_evaluate(delta_characters(d).delta_full, t)
    _check_threshold(denominator, "Weyl denominator")
    return vc_evaluate(that.numerator, t) / denominator


def _fourier_coefficient(d: CartanDatum, g: VirtualCharacter, numerator: VirtualCharacter) -> int:
    value = Rational(vc_constant_term(g * vc_dual(numerator)), d.weyl_order)
    return _as_integer(value, "Fourier coefficient")


def ep_number_discrete(d: CartanDatum, tau: VirtualCharacter, that: RegularCharacter) -> int:
    """
    Coefficient of N_that in tau (x) Delta, (1/|W|) CT(tau Delta dual(N_that)).

    Raises:
        NegativeMultiplicity: If tau is not effective
        NotInvariant: If tau is not W(K,T)-invariant
        NonIntegralCoefficient: If the division by |W| is not exact
    """
    _require_effective("tau", tau)
    _require_invariant(d, "tau", tau)
    g = tau * delta_characters(d).delta_full
    return _fourier_coefficient(d, g, that.numerator)


@dataclass(frozen=True)
class Expansion:
    coeffs: Dict[Weight, int]
    remainder: VirtualCharacter

    def reconstruct(self, d: CartanDatum) -> VirtualCharacter:
        total = self.remainder
        for lam, c in self.coeffs.items():
            total = total + discrete_numerator(d, lam).scaled(c)
        return total


def discrete_expansion(d: CartanDatum, tau: VirtualCharacter) -> Expansion:
    """
    Expand tau (x) Delta over the numerators N_t of regular orbit
    representatives; what is left sits on singular weights.

    Coefficients are keyed by representative and listed in descending order.

    Raises:
        NegativeMultiplicity: If tau is not effective
        NotInvariant: If tau is not W(K,T)-invariant
    """
    _require_effective("tau", tau)
    _require_invariant(d, "tau", tau)
    g = tau * delta_characters(d).delta_full
    reps = sorted({orbit_representative(d, lam) for lam in g.support() if is_regular(d, lam)},
                  reverse=True)
    coeffs: Dict[Weight, int] = {}
    remainder = g
    for lam in reps:
        numerator = discrete_numerator(d, lam)
        c = _fourier_coefficient(d, g, numerator)
        if c:
            coeffs[lam] = c
            remainder = remainder - numerator.scaled(c)
    return Expansion(coeffs=coeffs, remainder=remainder)


# ============================================================================
# Orbital integrals on elliptic elements
# ============================================================================

def orbital_regular(d: CartanDatum, tau: VirtualCharacter, t: TorusPoint) -> complex:
    """
    Orbital integral of the EP function of tau at a regular elliptic t,
    which is tr tau(t).

    Raises:
        SingularElement: If t is not regular
    """
    _check_threshold(vc_evaluate(delta_characters(d).delta_full, t), "Weyl denominator")
    return vc_evaluate(tau, t)


def orbital_general_formula(tau_value: complex, c_g: float, w_order: int, rho_g: Weight,
                            pos_roots_g: Sequence[Weight], gram: Sequence[Sequence]) -> complex:
    """
    tau_value * |W| * prod_{alpha > 0} B(rho_g, alpha) / c_g for the
    supplied centralizer data.

    Raises:
        ZeroConstant: If c_g is zero
    """
    if c_g == 0:
        raise ZeroConstant("Harish-Chandra constant of the centralizer is zero")
    product = Rational(1)
    for alpha in pos_roots_g:
        product *= inner_product(gram, rho_g, alpha)
    return complex(tau_value) * w_order * float(product) / c_g


def pseudo_orbital(d: CartanDatum, tau: VirtualCharacter, t: TorusPoint) -> complex:
    """
    Orbital integral of the pseudo-coefficient, tr tau(t) / tr(t | S+ - S-).

    Raises:
        SingularElement: If the spin denominator vanishes at t
    """
    _require_compact_cartan(d)
    denominator = vc_evaluate(spin_characters_of(d), t)
    _check_threshold(denominator, "Half spin difference")
    return vc_evaluate(tau, t) / denominator


def dual_highest_weight(d: CartanDatum, lam: Weight) -> Weight:
    """Highest weight of the dual K-module: the dominant element of W(-lam)."""
    neg = weight_neg(tuple(lam))
    dominant = [w.apply(neg) for w in d.weyl
                if all(d.inner(w.apply(neg), a) >= 0 for a in d.compact_roots)]
    return max(dominant)


def casimir_shift(d: CartanDatum, tau_highest: Weight) -> Rational:
    """
    B(l, l + 2 rho_K) - B(rho, rho) + B(rho_K, rho_K), with l the highest
    weight of the dual of tau.

    Raises:
        NotDominant: If tau_highest is not dominant for the compact roots
    """
    lam = tuple(tau_highest)
    check_dominant(d, lam)
    dual = dual_highest_weight(d, lam)
    return (d.inner(dual, weight_add(dual, weight_scale(d.rho_k, 2)))
            - d.inner(d.rho, d.rho) + d.inner(d.rho_k, d.rho_k))


@dataclass(frozen=True)
class HcInputs:
    n_pos_roots: int
    n_noncompact: int
    nu: int
    weyl_order: int
    vol_ratio: float

    def __post_init__(self):
        if min(self.n_pos_roots, self.n_noncompact, self.nu) < 0 or self.weyl_order < 1:
            raise EpError("Root counts and nu must be nonnegative and |W| positive")
        if self.n_noncompact > self.n_pos_roots:
            raise EpError("More noncompact roots than positive roots")
        if not self.vol_ratio > 0 or not math.isfinite(self.vol_ratio):
            raise EpError(f"Volume ratio must be positive and finite, got {self.vol_ratio}")


def hc_constant(inp: HcInputs) -> float:
    """(-1)^{n_noncompact} (2 pi)^{n_pos_roots} 2^{nu/2} vol_ratio |W|"""
    sign = -1 if inp.n_noncompact % 2 else 1
    return sign * (2 * math.pi) ** inp.n_pos_roots * 2 ** (inp.nu / 2) * inp.vol_ratio * inp.weyl_order


def weyl_det_factor(d: CartanDatum, t: TorusPoint) -> float:
    """prod over positive roots of |1 - e^{-alpha}(t)| |1 - e^{alpha}(t)|"""
    value = 1.0
    for alpha in d.positive_roots:
        e = vc_evaluate(VirtualCharacter.monomial(alpha), t)
        value *= abs(1 - e) * abs(1 - 1 / e)
    return value


# ============================================================================
# Split Cartan subgroups
# ============================================================================

@dataclass(frozen=True)
class SplitCartanDatum:
    """
    Cartan H = A T with the non-imaginary positive roots given by their
    values on log A (rational functionals) and on T (doubled weights).
    """

    real_rank: int
    root_values_on_a: Tuple[Tuple[Rational, ...], ...]
    root_values_on_t: Tuple[Weight, ...]
    rho_p: Tuple[Rational, ...]
    imaginary_part: Optional[CartanDatum] = None
    name: str = "split"

    def __post_init__(self):
        if len(self.root_values_on_a) != len(self.root_values_on_t):
            raise DimensionMismatch("Every non-imaginary root needs values on A and on T")
        if any(len(v) != self.real_rank for v in self.root_values_on_a) or len(self.rho_p) != self.real_rank:
            raise DimensionMismatch(f"Functionals on A must have length {self.real_rank}")
        t_rank = self.t_rank
        if any(len(v) != t_rank for v in self.root_values_on_t):
            raise DimensionMismatch(f"Weights on T must have rank {t_rank}")
        half = tuple(sum((v[i] for v in self.root_values_on_a), Rational(0)) / 2 for i in range(self.real_rank))
        if half != tuple(self.rho_p):
            raise EpError(f"rho_P {list(self.rho_p)} is not half the sum of the root functionals {list(half)}")

    @classmethod
    def derive(cls, real_rank: int, root_values_on_a: Sequence[Sequence], root_values_on_t: Sequence[Weight],
               imaginary_part: Optional[CartanDatum] = None, name: str = "split") -> "SplitCartanDatum":
        values = tuple(tuple(Rational(x) for x in v) for v in root_values_on_a)
        rho_p = tuple(sum((v[i] for v in values), Rational(0)) / 2 for i in range(real_rank))
        return cls(real_rank, values, tuple(tuple(int(x) for x in w) for w in root_values_on_t),
                   rho_p, imaginary_part, name)

    @property
    def t_rank(self) -> int:
        return self.imaginary_part.rank if self.imaginary_part is not None else 0


def _check_split_point(sd: SplitCartanDatum, a_coords: Sequence[float], t: Optional[TorusPoint]) -> TorusPoint:
    if len(a_coords) != sd.real_rank:
        raise DimensionMismatch(f"Expected {sd.real_rank} coordinates on A, got {len(a_coords)}")
    if t is None:
        t = TorusPoint((0.0,) * sd.t_rank)
    if t.rank != sd.t_rank:
        raise DimensionMismatch(f"Expected a torus point of rank {sd.t_rank}, got {t.rank}")
    return t


def _split_terms(sd: SplitCartanDatum, a_coords: Sequence[float], t: TorusPoint):
    a = np.asarray(a_coords, dtype=float)
    rho_value = float(np.dot(np.asarray(sd.rho_p, dtype=float), a)) if sd.real_rank else 0.0
    factors = []
    for on_a, on_t in zip(sd.root_values_on_a, sd.root_values_on_t):
        a_part = float(np.dot(np.asarray(on_a, dtype=float), a)) if sd.real_rank else 0.0
        t_part = vc_evaluate(VirtualCharacter.monomial(weight_neg(on_t)), t) if sd.t_rank else 1.0
        factors.append(1 - math.exp(-a_part) * t_part)
    return rho_value, factors


def delta_plus_evaluate(sd: SplitCartanDatum, a_coords: Sequence[float],
                        t: Optional[TorusPoint] = None) -> float:
    """
    |prod over non-imaginary positive roots of (1 - (at)^{-alpha})| a^{rho_P}

    Raises:
        DimensionMismatch: If a_coords or t do not fit the datum
    """
    t = _check_split_point(sd, a_coords, t)
    rho_value, factors = _split_terms(sd, a_coords, t)
    return abs(complex(np.prod(factors))) * math.exp(rho_value)


def normalized_orbital_factor(sd: SplitCartanDatum, a_coords: Sequence[float],
                              t: Optional[TorusPoint] = None) -> complex:
    """
    h^{rho_P} prod over all positive roots of (1 - h^{-alpha}), imaginary
    positive roots of the T factor included.
    """
    t = _check_split_point(sd, a_coords, t)
    rho_value, factors = _split_terms(sd, a_coords, t)
    value = complex(np.prod(factors)) * math.exp(rho_value)
    if sd.imaginary_part is not None:
        value *= vc_evaluate(_one_minus_product(sd.t_rank, sd.imaginary_part.positive_roots), t)
    return value


# ============================================================================
# Dirac operator square
# ============================================================================

@dataclass(frozen=True)
class DiracModel:
    """
    A finite dimensional g-module pi restricted to an orthonormal basis
    X_1..X_{2m} of p and a basis W_1..W_r of k.

    ad_k[j] is the matrix of ad(W_j) on p: column a holds the coordinates of
    [W_j, X_a]. k_norms[j] = B(W_j, W_j).
    """

    n: int
    pi_X: Tuple[Matrix, ...]
    pi_k: Tuple[Matrix, ...]
    k_norms: Tuple[Rational, ...]
    ad_k: Tuple[Matrix, ...]
    pi_casimir: Matrix
    b_rho: Rational
    b_rho_k: Rational

    def __post_init__(self):
        square = [*self.pi_X, *self.pi_k, self.pi_casimir]
        if any(m.shape != (self.n, self.n) for m in square):
            raise DimensionMismatch(f"Every representation matrix must be {self.n}x{self.n}")
        if len(self.pi_k) != len(self.k_norms) or len(self.pi_k) != len(self.ad_k):
            raise DimensionMismatch("pi_k, k_norms and ad_k must have one entry per basis vector of k")
        p_dim = len(self.pi_X)
        if any(a.shape != (p_dim, p_dim) for a in self.ad_k):
            raise DimensionMismatch(f"ad_k matrices must be {p_dim}x{p_dim}")


def _ladder(n: int) -> Tuple[Matrix, Matrix, Matrix]:
    """H, E, F on the n-dimensional irreducible sl(2)-module."""
    h = Matrix.diag(*[n - 1 - 2 * k for k in range(n)]) if n else zeros(0, 0)
    e = zeros(n, n)
    f = zeros(n, n)
    for k in range(n - 1):
        f[k + 1, k] = 1
        e[k, k + 1] = (k + 1) * (n - k - 1)
    return h, e, f


def sl2_dirac_model(n: int) -> DiracModel:
    """
    sl(2,R) with p spanned by X_1 = H, X_2 = E + F and k by W = E - F,
    B = trace / 2, acting through the n-dimensional irreducible module.
    """
    if n < 1:
        raise DimensionMismatch(f"Representation dimension must be positive, got {n}")
    h, e, f = _ladder(n)
    return DiracModel(
        n=n,
        pi_X=(h, e + f),
        pi_k=(e - f,),
        k_norms=(Rational(-1),),
        ad_k=(Matrix([[0, 2], [-2, 0]]),),
        pi_casimir=h * h + 2 * e * f + 2 * f * e,
        b_rho=Rational(1),
        b_rho_k=Rational(0),
    )


def clifford_generators(sp: PolarizedSpace) -> List[Matrix]:
    """
    c(X_i) on S for the orthonormal basis X_{2k-1} = e_k - f_k/2,
    X_{2k} = i(e_k + f_k/2) of p (complexified).
    """
    mats = []
    for k in range(1, sp.m + 1):
        mats.append(spin_matrix(sp, sp.e(k) - sp.f(k).scaled(Rational(1, 2))))
        mats.append(I * spin_matrix(sp, sp.e(k) + sp.f(k).scaled(Rational(1, 2))))
    return mats


def _spin_lift(ad: Matrix, cliff: Sequence[Matrix]) -> Matrix:
    size = cliff[0].shape[0]
    total = zeros(size, size)
    for a in range(ad.shape[0]):
        for b in range(ad.shape[0]):
            if ad[b, a]:
                total += ad[b, a] * cliff[a] * cliff[b]
    return total / 4


@dataclass(frozen=True)
class DiracReport:
    max_defect: Rational
    blocks: Dict[str, Rational]
    dimension: int


def _max_abs_part(m: Matrix) -> Rational:
    values = [Rational(0)]
    for entry in m.expand():
        values.append(abs(re(entry)))
        values.append(abs(im(entry)))
    return max(values)


def dirac_square_check(model: DiracModel, sp: PolarizedSpace) -> DiracReport:
    """
    Compare D^2, D = sum_i pi(X_i) (x) c(X_i), with
    Omega_K(diag) - pi(C) (x) 1 - B(rho) + B(rho_K) on V (x) S+ and V (x) S-.

    Raises:
        DimensionMismatch: If the model's p does not have dimension 2m
    """
    if len(model.pi_X) != sp.slots:
        raise DimensionMismatch(f"Model has dim p = {len(model.pi_X)}, polarized space has {sp.slots}")
    cliff = clifford_generators(sp)
    s_dim = 1 << sp.m
    one_v = eye(model.n)
    one_s = eye(s_dim)

    dirac = zeros(model.n * s_dim, model.n * s_dim)
    for pi_x, c in zip(model.pi_X, cliff):
        dirac += TensorProduct(pi_x, c)

    omega = zeros(model.n * s_dim, model.n * s_dim)
    for pi_w, norm, ad in zip(model.pi_k, model.k_norms, model.ad_k):
        diag = TensorProduct(pi_w, one_s) + TensorProduct(one_v, _spin_lift(ad, cliff))
        omega += diag * diag / norm
    rhs = omega - TensorProduct(model.pi_casimir, one_s) - (model.b_rho - model.b_rho_k) * eye(model.n * s_dim)
    defect = (dirac * dirac - rhs).expand()

    parity = [bin(s).count("1") % 2 for s in range(s_dim)]
    blocks = {}
    for label, want in (("plus", 0), ("minus", 1)):
        idx = [v * s_dim + s for v in range(model.n) for s in range(s_dim) if parity[s] == want]
        blocks[label] = _max_abs_part(defect.extract(idx, idx))
    return DiracReport(max_defect=_max_abs_part(defect), blocks=blocks, dimension=model.n * s_dim)
