"""
Clifford algebra and spin module of a polarized quadratic space

V = V+ (+) V- with basis e_1..e_m of V+ and f_1..f_m of V-, and the form
q(e_i, e_j) = q(f_i, f_j) = 0, q(e_i, f_j) = -delta_ij. Generators are
numbered by slot: e_i is slot i-1, f_i is slot m+i-1, and a basis blade is
the bitmask of its slots multiplied in ascending order. The Clifford
relation is uv + vu = -2 q(u, v).
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy import Matrix, Rational

try:
    from .charlat import (
        CartanDatum, NotCompactCartan, VirtualCharacter, Weight, is_integral,
        vc_lambda, vc_lambda_alternating, weight_add, weight_half, weight_neg, zero_weight,
    )
except (ImportError, ValueError):
    from utils.charlat import (
        CartanDatum, NotCompactCartan, VirtualCharacter, Weight, is_integral,
        vc_lambda, vc_lambda_alternating, weight_add, weight_half, weight_neg, zero_weight,
    )


class CliffordError(Exception):
    """Base exception for Clifford algebra errors"""
    pass


class SpaceMismatch(CliffordError):
    """Operands belong to polarized spaces of different dimension"""
    pass


class NotInvertible(CliffordError):
    """The element has no inverse in the Clifford algebra"""
    pass


class NotVector(CliffordError):
    """A conjugate that should lie in V has components of other degrees"""
    pass


@dataclass(frozen=True)
class PolarizedSpace:
    """Quadratic space of dimension 2m with its fixed polarization."""

    m: int

    def __post_init__(self):
        if self.m < 0:
            raise CliffordError(f"Polarized space needs m >= 0, got {self.m}")

    @property
    def slots(self) -> int:
        return 2 * self.m

    def e(self, i: int) -> "CliffordElement":
        """Generator e_i of V+ (1-based)."""
        return CliffordElement(self.m, {1 << (i - 1): 1})

    def f(self, i: int) -> "CliffordElement":
        """Generator f_i of V- (1-based)."""
        return CliffordElement(self.m, {1 << (self.m + i - 1): 1})

    def unit(self, scalar=1) -> "CliffordElement":
        return CliffordElement(self.m, {0: scalar})

    def vector(self, e_coeffs: Sequence, f_coeffs: Sequence) -> "CliffordElement":
        """Degree-one element sum a_i e_i + b_i f_i."""
        terms = {}
        for i, a in enumerate(e_coeffs):
            terms[1 << i] = a
        for i, b in enumerate(f_coeffs):
            terms[1 << (self.m + i)] = b
        return CliffordElement(self.m, terms)

    def generators(self) -> List["CliffordElement"]:
        return [CliffordElement(self.m, {1 << s: 1}) for s in range(self.slots)]


def _slot_form(s: int, t: int, m: int) -> int:
    """q on generator slots: -1 on partner pairs (e_i, f_i), 0 otherwise."""
    return -1 if abs(s - t) == m and m else 0


class CliffordElement:
    """Finitely supported rational combination of basis blades."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Optional[Mapping[int, object]] = None):
        self.m = m
        limit = 1 << (2 * m)
        clean: Dict[int, Rational] = {}
        for blade, c in (terms or {}).items():
            if not 0 <= blade < limit:
                raise SpaceMismatch(f"Blade {blade:b} does not fit a space with m={m}")
            c = Rational(c)
            if c:
                clean[blade] = clean.get(blade, Rational(0)) + c
                if not clean[blade]:
                    del clean[blade]
        self._terms = clean

    @property
    def terms(self) -> Mapping[int, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_even(self) -> bool:
        return all(bin(b).count("1") % 2 == 0 for b in self._terms)

    def is_odd(self) -> bool:
        return all(bin(b).count("1") % 2 == 1 for b in self._terms)

    def degrees(self) -> set:
        return {bin(b).count("1") for b in self._terms}

    def scalar_part(self) -> Rational:
        return self._terms.get(0, Rational(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self._terms.items())))

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        _check_same(self.m, other.m)
        terms = dict(self._terms)
        for b, c in other.items():
            terms[b] = terms.get(b, 0) + c
        return CliffordElement(self.m, terms)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + other.scaled(-1)

    def __neg__(self) -> "CliffordElement":
        return self.scaled(-1)

    def scaled(self, k) -> "CliffordElement":
        return CliffordElement(self.m, {b: k * c for b, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"CliffordElement(m={self.m}, {blade_string(self.m, self._terms)})"


def blade_name(m: int, blade: int) -> str:
    if not blade:
        return "1"
    names = []
    for s in range(2 * m):
        if blade >> s & 1:
            names.append(f"e{s + 1}" if s < m else f"f{s - m + 1}")
    return "".join(names)


def blade_string(m: int, terms: Mapping[int, object]) -> str:
    return " + ".join(f"{c}*{blade_name(m, b)}" for b, c in sorted(terms.items())) or "0"


def _check_same(a: int, b: int) -> None:
    if a != b:
        raise SpaceMismatch(f"Elements of spaces with m={a} and m={b} cannot be combined")


# ============================================================================
# Blade kernel
# ============================================================================

@lru_cache(maxsize=None)
def _blade_times_generator(blade: int, slot: int, m: int) -> Tuple[Tuple[int, int], ...]:
    """
    Canonical expansion of blade * g_slot as ((blade, integer coefficient), ...).

    Peels the highest generator x of the blade: W x g = -(W g) x - 2 q(x, g) W.
    Every blade of W g has slots below x, so appending x keeps it canonical.
    """
    if not blade or blade.bit_length() - 1 < slot:
        return ((blade | (1 << slot), 1),)
    top = blade.bit_length() - 1
    if top == slot:
        # generators are isotropic, g*g = -q(g) = 0
        return ()
    rest = blade ^ (1 << top)
    out: Dict[int, int] = {}
    for b, c in _blade_times_generator(rest, slot, m):
        nb = b | (1 << top)
        out[nb] = out.get(nb, 0) - c
    q = _slot_form(top, slot, m)
    if q:
        out[rest] = out.get(rest, 0) - 2 * q
    return tuple((b, c) for b, c in out.items() if c)


@lru_cache(maxsize=None)
def _blade_product(a: int, b: int, m: int) -> Tuple[Tuple[int, int], ...]:
    current: Dict[int, int] = {a: 1}
    for slot in range(2 * m):
        if not b >> slot & 1:
            continue
        nxt: Dict[int, int] = {}
        for blade, c in current.items():
            for nb, k in _blade_times_generator(blade, slot, m):
                nxt[nb] = nxt.get(nb, 0) + c * k
        current = {x: c for x, c in nxt.items() if c}
    return tuple(current.items())


def clifford_mul(sp: PolarizedSpace, x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """
    Product in Cl(q).

    Raises:
        SpaceMismatch: If x or y belong to another space
    """
    _check_same(sp.m, x.m)
    _check_same(sp.m, y.m)
    terms: Dict[int, Rational] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for blade, k in _blade_product(a, b, sp.m):
                terms[blade] = terms.get(blade, 0) + ca * cb * k
    return CliffordElement(sp.m, terms)


def clifford_reverse(sp: PolarizedSpace, x: CliffordElement) -> CliffordElement:
    """Anti-automorphism reversing every product of generators."""
    _check_same(sp.m, x.m)
    terms: Dict[int, Rational] = {}
    for blade, c in x.items():
        current: Dict[int, int] = {0: 1}
        for slot in range(2 * sp.m - 1, -1, -1):
            if not blade >> slot & 1:
                continue
            nxt: Dict[int, int] = {}
            for b, k in current.items():
                for nb, k2 in _blade_times_generator(b, slot, sp.m):
                    nxt[nb] = nxt.get(nb, 0) + k * k2
            current = nxt
        for b, k in current.items():
            terms[b] = terms.get(b, 0) + c * k
    return CliffordElement(sp.m, terms)


def quadratic_form(sp: PolarizedSpace, u: CliffordElement, v: CliffordElement) -> Rational:
    """Bilinear form q(u, v) of two degree-one elements."""
    if u.degrees() - {1} or v.degrees() - {1}:
        raise NotVector("quadratic_form expects elements of V")
    total = Rational(0)
    for a, ca in u.items():
        for b, cb in v.items():
            total += ca * cb * _slot_form(a.bit_length() - 1, b.bit_length() - 1, sp.m)
    return total


def clifford_inverse(sp: PolarizedSpace, x: CliffordElement) -> CliffordElement:
    """
    Inverse of a product of non-isotropic vectors, rev(x) / (x rev(x)).

    Raises:
        NotInvertible: If x rev(x) is not a nonzero scalar
    """
    rev = clifford_reverse(sp, x)
    norm = clifford_mul(sp, x, rev)
    if norm.degrees() != {0}:
        raise NotInvertible(f"{x!r} is not a product of invertible vectors")
    return rev.scaled(1 / norm.scalar_part())


def conjugation_action(sp: PolarizedSpace, x: CliffordElement, v: CliffordElement,
                       x_inv: Optional[CliffordElement] = None) -> CliffordElement:
    """
    Twisted-free conjugation x v x^{-1}, the action of Spin(q) on V.

    Raises:
        NotInvertible: If x has no inverse or x_inv is not its inverse
        NotVector: If the conjugate leaves V (x is outside the Pin group)
    """
    if x_inv is None:
        x_inv = clifford_inverse(sp, x)
    elif clifford_mul(sp, x, x_inv) != sp.unit():
        raise NotInvertible("Supplied x_inv is not an inverse of x")
    result = clifford_mul(sp, clifford_mul(sp, x, v), x_inv)
    if result.degrees() - {1}:
        raise NotVector(f"Conjugate {result!r} does not lie in V")
    return result


# ============================================================================
# Spin module S = exterior algebra of V-
# ============================================================================

class SpinVector:
    """Rational combination of basis subsets of {f_1..f_m} (bitmasks)."""

    __slots__ = ("m", "_terms")

    def __init__(self, m: int, terms: Optional[Mapping[int, object]] = None):
        self.m = m
        clean: Dict[int, Rational] = {}
        for subset, c in (terms or {}).items():
            if not 0 <= subset < (1 << m):
                raise SpaceMismatch(f"Subset {subset:b} does not fit a space with m={m}")
            c = Rational(c)
            if c:
                clean[subset] = clean.get(subset, Rational(0)) + c
                if not clean[subset]:
                    del clean[subset]
        self._terms = clean

    @classmethod
    def vacuum(cls, m: int) -> "SpinVector":
        return cls(m, {0: 1})

    @classmethod
    def basis(cls, m: int) -> List["SpinVector"]:
        return [cls(m, {s: 1}) for s in range(1 << m)]

    @property
    def terms(self) -> Mapping[int, Rational]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def even_part(self) -> "SpinVector":
        return SpinVector(self.m, {s: c for s, c in self._terms.items() if bin(s).count("1") % 2 == 0})

    def odd_part(self) -> "SpinVector":
        return SpinVector(self.m, {s: c for s, c in self._terms.items() if bin(s).count("1") % 2 == 1})

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, SpinVector):
            return NotImplemented
        return self.m == other.m and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.m, frozenset(self._terms.items())))

    def scaled(self, k) -> "SpinVector":
        return SpinVector(self.m, {s: k * c for s, c in self._terms.items()})

    def __repr__(self) -> str:
        body = " + ".join(
            f"{c}*" + ("".join(f"f{i + 1}" for i in range(self.m) if s >> i & 1) or "1")
            for s, c in sorted(self._terms.items())
        )
        return f"SpinVector(m={self.m}, {body or '0'})"


def _generator_on_subset(slot: int, subset: int, m: int) -> Tuple[int, int]:
    """
    Action of one generator on a basis subset as (coefficient, subset).

    f_i wedges in front; e_i contracts f_i after moving it to the front and
    scales by -2 q(e_i, f_i) = 2, so that e_i f_i + f_i e_i acts as 2.
    """
    i = slot % m
    below = bin(subset & ((1 << i) - 1)).count("1")
    sign = -1 if below % 2 else 1
    present = subset >> i & 1
    if slot >= m:
        if present:
            return 0, subset
        return sign, subset | (1 << i)
    if not present:
        return 0, subset
    return -2 * _slot_form(slot, slot + m, m) * sign, subset ^ (1 << i)


def spin_action(sp: PolarizedSpace, v: CliffordElement, s: SpinVector) -> SpinVector:
    """
    Clifford action on the spin module, extended multiplicatively over blades
    and linearly over sums.

    Raises:
        SpaceMismatch: If v or s belong to another space
    """
    _check_same(sp.m, v.m)
    _check_same(sp.m, s.m)
    terms: Dict[int, Rational] = {}
    for blade, c in v.items():
        slots = [t for t in range(sp.slots) if blade >> t & 1]
        for subset, cs in s.items():
            coeff, current = 1, subset
            for slot in reversed(slots):
                k, current = _generator_on_subset(slot, current, sp.m)
                coeff *= k
                if not coeff:
                    break
            if coeff:
                terms[current] = terms.get(current, 0) + c * cs * coeff
    return SpinVector(sp.m, terms)


def spin_matrix(sp: PolarizedSpace, x: CliffordElement) -> Matrix:
    """Matrix of x on S, columns indexed by subset bitmask."""
    size = 1 << sp.m
    columns = []
    for subset in range(size):
        image = spin_action(sp, x, SpinVector(sp.m, {subset: 1}))
        columns.append([image.terms.get(row, 0) for row in range(size)])
    return Matrix(size, size, lambda i, j: columns[j][i])


# ============================================================================
# Half spin characters
# ============================================================================

def _rank_of(mu: Sequence[Weight], rank: Optional[int]) -> int:
    if mu:
        return len(mu[0])
    if rank is None:
        raise CliffordError("An empty weight list needs an explicit rank")
    return rank


def half_spin_characters(mu: Sequence[Weight], rank: Optional[int] = None
                         ) -> Tuple[VirtualCharacter, VirtualCharacter]:
    """
    Characters of S+ and S- for a torus acting on V with weights +-mu_i.

    S+ collects e^{(+-mu_1 +- ... +- mu_m)/2} with an even number of minus
    signs, S- those with an odd number.

    Example:
        >>> plus, minus = half_spin_characters([(2,)])
        >>> plus.terms, minus.terms
        ({(1,): 1}, {(-1,): 1})
    """
    rank = _rank_of(mu, rank)
    even = VirtualCharacter.trivial(rank)
    odd = VirtualCharacter.empty(rank)
    for w in mu:
        even, odd = (
            even.shifted(w) + odd.shifted(weight_neg(w)),
            odd.shifted(w) + even.shifted(weight_neg(w)),
        )
    halve = lambda ch: VirtualCharacter(rank, {weight_half(w): c for w, c in ch.items()})
    return halve(even), halve(odd)


def spin_difference(mu: Sequence[Weight], rank: Optional[int] = None) -> VirtualCharacter:
    plus, minus = half_spin_characters(mu, rank)
    return plus - minus


def epsilon_character(mu: Sequence[Weight], rank: Optional[int] = None) -> Weight:
    """The weight (mu_1 + ... + mu_m)/2."""
    total = zero_weight(_rank_of(mu, rank))
    for w in mu:
        total = weight_add(total, w)
    return weight_half(total)


def positive_part_character(mu: Sequence[Weight], rank: Optional[int] = None) -> VirtualCharacter:
    """Character of V+ = sum e^{mu_i}."""
    return VirtualCharacter.from_weights(_rank_of(mu, rank), mu)


def paired_character(mu: Sequence[Weight], rank: Optional[int] = None) -> VirtualCharacter:
    """Character of V = sum e^{mu_i} + e^{-mu_i}."""
    rank = _rank_of(mu, rank)
    return VirtualCharacter.from_weights(rank, list(mu) + [weight_neg(w) for w in mu])


@dataclass(frozen=True)
class SpinSquareReport:
    lhs: VirtualCharacter
    rhs: VirtualCharacter
    sign: int
    equal: bool


def spin_square_check(mu: Sequence[Weight], rank: Optional[int] = None) -> SpinSquareReport:
    """
    Compare (S+ - S-)^2 with the alternating exterior algebra of V.

    sign is +1 or -1 when lhs = sign*rhs (0 when neither holds); equal
    records lhs = (-1)^m rhs.
    """
    rank = _rank_of(mu, rank)
    diff = spin_difference(mu, rank)
    lhs = diff * diff
    rhs = vc_lambda_alternating(paired_character(mu, rank))
    if lhs == rhs:
        sign = 1
    elif lhs == -rhs:
        sign = -1
    else:
        sign = 0
    expected = rhs if len(mu) % 2 == 0 else -rhs
    return SpinSquareReport(lhs=lhs, rhs=rhs, sign=sign, equal=lhs == expected)


@dataclass(frozen=True)
class EpsilonReport:
    parity_matched: bool
    flipped: bool
    even_side: VirtualCharacter
    odd_side: VirtualCharacter
    lambda_even: VirtualCharacter
    lambda_odd: VirtualCharacter


def exterior_parts(ch: VirtualCharacter) -> Tuple[VirtualCharacter, VirtualCharacter]:
    """(sum of even exterior powers, sum of odd exterior powers)."""
    even = VirtualCharacter.empty(ch.rank)
    odd = VirtualCharacter.empty(ch.rank)
    for p in range(ch.dimension() + 1):
        if p % 2:
            odd = odd + vc_lambda(ch, p)
        else:
            even = even + vc_lambda(ch, p)
    return even, odd


def epsilon_check(mu: Sequence[Weight], rank: Optional[int] = None) -> EpsilonReport:
    """
    Twist the half spin characters by e^epsilon and match them against the
    even and odd exterior powers of V+.

    The match is even-to-even when m is even and flipped when m is odd;
    parity_matched records that the observed pairing follows this rule.
    """
    rank = _rank_of(mu, rank)
    plus, minus = half_spin_characters(mu, rank)
    eps = epsilon_character(mu, rank)
    even_side = plus.shifted(eps)
    odd_side = minus.shifted(eps)
    lam_even, lam_odd = exterior_parts(positive_part_character(mu, rank))
    straight = even_side == lam_even and odd_side == lam_odd
    crossed = even_side == lam_odd and odd_side == lam_even
    flipped = crossed and not straight
    expect_flip = len(mu) % 2 == 1
    matched = (crossed if expect_flip else straight)
    return EpsilonReport(
        parity_matched=matched, flipped=flipped, even_side=even_side, odd_side=odd_side,
        lambda_even=lam_even, lambda_odd=lam_odd,
    )


# ============================================================================
# Lattice-level spin tests for a compact Cartan datum
# ============================================================================

@dataclass(frozen=True)
class SpinorialityReport:
    lifts: bool
    epsilon: Weight


def _require_compact_cartan(d: CartanDatum) -> None:
    if not d.is_all_imaginary():
        raise NotCompactCartan(f"Datum {d.name} has real or complex roots")


def spinoriality_check(d: CartanDatum) -> SpinorialityReport:
    """
    Does K -> SO(p) lift to Spin(p) on the torus?

    It does exactly when epsilon = rho_n is integral in the undoubled lattice,
    i.e. when the half spin weights are genuine characters of T.
    """
    _require_compact_cartan(d)
    return SpinorialityReport(lifts=is_integral(d.rho_n), epsilon=d.rho_n)


def orientation_check(d: CartanDatum) -> bool:
    """True when the top exterior power of p is the trivial character."""
    _require_compact_cartan(d)
    top = vc_lambda(d.p_char, d.p_char.dimension())
    return top == VirtualCharacter.trivial(d.rank)
