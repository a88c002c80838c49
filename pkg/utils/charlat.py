"""
Weight lattice and virtual character calculus for spinlat

Weights are stored in the DOUBLED lattice: a weight with true coordinates
``lam`` is the integer tuple ``2*lam``. Half-integral weights (half spin
weights, rho of odd root systems) therefore stay integral, and every
operation in this module is exact.
"""

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, Rational

try:
    from ..config import get_weyl_bound
except (ImportError, ValueError):
    from config import get_weyl_bound


Weight = Tuple[int, ...]
IntMatrix = Tuple[Tuple[int, ...], ...]

ROOT_CLASSES = ("compact", "noncompact", "real", "complex")


class LatticeError(Exception):
    """Base exception for weight lattice and character errors"""
    pass


class RankMismatch(LatticeError):
    """Operands live on tori of different rank"""
    pass


class NegativeMultiplicity(LatticeError):
    """An exterior power was requested of a non-effective character"""
    pass


class GroupTooLarge(LatticeError):
    """The Weyl group exceeds the configured enumeration bound"""
    pass


class NotDominant(LatticeError):
    """A highest weight fails the dominance test"""
    pass


class NotCompactDatum(LatticeError):
    """The operation needs a datum whose roots are all compact"""
    pass


class NotDivisible(LatticeError):
    """Exact Laurent division left a nonzero remainder"""
    pass


class HalfLatticeError(LatticeError):
    """A coordinate does not lie in the doubled lattice"""
    pass


class NotCompactCartan(LatticeError):
    """The datum carries real or complex roots where a compact Cartan is required"""
    pass


# ============================================================================
# Weights
# ============================================================================

def zero_weight(rank: int) -> Weight:
    return (0,) * rank


def weight_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def weight_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def weight_neg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def weight_scale(a: Weight, k: int) -> Weight:
    return tuple(k * x for x in a)


def weight_half(a: Weight) -> Weight:
    """Halve a doubled-lattice weight; every coordinate must be even."""
    if any(x % 2 for x in a):
        raise HalfLatticeError(f"Weight {a} has odd doubled coordinates and cannot be halved")
    return tuple(x // 2 for x in a)


def is_integral(a: Weight) -> bool:
    """True when the weight is integral in the undoubled lattice."""
    return all(x % 2 == 0 for x in a)


def doubled(true_coords: Sequence) -> Weight:
    """
    Convert true coordinates (ints, Rationals or strings like "1/2") to a
    doubled-lattice weight.

    Example:
        >>> doubled(["1/2", 1])
        (1, 2)
    """
    result = []
    for c in true_coords:
        value = Rational(c) * 2
        if not value.is_integer:
            raise HalfLatticeError(f"Coordinate {c} has denominator larger than 2")
        result.append(int(value))
    return tuple(result)


def true_coords(w: Weight) -> Tuple[Rational, ...]:
    """Inverse of doubled()."""
    return tuple(Rational(x, 2) for x in w)


def inner_product(gram: Sequence[Sequence[Rational]], a: Weight, b: Weight) -> Rational:
    """Bilinear form B(a, b) for doubled-lattice weights."""
    total = Rational(0)
    for i, ai in enumerate(a):
        if not ai:
            continue
        row = gram[i]
        for j, bj in enumerate(b):
            if bj:
                total += ai * row[j] * bj
    return total


# ============================================================================
# Virtual characters
# ============================================================================

class VirtualCharacter:
    """
    Finitely supported integer-valued function on doubled-lattice weights.

    Zero multiplicities are never stored, so two characters are equal exactly
    when their term maps are equal.

    Example:
        >>> std = VirtualCharacter(1, {(1,): 1, (-1,): 1})
        >>> (std * std).terms[(0,)]
        2
    """

    __slots__ = ("_terms", "rank")

    def __init__(self, rank: int, terms: Optional[Mapping[Weight, int]] = None):
        if rank < 0:
            raise LatticeError(f"Rank must be nonnegative, got {rank}")
        self.rank = rank
        clean: Dict[Weight, int] = {}
        for w, m in (terms or {}).items():
            w = tuple(int(x) for x in w)
            if len(w) != rank:
                raise RankMismatch(f"Weight {w} does not have rank {rank}")
            m = int(m)
            if m:
                clean[w] = clean.get(w, 0) + m
                if not clean[w]:
                    del clean[w]
        self._terms = clean

    @classmethod
    def _raw(cls, rank: int, terms: Dict[Weight, int]) -> "VirtualCharacter":
        # terms already pruned and rank-checked
        obj = cls.__new__(cls)
        obj.rank = rank
        obj._terms = terms
        return obj

    @classmethod
    def trivial(cls, rank: int) -> "VirtualCharacter":
        return cls._raw(rank, {zero_weight(rank): 1})

    @classmethod
    def empty(cls, rank: int) -> "VirtualCharacter":
        return cls._raw(rank, {})

    @classmethod
    def monomial(cls, w: Weight, mult: int = 1) -> "VirtualCharacter":
        return cls(len(w), {tuple(w): mult})

    @classmethod
    def from_weights(cls, rank: int, weights: Iterable[Weight]) -> "VirtualCharacter":
        terms: Dict[Weight, int] = {}
        for w in weights:
            terms[tuple(w)] = terms.get(tuple(w), 0) + 1
        return cls(rank, terms)

    @property
    def terms(self) -> Mapping[Weight, int]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def support(self) -> List[Weight]:
        return sorted(self._terms, reverse=True)

    def multiplicity(self, w: Weight) -> int:
        return self._terms.get(tuple(w), 0)

    def dimension(self) -> int:
        """Value at the identity, i.e. the (virtual) dimension."""
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def is_empty(self) -> bool:
        return not self._terms

    def shifted(self, w: Weight) -> "VirtualCharacter":
        """Multiply by the single character e^w."""
        return VirtualCharacter._raw(self.rank, {weight_add(k, w): m for k, m in self._terms.items()})

    def scaled(self, k: int) -> "VirtualCharacter":
        if not k:
            return VirtualCharacter.empty(self.rank)
        return VirtualCharacter._raw(self.rank, {w: k * m for w, m in self._terms.items()})

    def mapped(self, matrix: IntMatrix) -> "VirtualCharacter":
        """Apply an integer matrix to every support weight."""
        terms: Dict[Weight, int] = {}
        for w, m in self._terms.items():
            image = _apply(matrix, w)
            terms[image] = terms.get(image, 0) + m
        return VirtualCharacter(self.rank, terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._terms.items())))

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return vc_linear(self, other, 1, 1)

    def __sub__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return vc_linear(self, other, 1, -1)

    def __neg__(self) -> "VirtualCharacter":
        return self.scaled(-1)

    def __mul__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        return vc_tensor(self, other)

    def __repr__(self) -> str:
        body = " + ".join(f"{m}*e^{list(w)}" for w, m in sorted(self._terms.items(), reverse=True))
        return f"VirtualCharacter(rank={self.rank}, {body or '0'})"


def _check_ranks(a: VirtualCharacter, b: VirtualCharacter) -> None:
    if a.rank != b.rank:
        raise RankMismatch(f"Cannot combine characters of rank {a.rank} and {b.rank}")


def vc_linear(a: VirtualCharacter, b: VirtualCharacter, ca: int, cb: int) -> VirtualCharacter:
    """Return ca*a + cb*b with zero entries pruned."""
    _check_ranks(a, b)
    terms: Dict[Weight, int] = {}
    if ca:
        for w, m in a.items():
            terms[w] = ca * m
    if cb:
        for w, m in b.items():
            value = terms.get(w, 0) + cb * m
            if value:
                terms[w] = value
            else:
                terms.pop(w, None)
    return VirtualCharacter._raw(a.rank, terms)


def vc_tensor(a: VirtualCharacter, b: VirtualCharacter) -> VirtualCharacter:
    """Tensor product: convolution of supports."""
    _check_ranks(a, b)
    terms: Dict[Weight, int] = {}
    for wa, ma in a.items():
        for wb, mb in b.items():
            w = tuple(x + y for x, y in zip(wa, wb))
            terms[w] = terms.get(w, 0) + ma * mb
    return VirtualCharacter._raw(a.rank, {w: m for w, m in terms.items() if m})


def vc_dual(a: VirtualCharacter) -> VirtualCharacter:
    """Dual representation: negate every support weight."""
    return VirtualCharacter._raw(a.rank, {weight_neg(w): m for w, m in a.items()})


def vc_lambda(a: VirtualCharacter, p: int) -> VirtualCharacter:
    """
    p-th exterior power of an effective character.

    Reads off the degree-p coefficient of prod_w (1 + t e^w)^{m_w}, truncating
    every partial product at degree p.

    Raises:
        NegativeMultiplicity: If a has a negative multiplicity
    """
    if p < 0:
        raise LatticeError(f"Exterior degree must be nonnegative, got {p}")
    if not a.is_effective():
        raise NegativeMultiplicity("Exterior powers are only defined for effective characters")
    levels = [VirtualCharacter.trivial(a.rank)] + [VirtualCharacter.empty(a.rank)] * p
    for w, m in a.items():
        for _ in range(m):
            for k in range(p, 0, -1):
                if not levels[k - 1].is_empty():
                    levels[k] = levels[k] + levels[k - 1].shifted(w)
    return levels[p]


def vc_lambda_alternating(a: VirtualCharacter) -> VirtualCharacter:
    """
    Alternating sum of exterior powers, prod_w (1 - e^w)^{m_w}.

    Raises:
        NegativeMultiplicity: If a has a negative multiplicity
    """
    if not a.is_effective():
        raise NegativeMultiplicity("Exterior powers are only defined for effective characters")
    result = VirtualCharacter.trivial(a.rank)
    for w, m in a.items():
        if not any(w):
            return VirtualCharacter.empty(a.rank)
        for _ in range(m):
            result = result - result.shifted(w)
    return result


def vc_constant_term(a: VirtualCharacter) -> int:
    return a.multiplicity(zero_weight(a.rank))


def vc_evaluate(a: VirtualCharacter, t: "TorusPoint") -> complex:
    """
    Evaluate a character at exp(i*theta).

    The weight w contributes exp(i * (w . theta) / 2); the factor 1/2 undoes
    the lattice doubling.
    """
    if a.rank != t.rank:
        raise RankMismatch(f"Character of rank {a.rank} evaluated at a point of rank {t.rank}")
    if a.is_empty():
        return 0j
    weights = np.array(list(a.terms.keys()), dtype=float).reshape(len(a), a.rank)
    mults = np.array(list(a.terms.values()), dtype=float)
    phases = weights @ np.asarray(t.angles, dtype=float) / 2.0
    return complex(np.sum(mults * np.exp(1j * phases)))


def divide_one_minus(a: VirtualCharacter, beta: Weight) -> VirtualCharacter:
    """
    Exact quotient a / (1 - e^beta).

    Along every coset of Z*beta the quotient is the running sum of a taken
    against the direction of beta; a nonzero total on a coset means the
    division is not exact.

    Raises:
        NotDivisible: If (1 - e^beta) does not divide a
    """
    if not any(beta):
        raise NotDivisible("Cannot divide by 1 - e^0")
    step = weight_neg(beta)
    pivot = next(i for i, x in enumerate(step) if x)
    cosets: Dict[Weight, Dict[int, int]] = {}
    for w, m in a.items():
        t = w[pivot] // step[pivot]
        base = weight_sub(w, weight_scale(step, t))
        cosets.setdefault(base, {})[t] = m
    terms: Dict[Weight, int] = {}
    for base, line in cosets.items():
        running = 0
        for t in range(max(line), min(line) - 1, -1):
            running += line.get(t, 0)
            if running:
                terms[weight_add(base, weight_scale(step, t))] = running
        if running:
            raise NotDivisible(f"Division by (1 - e^{list(beta)}) leaves a remainder")
    return VirtualCharacter._raw(a.rank, terms)


# ============================================================================
# Torus points and Weyl groups
# ============================================================================

@dataclass(frozen=True)
class TorusPoint:
    """Elliptic element exp(i*theta) of a compact torus, angles in radians."""

    angles: Tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "angles", tuple(float(x) for x in self.angles))
        if not np.all(np.isfinite(np.asarray(self.angles, dtype=float))):
            raise LatticeError(f"Torus point angles must be finite, got {self.angles}")

    @property
    def rank(self) -> int:
        return len(self.angles)


def _apply(matrix: IntMatrix, w: Weight) -> Weight:
    return tuple(sum(r * x for r, x in zip(row, w)) for row in matrix)


def _matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _identity(rank: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))


@dataclass(frozen=True)
class WeylElement:
    """Integer matrix acting on the doubled lattice together with its sign."""

    matrix: IntMatrix
    sign: int

    def apply(self, w: Weight) -> Weight:
        return _apply(self.matrix, w)

    def is_identity(self) -> bool:
        return self.matrix == _identity(len(self.matrix))


def reflection_matrix(gram: Sequence[Sequence[Rational]], alpha: Weight) -> IntMatrix:
    """
    Matrix of the reflection s_alpha(x) = x - 2 B(x, alpha)/B(alpha, alpha) alpha.

    Raises:
        LatticeError: If alpha is isotropic or the reflection is not integral
    """
    rank = len(alpha)
    norm = inner_product(gram, alpha, alpha)
    if norm <= 0:
        raise LatticeError(f"Root {alpha} has nonpositive norm {norm}")
    coroot = [2 * sum(gram[j][k] * alpha[k] for k in range(rank)) / norm for j in range(rank)]
    rows = []
    for i in range(rank):
        row = []
        for j in range(rank):
            entry = int(i == j) - alpha[i] * coroot[j]
            if not Rational(entry).is_integer:
                raise LatticeError(f"Reflection in {alpha} is not integral on the lattice")
            row.append(int(entry))
        rows.append(tuple(row))
    return tuple(rows)


def enumerate_group(generators: Sequence[WeylElement], rank: int,
                    bound: Optional[int] = None) -> List[WeylElement]:
    """
    Breadth-first closure of a finite matrix group, identity first.

    Raises:
        GroupTooLarge: If more than ``bound`` elements are produced
    """
    bound = get_weyl_bound() if bound is None else bound
    identity = WeylElement(_identity(rank), 1)
    seen = {identity.matrix: identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            matrix = _matmul(g.matrix, current.matrix)
            if matrix in seen:
                continue
            element = WeylElement(matrix, g.sign * current.sign)
            seen[matrix] = element
            if len(seen) > bound:
                raise GroupTooLarge(f"Weyl group exceeds the bound of {bound} elements")
            queue.append(element)
    return list(seen.values())


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """
    Root data of a compact Cartan subgroup T with its compact/noncompact
    classification, the Gram matrix of B on doubled coordinates and the
    derived rho's, K-character of p and Weyl group W(K,T).

    Use CartanDatum.derive() (or epcore.build_cartan_datum for validated
    input) rather than the raw constructor.
    """

    name: str
    rank: int
    positive_roots: Tuple[Weight, ...]
    root_class: Tuple[str, ...]
    gram: Tuple[Tuple[Rational, ...], ...]
    extra_generators: Tuple[IntMatrix, ...] = ()
    rho: Weight = ()
    rho_k: Weight = ()
    rho_n: Weight = ()
    p_char: Optional[VirtualCharacter] = None
    weyl: Tuple[WeylElement, ...] = field(default=(), repr=False)

    @classmethod
    def derive(cls, name: str, rank: int, positive_roots: Sequence[Weight],
               root_class: Sequence[str], gram: Sequence[Sequence],
               extra_generators: Sequence[IntMatrix] = (),
               weyl_bound: Optional[int] = None) -> "CartanDatum":
        roots = tuple(tuple(int(x) for x in r) for r in positive_roots)
        classes = tuple(root_class)
        gram_t = tuple(tuple(Rational(x) for x in row) for row in gram)
        extras = tuple(tuple(tuple(int(x) for x in row) for row in m) for m in extra_generators)

        def half_sum(selected):
            total = zero_weight(rank)
            for r in selected:
                total = weight_add(total, r)
            return weight_half(total)

        compact = [r for r, c in zip(roots, classes) if c == "compact"]
        noncompact = [r for r, c in zip(roots, classes) if c == "noncompact"]
        p_char = VirtualCharacter.empty(rank)
        for r in noncompact:
            p_char = p_char + VirtualCharacter(rank, {r: 1, weight_neg(r): 1})

        generators = [WeylElement(reflection_matrix(gram_t, r), -1) for r in compact]
        for m in extras:
            generators.append(WeylElement(m, int(Matrix(m).det())))
        weyl = enumerate_group(generators, rank, weyl_bound)

        return cls(
            name=name, rank=rank, positive_roots=roots, root_class=classes,
            gram=gram_t, extra_generators=extras,
            rho=half_sum(roots), rho_k=half_sum(compact), rho_n=half_sum(noncompact),
            p_char=p_char, weyl=tuple(weyl),
        )

    def roots_of_class(self, tag: str) -> List[Weight]:
        return [r for r, c in zip(self.positive_roots, self.root_class) if c == tag]

    @property
    def compact_roots(self) -> List[Weight]:
        return self.roots_of_class("compact")

    @property
    def noncompact_roots(self) -> List[Weight]:
        return self.roots_of_class("noncompact")

    @property
    def weyl_order(self) -> int:
        return len(self.weyl)

    def is_compact_type(self) -> bool:
        return all(c == "compact" for c in self.root_class)

    def is_all_imaginary(self) -> bool:
        return all(c in ("compact", "noncompact") for c in self.root_class)

    def inner(self, a: Weight, b: Weight) -> Rational:
        return inner_product(self.gram, a, b)


def compact_subdatum(d: CartanDatum) -> CartanDatum:
    """Datum of K: the compact positive roots only, same torus and form."""
    compact = d.compact_roots
    return CartanDatum.derive(
        f"{d.name}/K", d.rank, compact, ["compact"] * len(compact), d.gram, d.extra_generators,
    )


def weyl_enumerate(d: CartanDatum, bound: Optional[int] = None) -> List[WeylElement]:
    """
    Enumerate W(K,T): the group generated by reflections in the compact
    positive roots and any extra generator matrices of the datum.

    Raises:
        GroupTooLarge: If |W| exceeds the bound (SPINLAT_WEYL_BOUND by default)
    """
    generators = [WeylElement(reflection_matrix(d.gram, r), -1) for r in d.compact_roots]
    for m in d.extra_generators:
        generators.append(WeylElement(m, int(Matrix(m).det())))
    return enumerate_group(generators, d.rank, bound)


def vc_alternating_sum(d: CartanDatum, lam: Weight) -> VirtualCharacter:
    """N_lam = sum over w in W of sign(w) e^{w lam}; empty when lam is singular."""
    terms: Dict[Weight, int] = {}
    for w in d.weyl:
        image = w.apply(lam)
        terms[image] = terms.get(image, 0) + w.sign
    return VirtualCharacter(d.rank, terms)


def check_dominant(d: CartanDatum, lam: Weight, roots: Optional[Sequence[Weight]] = None) -> None:
    for alpha in (d.compact_roots if roots is None else roots):
        if d.inner(lam, alpha) < 0:
            raise NotDominant(f"Weight {list(lam)} is not dominant: B(lam, {list(alpha)}) < 0")


def weyl_character(d: CartanDatum, lam: Weight) -> VirtualCharacter:
    """
    Irreducible character of highest weight lam of a compact connected group.

    Computed as e^{-rho} N_{lam+rho} divided exactly by the Weyl denominator
    prod_{alpha>0} (1 - e^{-alpha}).

    Raises:
        NotCompactDatum: If the datum has non-compact roots
        NotDominant: If lam is not dominant
    """
    if not d.is_compact_type():
        raise NotCompactDatum(f"Datum {d.name} has non-compact roots; use its compact subdatum")
    lam = tuple(lam)
    check_dominant(d, lam)
    result = vc_alternating_sum(d, weight_add(lam, d.rho))
    for alpha in d.positive_roots:
        result = divide_one_minus(result, weight_neg(alpha))
    return result.shifted(weight_neg(d.rho))


def weyl_dimension(d: CartanDatum, lam: Weight) -> Rational:
    """Weyl dimension formula prod B(lam+rho_K, a)/B(rho_K, a) over compact a > 0."""
    shifted = weight_add(tuple(lam), d.rho_k)
    value = Rational(1)
    for alpha in d.compact_roots:
        value *= d.inner(shifted, alpha) / d.inner(d.rho_k, alpha)
    return value


def vc_inner_k(d: CartanDatum, a: VirtualCharacter, b: VirtualCharacter) -> Rational:
    """
    Weyl integration pairing on K:
    (1/|W|) CT(a * dual(b) * prod over compact roots of both signs of (1 - e^alpha)).

    For genuine K-characters this is dim Hom_K(b, a).
    """
    _check_ranks(a, b)
    product = a * vc_dual(b)
    for alpha in d.compact_roots:
        product = product - product.shifted(alpha)
        product = product - product.shifted(weight_neg(alpha))
    return Rational(vc_constant_term(product), d.weyl_order)
