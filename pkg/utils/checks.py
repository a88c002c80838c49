"""
Invariant suite run by the selftest command

Each check returns a CheckResult; run_suite() runs them all against the
bundled fixtures with a seeded random source and logs progress to stderr.
"""

import itertools
import math
import random
import sys
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

try:
    from ..config import get_selftest_seed
    from .charlat import (
        CartanDatum, TorusPoint, VirtualCharacter, Weight, vc_alternating_sum, vc_constant_term,
        vc_dual, vc_evaluate, vc_inner_k, vc_lambda, vc_lambda_alternating, weight_half, weight_neg,
        weyl_character, weyl_dimension,
    )
    from .clifford import (
        CliffordElement, PolarizedSpace, SpinVector, clifford_mul, epsilon_check, half_spin_characters,
        quadratic_form, spin_action, spin_square_check,
    )
    from .epcore import (
        HcInputs, SplitCartanDatum, delta_characters, delta_plus_evaluate, dirac_square_check,
        discrete_expansion, discrete_numerator, ep_index, ep_via_pseudo_check, gamma_identity_check,
        hc_constant, is_regular, normalized_orbital_factor, orbit_representative, pseudo_orbital,
        RegularCharacter, sl2_dirac_model, spin_characters_of, theta_evaluate, weyl_det_factor,
    )
except (ImportError, ValueError):
    from config import get_selftest_seed
    from utils.charlat import (
        CartanDatum, TorusPoint, VirtualCharacter, Weight, vc_alternating_sum, vc_constant_term,
        vc_dual, vc_evaluate, vc_inner_k, vc_lambda, vc_lambda_alternating, weight_half, weight_neg,
        weyl_character, weyl_dimension,
    )
    from utils.clifford import (
        CliffordElement, PolarizedSpace, SpinVector, clifford_mul, epsilon_check, half_spin_characters,
        quadratic_form, spin_action, spin_square_check,
    )
    from utils.epcore import (
        HcInputs, SplitCartanDatum, delta_characters, delta_plus_evaluate, dirac_square_check,
        discrete_expansion, discrete_numerator, ep_index, ep_via_pseudo_check, gamma_identity_check,
        hc_constant, is_regular, normalized_orbital_factor, orbit_representative, pseudo_orbital,
        RegularCharacter, sl2_dirac_model, spin_characters_of, theta_evaluate, weyl_det_factor,
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""


def _close(a: complex, b: complex, rel: float = 1e-9) -> bool:
    return abs(a - b) <= rel * max(1.0, abs(a), abs(b))


# ============================================================================
# Random corpora
# ============================================================================

def random_character(rng: random.Random, rank: int, terms: int = 3, spread: int = 3,
                     effective: bool = True) -> VirtualCharacter:
    """Random character with true coordinates in [-spread, spread]."""
    result = {}
    for _ in range(rng.randint(1, terms)):
        w = tuple(2 * rng.randint(-spread, spread) for _ in range(rank))
        m = rng.randint(1, 3) if effective else rng.choice([-2, -1, 1, 2])
        result[w] = result.get(w, 0) + m
    return VirtualCharacter(rank, result)


def orbit_sum(d: CartanDatum, w: Weight) -> VirtualCharacter:
    return VirtualCharacter.from_weights(d.rank, {e.apply(w) for e in d.weyl})


def random_invariant_character(rng: random.Random, d: CartanDatum, terms: int = 2,
                               spread: int = 3) -> VirtualCharacter:
    """Nonnegative sum of W-orbits of random integral weights."""
    total = VirtualCharacter.empty(d.rank)
    for _ in range(rng.randint(1, terms)):
        w = tuple(2 * rng.randint(-spread, spread) for _ in range(d.rank))
        total = total + orbit_sum(d, w).scaled(rng.randint(1, 2))
    return total


def with_zero_weight(d: CartanDatum) -> CartanDatum:
    """d with one extra noncompact root at 0, so p_char contains e^0."""
    zero = tuple(0 for _ in range(d.rank))
    return CartanDatum.derive(
        f"{d.name}+0", d.rank, [*d.positive_roots, zero], [*d.root_class, "noncompact"], d.gram,
        d.extra_generators,
    )


def random_element(rng: random.Random, m: int, blades: int = 3) -> CliffordElement:
    return CliffordElement(m, {rng.randrange(1 << (2 * m)): rng.randint(-3, 3) for _ in range(blades)})


def random_word(rng: random.Random, sp: PolarizedSpace, max_len: int = 3) -> CliffordElement:
    gens = sp.generators()
    x = sp.unit()
    for _ in range(rng.randint(0, max_len)):
        x = clifford_mul(sp, x, rng.choice(gens))
    return x


def mu_corpus(rng: random.Random, quick: bool) -> List[List[Weight]]:
    """Exhaustive rank-1 lists for m <= 3 with |true mu| <= 4, then random ones up to m = 6."""
    values = range(-8, 9, 2)
    corpus: List[List[Weight]] = [[]]
    top = 2 if quick else 3
    for m in range(1, top + 1):
        corpus.extend([[(v,) for v in combo] for combo in itertools.product(values, repeat=m)])
    for _ in range(50 if quick else 200):
        m = rng.randint(0, 6)
        corpus.append([tuple(2 * rng.randint(-4, 4) for _ in range(2)) for _ in range(m)])
    return corpus


# ============================================================================
# Character calculus
# ============================================================================

def check_character_ring(rng: random.Random, quick: bool = False) -> CheckResult:
    trials = 20 if quick else 100
    ok = True
    for _ in range(trials):
        a, b, c = (random_character(rng, 2, effective=False) for _ in range(3))
        t = TorusPoint(tuple(rng.uniform(-math.pi, math.pi) for _ in range(2)))
        ok &= a * b == b * a
        ok &= (a * b) * c == a * (b * c)
        ok &= vc_dual(vc_dual(a)) == a
        ok &= vc_dual(a * b) == vc_dual(a) * vc_dual(b)
        ok &= _close(vc_evaluate(a * b, t), vc_evaluate(a, t) * vc_evaluate(b, t))
        e = random_character(rng, 2)
        n = e.dimension()
        ok &= sum(vc_lambda(e, p).dimension() for p in range(n + 1)) == 2 ** n
        ok &= vc_lambda(e, n + 1).is_empty()
        ok &= vc_lambda_alternating(e + VirtualCharacter.trivial(2)).is_empty()
    return CheckResult("character_ring", bool(ok), trials)


def check_weyl_characters(data: Dict[str, CartanDatum]) -> CheckResult:
    ok = True
    cases = 0
    su2 = data["su2"]
    chars = [weyl_character(su2, (2 * k,)) for k in range(7)]
    for k, ch in enumerate(chars):
        ok &= ch.dimension() == weyl_dimension(su2, (2 * k,)) == k + 1
        ok &= all(ch.mapped(w.matrix) == ch for w in su2.weyl)
        cases += 1
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            ok &= vc_inner_k(su2, a, b) == (1 if i == j else 0)
    su3 = data["su3"]
    highest = [(0, 0), (2, 0), (0, 2), (2, 2)]
    chars3 = [weyl_character(su3, lam) for lam in highest]
    for lam, ch, dim in zip(highest, chars3, (1, 3, 3, 8)):
        ok &= ch.dimension() == weyl_dimension(su3, lam) == dim
        ok &= all(ch.mapped(w.matrix) == ch for w in su3.weyl)
        cases += 1
    for i, a in enumerate(chars3):
        for j, b in enumerate(chars3):
            ok &= vc_inner_k(su3, a, b) == (1 if i == j else 0)
    return CheckResult("weyl_characters", bool(ok), cases)


def check_alternating_signs(data: Dict[str, CartanDatum], rng: random.Random) -> CheckResult:
    ok = True
    cases = 0
    for d in data.values():
        for _ in range(10):
            lam = tuple(rng.randint(-6, 6) for _ in range(d.rank))
            base = vc_alternating_sum(d, lam)
            for w in d.weyl:
                ok &= vc_alternating_sum(d, w.apply(lam)) == base.scaled(w.sign)
                cases += 1
    return CheckResult("alternating_sum_signs", bool(ok), cases)


# ============================================================================
# Clifford algebra and spin module
# ============================================================================

def check_clifford_relations() -> CheckResult:
    ok = True
    cases = 0
    for m in range(1, 6):
        sp = PolarizedSpace(m)
        gens = sp.generators()
        for u in gens:
            for v in gens:
                anti = clifford_mul(sp, u, v) + clifford_mul(sp, v, u)
                ok &= anti == sp.unit(-2 * quadratic_form(sp, u, v))
                cases += 1
    return CheckResult("clifford_relations", bool(ok), cases)


def check_clifford_associativity(rng: random.Random, quick: bool = False) -> CheckResult:
    trials = 50 if quick else 200
    ok = True
    for _ in range(trials):
        sp = PolarizedSpace(rng.randint(1, 4))
        x, y, z = (random_element(rng, sp.m) for _ in range(3))
        ok &= clifford_mul(sp, clifford_mul(sp, x, y), z) == clifford_mul(sp, x, clifford_mul(sp, y, z))
    return CheckResult("clifford_associativity", bool(ok), trials)


def check_spin_module(rng: random.Random, quick: bool = False) -> CheckResult:
    ok = True
    cases = 0
    for m in range(1, 5):
        sp = PolarizedSpace(m)
        basis = SpinVector.basis(m)
        for _ in range(10 if quick else 40):
            x, y = random_word(rng, sp), random_word(rng, sp)
            xy = clifford_mul(sp, x, y)
            for s in basis:
                ok &= spin_action(sp, xy, s) == spin_action(sp, x, spin_action(sp, y, s))
                cases += 1
        for _ in range(10):
            v = sp.vector([rng.randint(-3, 3) for _ in range(m)], [rng.randint(-3, 3) for _ in range(m)])
            q = quadratic_form(sp, v, v)
            for s in basis:
                ok &= spin_action(sp, v, spin_action(sp, v, s)) == s.scaled(-q)
                cases += 1
        for _ in range(10):
            x = random_word(rng, sp)
            for s in basis:
                image = spin_action(sp, x, s)
                if x.is_even():
                    ok &= image.even_part() == image if s.odd_part().is_zero() else image.odd_part() == image
                elif x.is_odd():
                    ok &= image.odd_part() == image if s.odd_part().is_zero() else image.even_part() == image
                cases += 1
    return CheckResult("spin_module", bool(ok), cases)


def check_half_spin(rng: random.Random, quick: bool = False) -> List[CheckResult]:
    corpus = mu_corpus(rng, quick)
    square_ok = parity_ok = product_ok = dims_ok = True
    for mu in corpus:
        rank = len(mu[0]) if mu else 1
        square_ok &= spin_square_check(mu, rank).equal
        parity_ok &= epsilon_check(mu, rank).parity_matched
        plus, minus = half_spin_characters(mu, rank)
        product = VirtualCharacter.trivial(rank)
        for w in mu:
            h = weight_half(w)
            product = product * VirtualCharacter(rank, {h: 1}) - product * VirtualCharacter(rank, {weight_neg(h): 1})
        product_ok &= plus - minus == product
        if mu:
            dims_ok &= plus.dimension() == minus.dimension() == 2 ** (len(mu) - 1)
    n = len(corpus)
    return [
        CheckResult("spin_square", bool(square_ok), n),
        CheckResult("epsilon_twist", bool(parity_ok), n),
        CheckResult("half_spin_product", bool(product_ok and dims_ok), n),
    ]


# ============================================================================
# Euler-Poincare and discrete series
# ============================================================================

def check_sl2_values(data: Dict[str, CartanDatum]) -> CheckResult:
    d = data["sl2R"]
    trivial = VirtualCharacter.trivial(1)
    ok = ep_index(d, trivial, trivial) == 2
    ok &= ep_index(d, trivial, VirtualCharacter.monomial((4,))) == -1
    ok &= ep_index(d, trivial, VirtualCharacter.monomial((-4,))) == -1
    for n in range(-5, 6):
        tau = VirtualCharacter.monomial((2 * n,))
        exp = discrete_expansion(d, tau)
        ok &= exp.coeffs == {(2 * n,): 1, (2 * n - 4,): -1}
        ok &= exp.remainder.is_empty()
        ok &= exp.reconstruct(d) == tau * delta_characters(d).delta_full
    return CheckResult("sl2_pseudo_coefficients", bool(ok), 14)


def check_orthonormality(data: Dict[str, CartanDatum], rng: random.Random) -> CheckResult:
    ok = True
    cases = 0
    for key in ("su2", "su3", "sp4R"):
        d = data[key]
        samples = []
        while len(samples) < 20:
            lam = tuple(2 * rng.randint(-4, 4) for _ in range(d.rank))
            if is_regular(d, lam):
                samples.append(lam)
        for a in samples:
            na = discrete_numerator(d, a)
            for b in samples:
                value = vc_constant_term(na * vc_dual(discrete_numerator(d, b)))
                same = orbit_representative(d, a) == orbit_representative(d, b)
                if same:
                    ok &= abs(value) == d.weyl_order
                else:
                    ok &= value == 0
                cases += 1
    return CheckResult("discrete_orthonormality", bool(ok), cases)


def check_reconstruction(data: Dict[str, CartanDatum], rng: random.Random, quick: bool = False) -> CheckResult:
    ok = True
    cases = 0
    for d in data.values():
        for _ in range(10 if quick else 50):
            tau = random_invariant_character(rng, d)
            exp = discrete_expansion(d, tau)
            ok &= exp.reconstruct(d) == tau * delta_characters(d).delta_full
            ok &= all(not is_regular(d, lam) for lam in exp.remainder.support())
            if d.weyl_order == 1:
                ok &= exp.remainder.is_empty()
            cases += 1
    return CheckResult("expansion_reconstruction", bool(ok), cases)


def check_ep_identities(data: Dict[str, CartanDatum], rng: random.Random, quick: bool = False) -> CheckResult:
    ok = True
    cases = 0
    for d in data.values():
        ok &= gamma_identity_check(d).equal
        for _ in range(10 if quick else 50):
            tau = random_invariant_character(rng, d)
            sigma = random_invariant_character(rng, d)
            ok &= ep_index(d, tau, sigma) == ep_index(d, sigma, tau)
            ok &= ep_via_pseudo_check(d, tau, sigma).equal
            cases += 1
    return CheckResult("ep_identities", bool(ok), cases)


def check_zero_weight_vanishing(data: Dict[str, CartanDatum], rng: random.Random,
                                quick: bool = False) -> CheckResult:
    ok = True
    cases = 0
    for d in data.values():
        z = with_zero_weight(d)
        for _ in range(5 if quick else 20):
            tau = random_invariant_character(rng, d)
            sigma = random_invariant_character(rng, d)
            ok &= ep_index(z, tau, sigma) == 0
            cases += 1
    return CheckResult("ep_zero_weight_vanishing", bool(ok), cases)


def check_evaluators(data: Dict[str, CartanDatum], rng: random.Random) -> CheckResult:
    ok = True
    d = data["sl2R"]
    su2 = data["su2"]
    for _ in range(100):
        theta = rng.uniform(0.05, math.pi - 0.05)
        t = TorusPoint((theta,))
        ok &= _close(weyl_det_factor(d, t), 4 * math.sin(theta) ** 2)
        lam = rng.randint(-5, 5) * 2
        that = RegularCharacter((lam,), d)
        ok &= _close(theta_evaluate(d, that, t) * vc_evaluate(delta_characters(d).delta_full, t),
                     vc_evaluate(that.numerator, t))
        tau = random_character(rng, 1)
        ok &= _close(pseudo_orbital(d, tau, t) * vc_evaluate(spin_characters_of(d), t), vc_evaluate(tau, t))
        k = rng.randint(0, 4)
        ok &= _close(theta_evaluate(su2, RegularCharacter((2 * k,), su2), t),
                     vc_evaluate(weyl_character(su2, (2 * k,)), t))
    split = SplitCartanDatum.derive(1, [[2]], [()])
    for _ in range(20):
        s = rng.uniform(-3, 3)
        ok &= _close(delta_plus_evaluate(split, (s,)), 2 * abs(math.sinh(s)))
        ok &= _close(normalized_orbital_factor(split, (s,)), 2 * math.sinh(s))
    for n_pos in range(5):
        for n_nc in range(n_pos + 1):
            for nu in range(5):
                value = hc_constant(HcInputs(n_pos, n_nc, nu, 1 + nu, 0.5))
                ok &= math.copysign(1, value) == (-1) ** n_nc
    return CheckResult("evaluators", bool(ok), 100)


def check_dirac() -> CheckResult:
    sp = PolarizedSpace(1)
    ok = True
    for n in range(1, 6):
        ok &= dirac_square_check(sl2_dirac_model(n), sp).max_defect == 0
    return CheckResult("dirac_square", bool(ok), 5)


# ============================================================================
# Suite
# ============================================================================

def run_suite(data: Dict[str, CartanDatum], seed: Optional[int] = None, quick: bool = False) -> List[CheckResult]:
    """
    Run every invariant check.

    Args:
        data: Fixtures keyed by sl2R, su2, su3, sp4R
        seed: Seed for the random corpora (SPINLAT_SELFTEST_SEED by default)
        quick: Use smaller corpora
    """
    rng = random.Random(get_selftest_seed() if seed is None else seed)
    steps: List[Callable[[], object]] = [
        lambda: check_character_ring(rng, quick),
        lambda: check_weyl_characters(data),
        lambda: check_alternating_signs(data, rng),
        check_clifford_relations,
        lambda: check_clifford_associativity(rng, quick),
        lambda: check_spin_module(rng, quick),
        lambda: check_half_spin(rng, quick),
        lambda: check_sl2_values(data),
        lambda: check_orthonormality(data, rng),
        lambda: check_reconstruction(data, rng, quick),
        lambda: check_ep_identities(data, rng, quick),
        lambda: check_zero_weight_vanishing(data, rng, quick),
        lambda: check_evaluators(data, rng),
        check_dirac,
    ]
    results: List[CheckResult] = []
    for step in steps:
        start = time.perf_counter()
        out = step()
        batch = out if isinstance(out, list) else [out]
        for r in batch:
            status = "ok" if r.passed else "FAILED"
            print(f"[Spinlat] selftest {r.name}: {status} ({r.cases} cases, {time.perf_counter() - start:.2f}s)",
                  file=sys.stderr)
        results.extend(batch)
    return results
