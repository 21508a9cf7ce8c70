"""Randomized and exhaustive property suites over the whole library.

Each check returns a CheckResult; the CLI renders them as a table and
the test suite pins them at fixed parameters.  All randomness comes from
explicitly seeded generators, so every run is reproducible.

The definitional Archimedean tests are deliberately independent of the
structural classifier: much-less is certified by |g|^N < |h| for every
exponent up to a cap, equivalence by a bounded search for dominating
powers in both directions.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .descriptor import (
    OrderDescriptor,
    enumerate_descriptors,
    more_mixed,
    reference_descriptor,
    shape_of,
    validate,
)
from .exact import Dyadic, Sign, linear_comb_sign
from .group import (
    GroupElement,
    PElement,
    PIndex,
    conjugate,
    first_primes,
    gen_h,
    gen_lambda,
    gen_zeta,
    identity,
    invert,
    multiply,
)
from .oracle import (
    ArchOrder,
    Comparison,
    abs_element,
    arch_class,
    arch_compare,
    compare,
    index_key,
    sign_of,
)
from .parser import format_element, parse_element
from .topology import (
    Certificate,
    agrees,
    cb_model,
    isolation_certificate,
    limit_witness,
)

__all__ = [
    "CheckResult",
    "definitional_much_less",
    "definitional_equivalent",
    "random_element",
    "random_certificate",
    "check_defining_relations",
    "check_group_axioms",
    "check_expression_roundtrip",
    "check_order_axioms",
    "check_slice_order_duals",
    "check_stratum_ladder",
    "check_cross_family_separation",
    "check_mixed_interleaving",
    "check_direction_coherence",
    "check_class_absorption",
    "check_gamma_duality",
    "check_enumeration_counts",
    "check_descriptor_separation",
    "check_isolation_certificates",
    "check_limit_witnesses",
    "check_rank_model",
    "run_all_checks",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < 8:
            self.failures.append(message)


def _finish(result: CheckResult, started: float) -> CheckResult:
    result.seconds = time.perf_counter() - started
    return result


# ---------------------------------------------------------------------------
# randomized element generation


def random_x(rng: random.Random, max_exp: int = 4) -> Dyadic:
    k = rng.randint(0, max_exp)
    return Dyadic(rng.randint(0, (1 << k) - 1), k)


def random_dyadic(rng: random.Random, max_exp: int = 4, magnitude: int = 3) -> Dyadic:
    k = rng.randint(0, max_exp)
    return Dyadic(rng.randint(-magnitude << k, magnitude << k), k)


def random_coeff(rng: random.Random) -> Fraction:
    num = rng.choice([v for v in range(-9, 10) if v])
    return Fraction(num, rng.randint(1, 9))


def random_element(
    rng: random.Random,
    n: int,
    max_support: int = 3,
    z_bound: int = 4,
    x_exp: int = 4,
    tail: bool = True,
) -> GroupElement:
    items = []
    for _ in range(rng.randint(0, max_support)):
        idx = PIndex(rng.randint(1, n), rng.randint(-z_bound, z_bound), random_x(rng, x_exp))
        items.append((idx, random_coeff(rng)))
    a = random_dyadic(rng) if tail and rng.random() < 0.4 else Dyadic(0)
    b = rng.randint(-3, 3) if tail and rng.random() < 0.4 else 0
    return GroupElement(n, PElement(items), a, b)


def random_certificate(
    rng: random.Random,
    d: OrderDescriptor,
    size: int = 6,
    z_bound: int = 4,
    primes: Optional[Sequence[int]] = None,
) -> Certificate:
    """A certificate drawn from d's own sign pattern on random elements."""
    entries = []
    seen = set()
    while len(entries) < size:
        g = random_element(rng, d.n, max_support=3, z_bound=z_bound, x_exp=3)
        if g.is_identity() or g in seen:
            continue
        seen.add(g)
        entries.append((g, sign_of(d, g, primes)))
    return Certificate(tuple(entries))


# ---------------------------------------------------------------------------
# definitional Archimedean relations (test-side oracles)


def definitional_much_less(
    d: OrderDescriptor,
    g: GroupElement,
    h: GroupElement,
    cap: int = 8,
    primes: Optional[Sequence[int]] = None,
) -> bool:
    """|g|^N < |h| for every N in 1..cap."""
    ag = abs_element(d, g, primes)
    ah = abs_element(d, h, primes)
    current = ag
    for _ in range(cap):
        if compare(d, current, ah, primes) != Comparison.LESS:
            return False
        current = multiply(current, ag, primes)
    return True


def definitional_equivalent(
    d: OrderDescriptor,
    g: GroupElement,
    h: GroupElement,
    cap: int = 64,
    primes: Optional[Sequence[int]] = None,
) -> bool:
    """Some powers dominate in both directions: |g| < |h|^m, |h| < |g|^n."""

    def dominates(small: GroupElement, large: GroupElement) -> bool:
        current = large
        for _ in range(cap):
            if compare(d, small, current, primes) == Comparison.LESS:
                return True
            current = multiply(current, large, primes)
        return False

    ag = abs_element(d, g, primes)
    ah = abs_element(d, h, primes)
    return dominates(ag, ah) and dominates(ah, ag)


# ---------------------------------------------------------------------------
# group structure


def check_defining_relations(
    samples: int = 1000,
    seed: int = 0,
    z_bound: int = 6,
    x_exp: int = 8,
    arities: Sequence[int] = (2, 3),
) -> CheckResult:
    """The three defining conjugation identities, randomized."""
    started = time.perf_counter()
    result = CheckResult("defining-relations", True, samples)
    rng = random.Random(seed)
    for trial in range(samples):
        n = rng.choice(list(arities))
        primes = first_primes(n)
        i = rng.randint(1, n)
        z = rng.randint(-z_bound, z_bound)
        x = random_x(rng, x_exp)
        r = random_coeff(rng)
        alpha = random_dyadic(rng, x_exp, 4)
        beta = rng.randint(-z_bound, z_bound)
        h = gen_h(n, i, z, x, r)

        # L-conjugation: coefficient scales by p_i^m, coordinate wraps.
        m, x2 = (x + alpha.mul_pow2(z)).floor_split()
        expected = gen_h(n, i, z, x2, r * Fraction(primes[i - 1]) ** m)
        if conjugate(h, gen_lambda(n, alpha)) != expected:
            result.fail(f"L-conjugation failed at trial {trial}")

        # Z-conjugation: stratum shifts, coefficient fixed.
        if conjugate(h, gen_zeta(n, beta)) != gen_h(n, i, z + beta, x, r):
            result.fail(f"Z-conjugation failed at trial {trial}")

        # Z on L: the exponent halves per shift.
        got = conjugate(gen_lambda(n, alpha), gen_zeta(n, beta))
        if got != gen_lambda(n, alpha.mul_pow2(-beta)):
            result.fail(f"Z-on-L conjugation failed at trial {trial}")
        if not result.passed:
            break
    return _finish(result, started)


def check_group_axioms(
    samples: int = 1000,
    seed: int = 0,
    n: int = 2,
    max_support: int = 6,
) -> CheckResult:
    """Associativity, identity, and inverses on random triples."""
    started = time.perf_counter()
    result = CheckResult("group-axioms", True, samples)
    rng = random.Random(seed)
    e = identity(n)
    for trial in range(samples):
        g = random_element(rng, n, max_support=max_support)
        h = random_element(rng, n, max_support=max_support)
        k = random_element(rng, n, max_support=max_support)
        if multiply(multiply(g, h), k) != multiply(g, multiply(h, k)):
            result.fail(f"associativity failed at trial {trial}")
        if multiply(g, invert(g)) != e or multiply(invert(g), g) != e:
            result.fail(f"inverse failed at trial {trial}")
        if multiply(e, g) != g or multiply(g, e) != g:
            result.fail(f"identity failed at trial {trial}")
        if not result.passed:
            break
    return _finish(result, started)


def check_expression_roundtrip(
    samples: int = 1000, seed: int = 0, n: int = 3
) -> CheckResult:
    """format -> parse is the identity on normal forms."""
    started = time.perf_counter()
    result = CheckResult("expression-roundtrip", True, samples)
    rng = random.Random(seed)
    for trial in range(samples):
        g = random_element(rng, n, max_support=4)
        text = format_element(g)
        if parse_element(text, n) != g:
            result.fail(f"round-trip failed at trial {trial}: {text}")
            break
    return _finish(result, started)


# ---------------------------------------------------------------------------
# order axioms


def check_order_axioms(
    descriptors: Sequence[OrderDescriptor],
    pairs: int = 500,
    seed: int = 0,
    primes: Optional[Sequence[int]] = None,
    name: str = "order-axioms",
) -> CheckResult:
    """Trichotomy, antisymmetry, positive-cone closure, and conjugation
    invariance for each descriptor on random element pairs."""
    started = time.perf_counter()
    result = CheckResult(name, True, len(descriptors) * pairs)
    for d_pos, d in enumerate(descriptors):
        rng = random.Random((seed << 20) ^ d_pos)
        if sign_of(d, identity(d.n), primes) != Sign.ZERO:
            result.fail(f"identity sign nonzero under descriptor {d_pos}")
        for _ in range(pairs):
            g = random_element(rng, d.n)
            h = random_element(rng, d.n)
            sg = sign_of(d, g, primes)
            if (sg == Sign.ZERO) != g.is_identity():
                result.fail(f"trichotomy failed under descriptor {d_pos}")
            if sign_of(d, invert(g), primes) != sg.flipped():
                result.fail(f"antisymmetry failed under descriptor {d_pos}")
            sh = sign_of(d, h, primes)
            if sg == Sign.POSITIVE and sh == Sign.POSITIVE:
                if sign_of(d, multiply(g, h), primes) != Sign.POSITIVE:
                    result.fail(f"cone closure failed under descriptor {d_pos}")
            if sign_of(d, conjugate(g, h), primes) != sg:
                result.fail(f"conjugation invariance failed under descriptor {d_pos}")
            if not result.passed:
                return _finish(result, started)
    return _finish(result, started)


def check_slice_order_duals(
    samples: int = 300,
    seed: int = 0,
    n: int = 2,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Elements supported on a single (i, z) slice are signed by the exact
    prime-power sum, and flipping the family's gamma bit negates the sign.

    Cross-checked against floating-point evaluation away from zero.
    """
    started = time.perf_counter()
    result = CheckResult("slice-order-duals", True, samples)
    rng = random.Random(seed)
    ps = first_primes(n) if primes is None else primes
    base = reference_descriptor(n)
    for trial in range(samples):
        i = rng.randint(1, n)
        z = rng.randint(-3, 3)
        terms = []
        for _ in range(rng.randint(1, 4)):
            terms.append((random_coeff(rng), random_x(rng, 4)))
        items = [(PIndex(i, z, x), r) for r, x in terms]
        g = GroupElement(n, PElement(items), Dyadic(0), 0)
        merged = {}
        for r, x in terms:
            merged[x] = merged.get(x, Fraction(0)) + r
        direct = linear_comb_sign(ps[i - 1], [(r, x) for x, r in merged.items()])
        got = sign_of(base, g, ps)
        if got != direct:
            result.fail(f"oracle disagrees with the sum formula at trial {trial}")
        numeric = sum(
            float(r) * float(ps[i - 1]) ** (x.mantissa / (1 << x.exponent))
            for x, r in merged.items()
        )
        if abs(numeric) > 1e-9 and int(direct) != (1 if numeric > 0 else -1):
            result.fail(f"sum formula disagrees with float evaluation at trial {trial}")
        flipped = OrderDescriptor(
            base.n,
            tuple(bit ^ (1 if pos == i - 1 else 0) for pos, bit in enumerate(base.gamma)),
            base.blocks,
            base.directions,
            base.mixing,
        )
        if sign_of(flipped, g, ps) != got.flipped():
            result.fail(f"gamma flip did not negate the sign at trial {trial}")
        if not result.passed:
            break
    return _finish(result, started)


# ---------------------------------------------------------------------------
# Archimedean structure


def check_stratum_ladder(
    descriptors: Sequence[OrderDescriptor],
    z_range: Tuple[int, int] = (-5, 5),
    cap: int = 8,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Within each family the stratum ladder is strictly Archimedean in
    the block's direction, and everything sits below L below Z."""
    started = time.perf_counter()
    result = CheckResult("stratum-ladder", True, 0)
    lo, hi = z_range
    for d_pos, d in enumerate(descriptors):
        lam = gen_lambda(d.n, Dyadic(1))
        zeta = gen_zeta(d.n, 1)
        for position, block in enumerate(d.blocks):
            ascending = bool(d.directions[position])
            for i in block:
                rungs = [gen_h(d.n, i, z, Dyadic(0), Fraction(1)) for z in range(lo, hi + 1)]
                if not ascending:
                    rungs.reverse()
                for lower, upper in zip(rungs, rungs[1:]):
                    result.cases += 1
                    if not definitional_much_less(d, lower, upper, cap, primes):
                        result.fail(
                            f"ladder link failed for family {i} under descriptor {d_pos}"
                        )
                        return _finish(result, started)
                result.cases += 1
                if not definitional_much_less(d, rungs[-1], lam, cap, primes):
                    result.fail(f"family {i} not below L under descriptor {d_pos}")
                    return _finish(result, started)
        result.cases += 1
        if not definitional_much_less(d, lam, zeta, cap, primes):
            result.fail(f"L not below Z under descriptor {d_pos}")
            return _finish(result, started)
    return _finish(result, started)


def check_cross_family_separation(
    descriptors: Sequence[OrderDescriptor],
    stratum_bound: int = 3,
    cap: int = 8,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Coordinates of different families are never Archimedean equivalent:
    the structural verdict is a strict one and the definitional test
    confirms it in the indicated direction."""
    started = time.perf_counter()
    result = CheckResult("cross-family-separation", True, 0)
    span = range(-stratum_bound, stratum_bound + 1)
    for d_pos, d in enumerate(descriptors):
        for i, j in itertools.combinations(range(1, d.n + 1), 2):
            for u, v in itertools.product(span, repeat=2):
                result.cases += 1
                g = gen_h(d.n, i, u, Dyadic(0), Fraction(1))
                h = gen_h(d.n, j, v, Dyadic(0), Fraction(1))
                verdict = arch_compare(d, g, h, primes)
                if verdict == ArchOrder.EQUIVALENT:
                    result.fail(
                        f"families {i},{j} classified equivalent under descriptor {d_pos}"
                    )
                elif verdict == ArchOrder.MUCH_LESS:
                    if not definitional_much_less(d, g, h, cap, primes):
                        result.fail(
                            f"much-less not definitional for {i},{j} under descriptor {d_pos}"
                        )
                else:
                    if not definitional_much_less(d, h, g, cap, primes):
                        result.fail(
                            f"much-greater not definitional for {i},{j} under descriptor {d_pos}"
                        )
                if not result.passed:
                    return _finish(result, started)
    return _finish(result, started)


def _chain_walk(d: OrderDescriptor, level_lo: int, level_hi: int) -> List[Tuple[int, int]]:
    """Coordinates (i, z) in ascending order, read off the interleaving
    chains literally: per block, level rows in ascending order, each row
    the least index followed by the chain members at their offsets."""
    walk: List[Tuple[int, int]] = []
    for block, dirbit, chain in zip(d.blocks, d.directions, d.mixing):
        sigma = 1 if dirbit else -1
        members = [(block[0], 0)] + list(chain)
        for level in range(level_lo, level_hi + 1):
            for index, offset in members:
                walk.append((index, offset + sigma * level))
    return walk


def check_mixed_interleaving(
    descriptors: Sequence[OrderDescriptor],
    window: int = 3,
    cap: int = 8,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Mixed blocks interleave exactly as their chains prescribe.

    The whole bounded window must sort identically under the key order
    and under the literal chain walk, and one full chain period (from the
    least index's base coordinate to its next rung) must pass the
    definitional much-less test link by link."""
    started = time.perf_counter()
    result = CheckResult("mixed-interleaving", True, 0)
    for d_pos, d in enumerate(descriptors):
        walk = _chain_walk(d, -window, window)
        result.cases += 1
        resorted = sorted(walk, key=lambda iz: index_key(d, iz[0], iz[1]))
        if resorted != walk:
            result.fail(f"key order disagrees with the chain walk under descriptor {d_pos}")
            return _finish(result, started)
        for position, (block, chain) in enumerate(zip(d.blocks, d.mixing)):
            if not chain:
                continue
            one_block = OrderDescriptor(
                d.n, d.gamma, (block,), (d.directions[position],), (chain,)
            )
            period = _chain_walk(one_block, 0, 1)[: len(chain) + 2]
            rungs = [gen_h(d.n, i, z, Dyadic(0), Fraction(1)) for i, z in period]
            for lower, upper in zip(rungs, rungs[1:]):
                result.cases += 1
                if not definitional_much_less(d, lower, upper, cap, primes):
                    result.fail(
                        f"chain link not definitional under descriptor {d_pos}"
                    )
                    return _finish(result, started)
    return _finish(result, started)


def check_direction_coherence(
    descriptors: Sequence[OrderDescriptor],
    cap: int = 8,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Every member of a block realizes the block's single direction."""
    started = time.perf_counter()
    result = CheckResult("direction-coherence", True, 0)
    for d_pos, d in enumerate(descriptors):
        for block, dirbit, chain in zip(d.blocks, d.directions, d.mixing):
            members = [(block[0], 0)] + list(chain)
            for index, offset in members:
                result.cases += 1
                low = gen_h(d.n, index, offset, Dyadic(0), Fraction(1))
                high = gen_h(d.n, index, offset + 1, Dyadic(0), Fraction(1))
                if dirbit:
                    ok = definitional_much_less(d, low, high, cap, primes)
                else:
                    ok = definitional_much_less(d, high, low, cap, primes)
                if not ok:
                    result.fail(
                        f"family {index} violates its block direction under descriptor {d_pos}"
                    )
                    return _finish(result, started)
    return _finish(result, started)


def check_class_absorption(
    descriptors: Sequence[OrderDescriptor],
    samples: int = 120,
    seed: int = 0,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Smaller classes are absorbed by larger ones: products of elements
    far below g stay far below g; multiplying by something far below does
    not move the class; a product with a unique largest factor lands in
    that factor's class."""
    started = time.perf_counter()
    result = CheckResult("class-absorption", True, 0)
    for d_pos, d in enumerate(descriptors):
        rng = random.Random((seed << 18) ^ d_pos)
        for _ in range(samples):
            g = random_element(rng, d.n)
            a = random_element(rng, d.n)
            b = random_element(rng, d.n)
            if g.is_identity() or a.is_identity() or b.is_identity():
                continue
            a_below = arch_compare(d, a, g, primes) == ArchOrder.MUCH_LESS
            b_below = arch_compare(d, b, g, primes) == ArchOrder.MUCH_LESS
            if a_below and b_below:
                result.cases += 1
                ab = multiply(a, b)
                if not ab.is_identity() and arch_compare(d, ab, g, primes) != ArchOrder.MUCH_LESS:
                    result.fail(f"product absorption failed under descriptor {d_pos}")
            if arch_compare(d, a, b, primes) == ArchOrder.MUCH_LESS:
                result.cases += 1
                if (
                    arch_compare(d, multiply(a, b), b, primes) != ArchOrder.EQUIVALENT
                    or arch_compare(d, multiply(b, a), b, primes) != ArchOrder.EQUIVALENT
                ):
                    result.fail(f"class stability failed under descriptor {d_pos}")
            factors = [random_element(rng, d.n) for _ in range(rng.randint(2, 4))]
            factors = [f for f in factors if not f.is_identity()]
            if len(factors) >= 2:
                verdicts = [
                    all(
                        arch_compare(d, other, f, primes) == ArchOrder.MUCH_LESS
                        for pos2, other in enumerate(factors)
                        if pos2 != pos
                    )
                    for pos, f in enumerate(factors)
                ]
                if any(verdicts):
                    result.cases += 1
                    top = factors[verdicts.index(True)]
                    product = identity(d.n)
                    for f in factors:
                        product = multiply(product, f)
                    if arch_compare(d, product, top, primes) != ArchOrder.EQUIVALENT:
                        result.fail(f"dominant-factor class failed under descriptor {d_pos}")
            if not result.passed:
                return _finish(result, started)
    return _finish(result, started)


def check_gamma_duality(
    descriptors: Sequence[OrderDescriptor],
    samples: int = 100,
    seed: int = 0,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Flipping every gamma bit negates the sign pointwise and leaves the
    Archimedean class of every element unchanged."""
    started = time.perf_counter()
    result = CheckResult("gamma-duality", True, 0)
    for d_pos, d in enumerate(descriptors):
        dual = OrderDescriptor(
            d.n, tuple(1 - bit for bit in d.gamma), d.blocks, d.directions, d.mixing
        )
        rng = random.Random((seed << 16) ^ d_pos)
        for _ in range(samples):
            g = random_element(rng, d.n)
            result.cases += 1
            if sign_of(dual, g, primes) != sign_of(d, g, primes).flipped():
                result.fail(f"dual sign failed under descriptor {d_pos}")
            if arch_class(dual, g, primes) != arch_class(d, g, primes):
                result.fail(f"dual class moved under descriptor {d_pos}")
            if not result.passed:
                return _finish(result, started)
    return _finish(result, started)


# ---------------------------------------------------------------------------
# enumeration and topology


def brute_force_descriptors(n: int, offset_bound: int) -> List[OrderDescriptor]:
    """Independent enumerator: generate partitions by exhausting label
    assignments, then attach every ordering, chain, offset vector, gamma,
    and direction string, filtering with the validator."""
    partitions = set()
    for labels in itertools.product(range(n), repeat=n):
        groups: Dict[int, List[int]] = {}
        for pos, label in enumerate(labels):
            groups.setdefault(label, []).append(pos + 1)
        partitions.add(frozenset(tuple(g) for g in groups.values()))
    out = []
    offsets = range(-offset_bound, offset_bound + 1)
    for partition in partitions:
        blocks_sorted = [tuple(sorted(block)) for block in partition]
        for ordering in itertools.permutations(blocks_sorted):
            chain_space = []
            for block in ordering:
                rest = list(block[1:])
                variants = []
                for perm in itertools.permutations(rest):
                    for offs in itertools.product(offsets, repeat=len(rest)):
                        variants.append(tuple(zip(perm, offs)))
                chain_space.append(variants or [()])
            for gamma in itertools.product((0, 1), repeat=n + 2):
                for directions in itertools.product((0, 1), repeat=len(ordering)):
                    for mixing in itertools.product(*chain_space):
                        d = OrderDescriptor(n, gamma, tuple(ordering), directions, tuple(mixing))
                        if validate(d) is None:
                            out.append(d)
    return out


def check_enumeration_counts(
    n: int = 2,
    bounds: Sequence[int] = (0, 1, 2),
    expected: Optional[Dict[int, int]] = None,
) -> CheckResult:
    """enumerate matches the brute-force enumerator exactly (as a set and
    without duplicates) and hits the pinned counts."""
    started = time.perf_counter()
    result = CheckResult("enumeration-counts", True, 0)
    for bound in bounds:
        stream = list(enumerate_descriptors(n, bound))
        result.cases += len(stream)
        if len(set(stream)) != len(stream):
            result.fail(f"duplicates at bound {bound}")
        bad = [d for d in stream if validate(d) is not None]
        if bad:
            result.fail(f"invalid descriptor emitted at bound {bound}")
        brute = brute_force_descriptors(n, bound)
        if set(stream) != set(brute) or len(brute) != len(stream):
            result.fail(f"stream disagrees with brute force at bound {bound}")
        if expected and bound in expected and len(stream) != expected[bound]:
            result.fail(
                f"count {len(stream)} at bound {bound}, expected {expected[bound]}"
            )
    counts = [len(list(enumerate_descriptors(n, bound))) for bound in bounds]
    if counts != sorted(counts):
        result.fail("counts not monotone in the offset bound")
    return _finish(result, started)


def distinguishing_elements(n: int, bound: int) -> List[GroupElement]:
    """Base coordinates, L, Z, and all cross quotients and products within
    |z| <= bound+1.

    Products are needed as well as quotients: when two families carry
    opposite signs, a dominance flip between their coordinates changes the
    sign of the product but not of the quotient (the gamma flip cancels
    the coefficient flip), and vice versa.
    """
    span = range(-(bound + 1), bound + 2)
    singles = [
        gen_h(n, i, z, Dyadic(0), Fraction(1)) for i in range(1, n + 1) for z in span
    ]
    elements = list(singles)
    elements.append(gen_lambda(n, Dyadic(1)))
    elements.append(gen_zeta(n, 1))
    for g, h in itertools.permutations(singles, 2):
        elements.append(multiply(invert(g), h))
    for g, h in itertools.combinations(singles, 2):
        elements.append(multiply(g, h))
    return elements


def check_descriptor_separation(
    n: int = 2,
    bound: int = 2,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Distinct enumerated descriptors disagree on at least one element of
    the distinguishing set."""
    started = time.perf_counter()
    result = CheckResult("descriptor-separation", True, 0)
    probes = distinguishing_elements(n, bound)
    vectors: Dict[Tuple[int, ...], int] = {}
    for d_pos, d in enumerate(enumerate_descriptors(n, bound)):
        result.cases += 1
        vector = tuple(int(sign_of(d, e, primes)) for e in probes)
        if vector in vectors:
            result.fail(
                f"descriptors {vectors[vector]} and {d_pos} share a sign vector"
            )
            break
        vectors[vector] = d_pos
    return _finish(result, started)


def check_isolation_certificates(
    fully_mixed: Sequence[OrderDescriptor],
    pool: Sequence[OrderDescriptor],
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """Each certificate is satisfied by its own descriptor and by nothing
    else in the pool."""
    started = time.perf_counter()
    result = CheckResult("isolation-certificates", True, 0)
    for d_pos, d in enumerate(fully_mixed):
        result.cases += 1
        certificate = isolation_certificate(d, primes)
        if not agrees(d, certificate, primes):
            result.fail(f"descriptor {d_pos} rejects its own certificate")
            break
        matches = sum(1 for other in pool if agrees(other, certificate, primes))
        own = 1 if d in pool else 0
        if matches != own:
            result.fail(
                f"certificate of descriptor {d_pos} matched {matches} pool entries"
            )
            break
    return _finish(result, started)


def check_limit_witnesses(
    bases: Sequence[OrderDescriptor],
    certificates_per_base: int = 50,
    witnesses: int = 5,
    seed: int = 0,
    z_bound: int = 4,
    primes: Optional[Sequence[int]] = None,
) -> CheckResult:
    """limit_witness yields the requested number of distinct, valid,
    strictly more mixed descriptors agreeing with each certificate."""
    started = time.perf_counter()
    result = CheckResult("limit-witnesses", True, 0)
    for d_pos, d in enumerate(bases):
        rng = random.Random((seed << 14) ^ d_pos)
        for _ in range(certificates_per_base):
            certificate = random_certificate(rng, d, size=6, z_bound=z_bound, primes=primes)
            result.cases += 1
            produced = limit_witness(d, certificate, witnesses, primes)
            if len(produced) != witnesses or len(set(produced)) != witnesses:
                result.fail(f"witness multiset wrong under base {d_pos}")
            for w in produced:
                if validate(w) is not None:
                    result.fail(f"invalid witness under base {d_pos}")
                elif not more_mixed(d, w):
                    result.fail(f"witness not more mixed under base {d_pos}")
                elif not agrees(w, certificate, primes):
                    result.fail(f"witness disagrees with certificate under base {d_pos}")
            if not result.passed:
                return _finish(result, started)
    return _finish(result, started)


def ok_descriptor(n: int, k: int, offsets: Sequence[int] = ()) -> OrderDescriptor:
    """The canonical positive-stratum descriptor with the given chain offsets."""
    if k == 1:
        return OrderDescriptor(
            n,
            (1,) * (n + 2),
            tuple((i,) for i in range(1, n + 1)),
            (1,) * n,
            ((),) * n,
        )
    blocks = (tuple(range(1, k + 1)),) + tuple((i,) for i in range(k + 1, n + 1))
    offsets = tuple(offsets) if offsets else (0,) * (k - 1)
    chain = tuple(zip(range(2, k + 1), offsets))
    mixing = (chain,) + ((),) * (n - k)
    return OrderDescriptor(n, (1,) * (n + 2), blocks, (1,) * len(blocks), mixing)


def check_rank_model(max_arity: int = 6) -> CheckResult:
    """The derivative model empties at stage n, ranks the canonical
    positive strata at n-k, and is monotone under more mixing."""
    started = time.perf_counter()
    result = CheckResult("rank-model", True, 0)
    for n in range(2, max_arity + 1):
        report = cb_model(n)
        result.cases += 1
        if report.space_rank != n:
            result.fail(f"space rank {report.space_rank} at arity {n}")
        for k in range(1, n + 1):
            result.cases += 1
            shape = shape_of(ok_descriptor(n, k))
            if report.shape_ranks[shape] != n - k:
                result.fail(f"stratum {k} ranked {report.shape_ranks[shape]} at arity {n}")
        ranks = dict(report.partition_ranks)

        def stub(blocks):
            return OrderDescriptor(
                n,
                (1,) * (n + 2),
                blocks,
                (1,) * len(blocks),
                tuple(tuple((i, 0) for i in block[1:]) for block in blocks),
            )

        for blocks_a, rank_a in ranks.items():
            for blocks_b, rank_b in ranks.items():
                if more_mixed(stub(blocks_a), stub(blocks_b)) and not rank_b < rank_a:
                    result.fail(f"rank not monotone under mixing at arity {n}")
                    return _finish(result, started)
    return _finish(result, started)


# ---------------------------------------------------------------------------
# full suite


def _sampled(pool: List[OrderDescriptor], count: int, rng: random.Random):
    if len(pool) <= count:
        return pool
    return rng.sample(pool, count)


def run_all_checks(
    n: int = 2,
    offset_bound: int = 2,
    samples: int = 200,
    seed: int = 0,
    primes: Optional[Sequence[int]] = None,
) -> List[CheckResult]:
    """The full property suite at configurable scale.

    Enumeration-driven checks run on descriptors of the requested arity
    (sampled when the space is large) plus a fixed arity-3 sample for the
    cross-family and interleaving properties when n == 2.
    """
    rng = random.Random(seed)
    pool = list(itertools.islice(enumerate_descriptors(n, offset_bound), 20000))
    sampled = _sampled(pool, max(8, samples // 8), rng)
    mixed = [d for d in pool if any(len(b) > 1 for b in d.blocks)]
    mixed_sample = _sampled(mixed, max(8, samples // 4), rng)
    fully_mixed = [d for d in pool if len(d.blocks) == 1]
    fully_sample = _sampled(fully_mixed, 12, rng)
    pool_small = list(
        itertools.islice(enumerate_descriptors(n, min(offset_bound + 2, 4)), 30000)
    )
    ok_bases = [ok_descriptor(n, k) for k in range(1, n)]

    results = [
        check_defining_relations(samples=max(samples, 200), seed=seed),
        check_group_axioms(samples=max(samples, 200), seed=seed, n=n),
        check_expression_roundtrip(samples=max(samples, 200), seed=seed, n=n),
        check_order_axioms(sampled, pairs=samples, seed=seed, primes=primes),
        check_slice_order_duals(samples=max(samples, 100), seed=seed, n=n, primes=primes),
        check_stratum_ladder(_sampled(pool, 24, rng), primes=primes),
        check_cross_family_separation(_sampled(pool, 24, rng), primes=primes),
        check_mixed_interleaving(mixed_sample, primes=primes),
        check_direction_coherence(mixed_sample, primes=primes),
        check_class_absorption(_sampled(pool, 6, rng), samples=samples // 2, seed=seed, primes=primes),
        check_gamma_duality(_sampled(pool, 8, rng), samples=samples // 2, seed=seed, primes=primes),
        check_enumeration_counts(n=2, bounds=(0, 1), expected={0: 160, 1: 224}),
        check_descriptor_separation(n=2, bound=min(offset_bound, 2), primes=primes),
        check_isolation_certificates(fully_sample, pool_small, primes=primes),
        check_limit_witnesses(
            ok_bases, certificates_per_base=max(4, samples // 40), seed=seed, primes=primes
        ),
        check_rank_model(max_arity=6),
    ]
    return results
