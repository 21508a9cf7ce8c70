import math
import random
from fractions import Fraction

import pytest

from ordspace import (
    Dyadic,
    PrecisionExceededError,
    Sign,
    dyadic_floor_split,
    linear_comb_sign,
    prime_power,
)


def test_floor_split_examples():
    assert dyadic_floor_split(Dyadic(5, 2)) == (1, Dyadic(1, 2))
    assert dyadic_floor_split(Dyadic(-3, 3)) == (-1, Dyadic(5, 3))
    assert dyadic_floor_split(Dyadic(0)) == (0, Dyadic(0))


def test_floor_split_recombines():
    rng = random.Random(5)
    one = Dyadic(1)
    for _ in range(2000):
        k = rng.randint(0, 10)
        d = Dyadic(rng.randint(-1 << 14, 1 << 14), k)
        m, f = dyadic_floor_split(d)
        assert Dyadic(m) + f == d
        assert f.mantissa >= 0 and f < one


def test_prime_power_examples():
    assert prime_power(2, 3) == Fraction(8)
    assert prime_power(2, -1) == Fraction(1, 2)
    assert prime_power(3, 0) == Fraction(1)
    with pytest.raises(ValueError):
        prime_power(1, 3)


def test_dyadic_canonical_form():
    assert Dyadic(4, 2) == Dyadic(1, 0)
    assert Dyadic(6, 1) == Dyadic(3, 0)
    assert Dyadic(0, 7) == Dyadic(0, 0)
    # even integers are canonical at exponent 0 (needed for values like 2)
    two = Dyadic(2)
    assert (two.mantissa, two.exponent) == (2, 0)
    assert Dyadic(8, 2) == Dyadic(2)
    with pytest.raises(ValueError):
        Dyadic(1, -1)


def test_dyadic_text_round_trip():
    for text in ["0", "5", "-3", "1/2", "-7/8", "13/4096"]:
        assert str(Dyadic.parse(text)) == text
    assert Dyadic.parse("6/4") == Dyadic(3, 1)
    with pytest.raises(ValueError):
        Dyadic.parse("1/3")
    with pytest.raises(ValueError):
        Dyadic.parse("x")


def test_dyadic_arithmetic_and_order():
    a = Dyadic(3, 2)  # 3/4
    b = Dyadic(1, 1)  # 1/2
    assert a + b == Dyadic(5, 2)
    assert a - b == Dyadic(1, 2)
    assert -a == Dyadic(-3, 2)
    assert a.mul_pow2(2) == Dyadic(3)
    assert a.mul_pow2(-1) == Dyadic(3, 3)
    assert b < a < Dyadic(1)
    assert sorted([a, b, Dyadic(-1), Dyadic(0)]) == [Dyadic(-1), Dyadic(0), b, a]
    assert a.as_fraction() == Fraction(3, 4)
    assert Dyadic.from_fraction(Fraction(9, 8)) == Dyadic(9, 3)
    with pytest.raises(ValueError):
        Dyadic.from_fraction(Fraction(1, 3))


def test_sign_trivial_cases():
    assert linear_comb_sign(2, [(1, Dyadic(1, 1)), (-1, Dyadic(0))]) == Sign.POSITIVE
    assert linear_comb_sign(2, [(Fraction(5), Dyadic(1, 2)), (Fraction(-5), Dyadic(1, 2))]) == Sign.ZERO
    assert linear_comb_sign(7, []) == Sign.ZERO
    assert linear_comb_sign(3, [(Fraction(-2, 7), Dyadic(0))]) == Sign.NEGATIVE


def test_sign_root_comparison_against_directed_rounding():
    # Independent oracle: 128-bit directed rounding of q = 2**(1/4) by two
    # integer square roots; 3*q > 2*q**3 exactly when 3*R_hi... both bounds
    # of the enclosure of 3*q - 2*q**3 sit on the same side of zero.
    bits = 128
    lo = math.isqrt(math.isqrt(2 << (4 * bits)))
    hi = lo + 1
    # value * 2**(3*bits), lower and upper bounds
    low_bound = 3 * lo * (1 << (2 * bits)) - 2 * hi**3
    high_bound = 3 * hi * (1 << (2 * bits)) - 2 * lo**3
    assert low_bound > 0 and high_bound > 0  # oracle: strictly positive
    assert linear_comb_sign(2, [(3, Dyadic(1, 2)), (-2, Dyadic(3, 2))]) == Sign.POSITIVE
    assert linear_comb_sign(2, [(2, Dyadic(3, 2)), (-3, Dyadic(1, 2))]) == Sign.NEGATIVE


def test_sign_exact_cancellation_needs_no_numerics():
    terms = [
        (Fraction(1, 3), Dyadic(1, 2)),
        (Fraction(5, 3), Dyadic(1, 2)),
        (Fraction(-2), Dyadic(1, 2)),
        (Fraction(7), Dyadic(3, 3)),
        (Fraction(-7), Dyadic(3, 3)),
    ]
    assert linear_comb_sign(2, terms, max_bits=64) == Sign.ZERO


def test_sign_invariances():
    rng = random.Random(11)
    for _ in range(300):
        terms = []
        for _ in range(rng.randint(2, 5)):
            k = rng.randint(0, 5)
            x = Dyadic(rng.randint(0, (1 << k) - 1), k)
            terms.append((Fraction(rng.randint(-8, 8), rng.randint(1, 8)), x))
        p = rng.choice([2, 3, 5])
        base = linear_comb_sign(p, terms)
        shuffled = terms[:]
        rng.shuffle(shuffled)
        assert linear_comb_sign(p, shuffled) == base
        # splitting one term leaves the sign unchanged
        r, x = terms[0]
        s = Fraction(rng.randint(-3, 3), rng.randint(1, 4))
        split = [(r - s, x), (s, x)] + terms[1:]
        assert linear_comb_sign(p, split) == base
        # raising the ceiling changes nothing
        assert linear_comb_sign(p, terms, max_bits=1 << 16) == base
        # scaling by a nonzero rational multiplies the sign
        lam = Fraction(rng.choice([-3, -1, 2, 5]), rng.randint(1, 4))
        scaled = [(lam * r, x) for r, x in terms]
        expected = Sign(int(base) * (1 if lam > 0 else -1))
        assert linear_comb_sign(p, scaled) == expected


def test_sign_against_float_evaluation():
    rng = random.Random(13)
    for _ in range(500):
        terms = []
        for _ in range(rng.randint(1, 6)):
            k = rng.randint(0, 6)
            x = Dyadic(rng.randint(0, (1 << k) - 1), k)
            terms.append((Fraction(rng.randint(-9, 9), rng.randint(1, 9)), x))
        p = rng.choice([2, 3, 5, 7])
        numeric = sum(
            float(r) * p ** (x.mantissa / (1 << x.exponent)) for r, x in terms
        )
        if abs(numeric) < 1e-7:
            continue
        assert int(linear_comb_sign(p, terms)) == (1 if numeric > 0 else -1)


def test_sign_rejects_bad_exponents():
    with pytest.raises(ValueError):
        linear_comb_sign(2, [(1, Dyadic(5, 2))])
    with pytest.raises(ValueError):
        linear_comb_sign(2, [(1, Dyadic(-1, 2))])
    with pytest.raises(ValueError):
        linear_comb_sign(1, [(1, Dyadic(0))])


def test_precision_ceiling_flags_composite_base():
    # 4**(1/2) - 2 is exactly zero but never cancels symbolically, so the
    # enclosure can never exclude zero: the ceiling is the only guard.
    with pytest.raises(PrecisionExceededError):
        linear_comb_sign(4, [(1, Dyadic(1, 1)), (-2, Dyadic(0))], max_bits=512)


def test_sign_flipped():
    assert Sign.POSITIVE.flipped() == Sign.NEGATIVE
    assert Sign.ZERO.flipped() == Sign.ZERO
