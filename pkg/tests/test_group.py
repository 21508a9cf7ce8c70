import random
from fractions import Fraction

import pytest

from ordspace import (
    ArityError,
    ArityMismatchError,
    Dyadic,
    GroupElement,
    IndexRangeError,
    PElement,
    PIndex,
    conj_p_by_lambda,
    conj_p_by_zeta,
    conjugate,
    first_primes,
    gen_h,
    gen_lambda,
    gen_zeta,
    identity,
    invert,
    multiply,
    power,
)
from ordspace.verify import random_element

PRIMES = (2, 3)


def h(i, z, x=0, r=1, n=2):
    return gen_h(n, i, z, Dyadic.from_value(Fraction(x)), Fraction(r))


def test_identity_examples():
    for n in (2, 6):
        e = identity(n)
        assert e.rho.is_identity() and e.a.is_zero() and e.b == 0
    with pytest.raises(ArityError):
        identity(1)


def test_generator_examples():
    g = h(1, 0)
    assert g.rho.items == ((PIndex(1, 0, Dyadic(0)), Fraction(1)),)
    assert h(1, 0, r=0) == identity(2)
    assert gen_lambda(2, Dyadic(0)) == identity(2)
    assert gen_zeta(2, 0) == identity(2)
    with pytest.raises(IndexRangeError):
        gen_h(2, 3, 0, Dyadic(0), 1)
    with pytest.raises(IndexRangeError):
        gen_h(2, 0, 0, Dyadic(0), 1)
    with pytest.raises(IndexRangeError):
        gen_h(2, 1, 0, Dyadic(3, 1), 1)  # x = 3/2 outside [0, 1)
    with pytest.raises(ArityError):
        gen_zeta(1, 1)


def test_conj_p_by_lambda_examples():
    rho = PElement.single(PIndex(1, 0, Dyadic(1, 1)), Fraction(1))
    moved = conj_p_by_lambda(rho, Dyadic(3, 2), PRIMES)
    assert moved == PElement.single(PIndex(1, 0, Dyadic(1, 2)), Fraction(2))

    rho0 = PElement.single(PIndex(1, 0, Dyadic(0)), Fraction(1))
    assert conj_p_by_lambda(rho0, Dyadic(0), PRIMES) == rho0
    assert conj_p_by_lambda(rho0, Dyadic(1), PRIMES) == PElement.single(
        PIndex(1, 0, Dyadic(0)), Fraction(2)
    )


def test_conj_p_by_zeta_examples():
    rho = PElement.single(PIndex(1, 0, Dyadic(0)), Fraction(1))
    assert conj_p_by_zeta(rho, 1) == PElement.single(PIndex(1, 1, Dyadic(0)), Fraction(1))
    assert conj_p_by_zeta(rho, 0) == rho
    deep = PElement.single(PIndex(2, -3, Dyadic(1, 1)), Fraction(5))
    assert conj_p_by_zeta(deep, -2) == PElement.single(
        PIndex(2, -5, Dyadic(1, 1)), Fraction(5)
    )


def test_p_conjugations_are_homomorphic():
    rng = random.Random(3)
    for _ in range(300):
        items = [
            (
                PIndex(rng.randint(1, 2), rng.randint(-3, 3), Dyadic(rng.randint(0, 7), 3)),
                Fraction(rng.randint(-5, 5), rng.randint(1, 5)),
            )
            for _ in range(rng.randint(0, 4))
        ]
        rho = PElement(items)
        tau = PElement(items[::-1])
        a1 = Dyadic(rng.randint(-12, 12), rng.randint(0, 3))
        a2 = Dyadic(rng.randint(-12, 12), rng.randint(0, 3))
        b1, b2 = rng.randint(-4, 4), rng.randint(-4, 4)
        lhs = conj_p_by_lambda(conj_p_by_lambda(rho, a1, PRIMES), a2, PRIMES)
        assert lhs == conj_p_by_lambda(rho, a1 + a2, PRIMES)
        assert conj_p_by_zeta(conj_p_by_zeta(rho, b1), b2) == conj_p_by_zeta(rho, b1 + b2)
        # automorphisms preserve the P product (pointwise sum)
        assert conj_p_by_lambda(rho + tau, a1, PRIMES) == conj_p_by_lambda(
            rho, a1, PRIMES
        ) + conj_p_by_lambda(tau, a1, PRIMES)


def test_multiply_examples():
    g = GroupElement(2, PElement.single(PIndex(1, 2, Dyadic(1, 1)), Fraction(3)), Dyadic(1, 1), -1)
    assert multiply(g, identity(2)) == g
    assert multiply(identity(2), g) == g

    got = multiply(gen_zeta(2, 1), h(1, 0))
    assert got == GroupElement(2, PElement.single(PIndex(1, -1, Dyadic(0)), Fraction(1)), Dyadic(0), 1)

    got = multiply(gen_zeta(2, 1), gen_lambda(2, Dyadic(1)))
    assert got == GroupElement(2, PElement(), Dyadic(2), 1)

    # derived via the defining relation L * h = (L h L^-1) * L, where
    # L h[1,0,0] L^-1 picks up floor(-1) = -1 and coefficient 2^-1
    got = multiply(gen_lambda(2, Dyadic(1)), h(1, 0))
    assert got == GroupElement(
        2, PElement.single(PIndex(1, 0, Dyadic(0)), Fraction(1, 2)), Dyadic(1), 0
    )


def test_multiply_arity_mismatch():
    with pytest.raises(ArityMismatchError):
        multiply(identity(2), identity(3))


def test_invert_examples():
    assert invert(identity(2)) == identity(2)
    assert invert(gen_zeta(2, 3)) == gen_zeta(2, -3)
    # frozen from the round-trip oracle: (h[1,0,0] * L)^-1 = h[1,0,0]^-2 * L^-1
    g = multiply(h(1, 0), gen_lambda(2, Dyadic(1)))
    gi = invert(g)
    assert gi == GroupElement(
        2, PElement.single(PIndex(1, 0, Dyadic(0)), Fraction(-2)), Dyadic(-1), 0
    )
    assert multiply(g, gi) == identity(2)
    assert multiply(gi, g) == identity(2)


def test_conjugate_examples():
    g = multiply(h(2, 1, r=5), gen_zeta(2, 2))
    assert conjugate(g, identity(2)) == g
    assert conjugate(h(1, 0), gen_zeta(2, 1)) == h(1, 1)
    assert conjugate(gen_h(2, 1, 0, Dyadic(1, 1), 1), gen_lambda(2, Dyadic(3, 2))) == gen_h(
        2, 1, 0, Dyadic(1, 2), 2
    )


def test_group_axioms_randomized():
    rng = random.Random(17)
    e = identity(2)
    for _ in range(400):
        g = random_element(rng, 2)
        k = random_element(rng, 2)
        m = random_element(rng, 2)
        assert multiply(multiply(g, k), m) == multiply(g, multiply(k, m))
        assert multiply(g, invert(g)) == e
        assert multiply(invert(g), g) == e
        assert multiply(e, g) == g


def test_group_axioms_with_custom_primes():
    primes = (5, 11)
    rng = random.Random(19)
    e = identity(2)
    for _ in range(150):
        g = random_element(rng, 2)
        k = random_element(rng, 2)
        m = random_element(rng, 2)
        lhs = multiply(multiply(g, k, primes), m, primes)
        assert lhs == multiply(g, multiply(k, m, primes), primes)
        assert multiply(g, invert(g, primes), primes) == e


def test_power():
    g = multiply(h(1, 0), gen_zeta(2, 1))
    acc = identity(2)
    for e in range(6):
        assert power(g, e) == acc
        acc = multiply(acc, g)
    assert power(g, -3) == invert(power(g, 3))
    assert g**2 == multiply(g, g)


def test_normal_form_uniqueness():
    g1 = multiply(h(1, 0), gen_lambda(2, Dyadic(1, 1)))
    g2 = multiply(h(1, 0), gen_lambda(2, Dyadic(1, 1)))
    assert g1 == g2 and hash(g1) == hash(g2)
    assert g1 != multiply(h(1, 0), gen_lambda(2, Dyadic(1, 2)))
    # zero coefficients are never stored
    rho = PElement([(PIndex(1, 0, Dyadic(0)), Fraction(1)), (PIndex(1, 0, Dyadic(0)), Fraction(-1))])
    assert rho.is_identity()


def test_first_primes():
    assert first_primes(6) == (2, 3, 5, 7, 11, 13)
