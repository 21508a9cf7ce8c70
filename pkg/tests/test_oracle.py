import itertools
import random
from fractions import Fraction

import pytest

from ordspace import (
    ArchClass,
    ArchOrder,
    ArityMismatchError,
    ClassKind,
    Comparison,
    Dyadic,
    GroupElement,
    InvalidDescriptorError,
    OrderDescriptor,
    PElement,
    PIndex,
    Sign,
    arch_class,
    arch_compare,
    compare,
    enumerate_descriptors,
    gen_h,
    gen_lambda,
    gen_zeta,
    identity,
    index_key,
    invert,
    multiply,
    sign_of,
)
from ordspace.verify import _chain_walk, random_element

SPLIT = OrderDescriptor(2, (1, 1, 1, 1), ((1,), (2,)), (1, 1), ((), ()))
MIXED = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((2, 0),),))


def h(i, z, x=Dyadic(0), r=1, n=2):
    return gen_h(n, i, z, x, Fraction(r))


def test_index_key_mixed_positive_chain():
    keys = [index_key(MIXED, *iz) for iz in [(1, 0), (2, 0), (1, 1), (2, 1)]]
    assert keys == sorted(keys)
    assert len(set(keys)) == 4


def test_index_key_mixed_negative_chain():
    down = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (0,), (((2, 0),),))
    keys = [index_key(down, *iz) for iz in [(1, 0), (2, 0), (1, -1), (2, -1)]]
    assert keys == sorted(keys)


def test_index_key_block_position_dominates():
    for z1, z2 in itertools.product(range(-6, 7), repeat=2):
        assert index_key(SPLIT, 1, z1) < index_key(SPLIT, 2, z2)
    with pytest.raises(Exception):
        index_key(SPLIT, 3, 0)


def test_sign_cascade_examples():
    assert sign_of(SPLIT, gen_zeta(2, -3)) == Sign.NEGATIVE
    assert sign_of(SPLIT, multiply(h(1, 0), gen_zeta(2, 2))) == Sign.POSITIVE
    assert sign_of(SPLIT, gen_lambda(2, Dyadic(-1, 2))) == Sign.NEGATIVE
    assert sign_of(SPLIT, identity(2)) == Sign.ZERO


def test_sign_dominant_coordinate_examples():
    g = multiply(h(2, -7), h(1, 5, r=-9))
    # cross-check with the literal chain walk over a wide window
    walk = _chain_walk(SPLIT, -20, 20)
    positions = {iz: pos for pos, iz in enumerate(walk)}
    assert positions[(2, -7)] > positions[(1, 5)]
    assert sign_of(SPLIT, g) == Sign.POSITIVE

    root_two_minus_two = multiply(h(1, 0, r=-2), h(1, 0, x=Dyadic(1, 1)))
    assert sign_of(SPLIT, root_two_minus_two) == Sign.NEGATIVE

    quotient = multiply(invert(h(2, 3)), h(1, 4))
    assert index_key(MIXED, 1, 4) > index_key(MIXED, 2, 3)
    assert sign_of(MIXED, quotient) == Sign.POSITIVE


def test_sign_errors():
    bad = OrderDescriptor(2, (1, 1, 1, 1), ((1,), (1, 2)), (1, 1), ((), ()))
    with pytest.raises(InvalidDescriptorError):
        sign_of(bad, identity(2))
    with pytest.raises(ArityMismatchError):
        sign_of(SPLIT, identity(3))


def test_compare_examples():
    g = multiply(h(1, 2, r=3), gen_zeta(2, -1))
    assert compare(SPLIT, g, g) == Comparison.EQUAL
    assert compare(MIXED, h(2, 0), h(1, 1)) == Comparison.LESS
    assert compare(SPLIT, gen_lambda(2, Dyadic(1)), gen_zeta(2, 1)) == Comparison.LESS
    assert compare(SPLIT, gen_zeta(2, 1), gen_lambda(2, Dyadic(1))) == Comparison.GREATER


def test_arch_class_examples():
    assert arch_class(SPLIT, identity(2)) == ArchClass(ClassKind.IDENTITY)
    g = multiply(h(1, 0), gen_lambda(2, Dyadic(1, 1)))
    assert arch_class(SPLIT, g) == ArchClass(ClassKind.LAMBDA)
    tall = multiply(h(1, 2, r=3), gen_h(2, 1, 7, Dyadic(1, 1), 5))
    assert arch_class(SPLIT, tall) == ArchClass(ClassKind.P, 1, 7)
    assert arch_class(SPLIT, gen_zeta(2, -2)) == ArchClass(ClassKind.ZETA)
    assert str(ArchClass(ClassKind.P, 1, 7)) == "h[1,7]"


def test_arch_compare_examples():
    assert arch_compare(SPLIT, gen_lambda(2, Dyadic(5)), gen_zeta(2, -1)) == ArchOrder.MUCH_LESS
    same_slice = arch_compare(SPLIT, h(1, 0), gen_h(2, 1, 0, Dyadic(1, 1), 7))
    assert same_slice == ArchOrder.EQUIVALENT
    assert arch_compare(SPLIT, h(1, 0), h(2, 0)) == ArchOrder.MUCH_LESS
    assert arch_compare(SPLIT, h(2, 0), h(1, 0)) == ArchOrder.MUCH_GREATER
    assert arch_compare(SPLIT, identity(2), h(1, 0)) == ArchOrder.MUCH_LESS


def test_key_order_matches_chain_walk_exhaustively():
    # Every mixed descriptor with small offsets, both arities: the key
    # order must reproduce the literal chain walk over a bounded window.
    pools = [
        [d for d in enumerate_descriptors(2, 2) if any(len(b) > 1 for b in d.blocks)],
        [d for d in itertools.islice(enumerate_descriptors(3, 1), 6000) if any(len(b) > 1 for b in d.blocks)],
    ]
    rng = random.Random(31)
    for pool in pools:
        for d in rng.sample(pool, min(len(pool), 120)):
            walk = _chain_walk(d, -4, 4)
            resorted = sorted(walk, key=lambda iz: index_key(d, iz[0], iz[1]))
            assert resorted == walk, d


def test_gamma_duality_pointwise():
    rng = random.Random(37)
    for d in [SPLIT, MIXED]:
        dual = OrderDescriptor(d.n, tuple(1 - b for b in d.gamma), d.blocks, d.directions, d.mixing)
        for _ in range(200):
            g = random_element(rng, 2)
            assert sign_of(dual, g) == sign_of(d, g).flipped()
            assert arch_class(dual, g) == arch_class(d, g)


def test_multi_coordinate_slice_uses_the_sign_engine():
    # two coordinates at the dominant (i, z) with an irrational balance
    rho = PElement(
        [
            (PIndex(2, 1, Dyadic(0)), Fraction(-5)),
            (PIndex(2, 1, Dyadic(1, 1)), Fraction(3)),  # 3*sqrt(3) ~ 5.196 > 5
            (PIndex(1, 6, Dyadic(0)), Fraction(-99)),
        ]
    )
    g = GroupElement(2, rho, Dyadic(0), 0)
    assert sign_of(SPLIT, g) == Sign.POSITIVE
    flipped = OrderDescriptor(2, (1, 0, 1, 1), SPLIT.blocks, SPLIT.directions, SPLIT.mixing)
    assert sign_of(flipped, g) == Sign.NEGATIVE
