import itertools
import random

import pytest

from ordspace import (
    ArityError,
    ArityMismatchError,
    InvalidDescriptorError,
    MixShape,
    OrderDescriptor,
    Sign,
    descriptor_from_json_dict,
    descriptor_to_json_dict,
    dump_descriptor,
    enumerate_descriptors,
    enumerate_shapes,
    first_primes,
    linear_comb_sign,
    load_descriptor,
    more_mixed,
    rational_sign,
    reference_descriptor,
    set_partitions,
    shape_of,
    sign_of,
    validate,
)
from ordspace.verify import check_enumeration_counts, random_element


def test_validate_examples():
    ok = OrderDescriptor(2, (1, 1, 1, 1), ((1,), (2,)), (1, 1), ((), ()))
    assert validate(ok) is None

    not_partition = OrderDescriptor(2, (1, 1, 1, 1), ((1,), (1, 2)), (1, 1), ((), ()))
    assert "partition" in validate(not_partition)

    least_listed = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((1, 0),),))
    assert "least index" in validate(least_listed)


def test_validate_more_clauses():
    base = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((2, 0),),))
    assert validate(base) is None
    assert validate(OrderDescriptor(1, (1, 1, 1), ((1,),), (1,), ((),))) is not None
    assert validate(OrderDescriptor(2, (1, 1, 1), ((1,), (2,)), (1, 1), ((), ()))) is not None
    assert validate(OrderDescriptor(2, (1, 1, 1, 2), ((1,), (2,)), (1, 1), ((), ()))) is not None
    assert validate(OrderDescriptor(2, (1, 1, 1, 1), ((2, 1),), (1,), (((2, 0),),))) is not None
    assert validate(OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1, 1), (((2, 0),),))) is not None
    assert validate(OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), ((),))) is not None
    assert validate(OrderDescriptor(3, (1,) * 5, ((1, 2, 3),), (1,), (((2, 0), (2, 1)),))) is not None
    # shapes validate through the same clauses
    assert validate(MixShape(2, (1, 1, 1, 1), ((1, 2),), (1,), ((2,),))) is None
    assert validate(MixShape(2, (1, 1, 1, 1), ((1, 2),), (1,), ((1,),))) is not None


def test_reference_descriptor_structure():
    d2 = reference_descriptor(2)
    assert d2.gamma == (1, 1, 1, 1)
    assert d2.blocks == ((2,), (1,))
    assert d2.directions == (0, 0)
    d3 = reference_descriptor(3)
    assert d3.blocks == ((3,), (2,), (1,))
    assert d3.directions == (0, 0, 0)
    for n in range(2, 7):
        assert validate(reference_descriptor(n)) is None
    with pytest.raises(ArityError):
        reference_descriptor(1)


def _layered_recipe_sign(g, primes):
    """Independent implementation of the built-in layered order: the shift
    exponent decides, then the scaling exponent, then the P part read
    lexicographically with family 1 most significant and, within a family,
    the lowest stratum deciding by the prime-power sum."""
    if g.b:
        return rational_sign(g.b)
    if not g.a.is_zero():
        return g.a.sign
    if g.rho.is_identity():
        return Sign.ZERO
    family = min(idx.i for idx in g.rho.support())
    stratum = min(idx.z for idx in g.rho.support() if idx.i == family)
    terms = [
        (coeff, idx.x)
        for idx, coeff in g.rho.items
        if idx.i == family and idx.z == stratum
    ]
    return linear_comb_sign(primes[family - 1], terms)


@pytest.mark.parametrize("n", [2, 3])
def test_reference_descriptor_matches_layered_recipe(n):
    d = reference_descriptor(n)
    primes = first_primes(n)
    rng = random.Random(29 + n)
    for _ in range(500):
        g = random_element(rng, n)
        assert sign_of(d, g) == _layered_recipe_sign(g, primes)


def test_enumeration_counts_match_brute_force():
    result = check_enumeration_counts(n=2, bounds=(0, 1, 2), expected={0: 160, 1: 224})
    assert result.passed, result.failures


def test_enumeration_deterministic_and_valid():
    first = list(enumerate_descriptors(2, 1))
    second = list(enumerate_descriptors(2, 1))
    assert first == second
    assert len(set(first)) == len(first) == 224
    assert all(validate(d) is None for d in first)
    with pytest.raises(ArityError):
        next(enumerate_descriptors(1, 0))
    with pytest.raises(ValueError):
        next(enumerate_descriptors(2, -1))


def test_more_mixed_examples():
    split = OrderDescriptor(2, (1, 1, 1, 1), ((1,), (2,)), (1, 1), ((), ()))
    merged = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((2, 0),),))
    assert more_mixed(split, merged)
    assert not more_mixed(merged, split)
    assert not more_mixed(split, split)
    a = OrderDescriptor(3, (1,) * 5, ((1, 2), (3,)), (1, 1), (((2, 0),), ()))
    b = OrderDescriptor(3, (1,) * 5, ((1,), (2, 3)), (1, 1), ((), ((3, 0),)))
    assert not more_mixed(a, b) and not more_mixed(b, a)
    with pytest.raises(ArityMismatchError):
        more_mixed(split, OrderDescriptor(3, (1,) * 5, ((1, 2, 3),), (1,), (((2, 0), (3, 0)),)))


def test_more_mixed_is_strict_partial_order():
    pool = list(enumerate_descriptors(2, 0))[:40] + list(
        itertools.islice(enumerate_descriptors(3, 0), 60)
    )
    by_arity = {2: [], 3: []}
    for d in pool:
        by_arity[d.n].append(d)
    for group in by_arity.values():
        for d in group:
            assert not more_mixed(d, d)
        for a, b, c in itertools.islice(itertools.permutations(group, 3), 4000):
            if more_mixed(a, b) and more_mixed(b, c):
                assert more_mixed(a, c)


def test_shape_of_examples():
    merged = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((2, 7),),))
    shape = shape_of(merged)
    assert shape.mixing == ((2,),)
    ref = reference_descriptor(2)
    assert shape_of(ref).mixing == ((), ())
    other = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((2, -4),),))
    assert shape_of(other) == shape


def test_shape_enumeration_matches_descriptor_shapes():
    shapes = list(enumerate_shapes(2))
    assert len(shapes) == len(set(shapes)) == 160
    from_descriptors = {shape_of(d) for d in enumerate_descriptors(2, 1)}
    assert from_descriptors == set(shapes)


def test_set_partitions_bell_numbers():
    for n, bell in [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)]:
        parts = list(set_partitions(n))
        assert len(parts) == bell
        assert len(set(parts)) == bell
        for blocks in parts:
            assert sorted(i for block in blocks for i in block) == list(range(1, n + 1))


def test_json_round_trip():
    merged = OrderDescriptor(3, (1, 0, 1, 1, 0), ((1, 3), (2,)), (0, 1), (((3, -2),), ()))
    payload = descriptor_to_json_dict(merged)
    assert payload["mixing"] == {"0": [[3, -2]]}
    assert descriptor_from_json_dict(payload) == merged
    assert load_descriptor(dump_descriptor(merged)) == merged
    for d in itertools.islice(enumerate_descriptors(2, 1), 0, 224, 17):
        assert load_descriptor(dump_descriptor(d)) == d


def test_json_rejects_bad_input():
    good = descriptor_to_json_dict(reference_descriptor(2))
    with_unknown = dict(good, extra=1)
    with pytest.raises(InvalidDescriptorError):
        descriptor_from_json_dict(with_unknown)
    missing = {k: v for k, v in good.items() if k != "gamma"}
    with pytest.raises(InvalidDescriptorError):
        descriptor_from_json_dict(missing)
    bad_mixing = dict(good, mixing={"7": [[1, 0]]})
    with pytest.raises(InvalidDescriptorError):
        descriptor_from_json_dict(bad_mixing)
    not_partition = dict(good, blocks=[[1], [1, 2]])
    with pytest.raises(InvalidDescriptorError):
        descriptor_from_json_dict(not_partition)
    with pytest.raises(InvalidDescriptorError):
        descriptor_from_json_dict([1, 2])
