"""The order oracle: sign, comparison, and Archimedean classification of
group elements under the order named by a descriptor.

Signs cascade through the semidirect structure: the Z exponent decides
first, then the L exponent, and a pure P element is decided by its
dominant coordinate.  Dominance is the lexicographic order of IndexKey =
(block position, level, chain position) over the coordinate set
{1..n} x Z, where the level of stratum z in a chain slot with offset u
is z - u for an ascending block and u - z for a descending one.  The
sign of the dominant slice is the exact sign of the corresponding sum
of prime powers, flipped when the family's gamma bit is 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, NamedTuple, Optional, Sequence

from .descriptor import OrderDescriptor, validate
from .errors import (
    ArityMismatchError,
    IndexRangeError,
    InvalidDescriptorError,
)
from .exact import DEFAULT_PRECISION_CEILING, Sign, linear_comb_sign, rational_sign
from .group import GroupElement, first_primes, invert, multiply

__all__ = [
    "IndexKey",
    "ArchClass",
    "ClassKind",
    "Comparison",
    "ArchOrder",
    "index_key",
    "sign_of",
    "compare",
    "abs_element",
    "arch_class",
    "arch_compare",
]


class IndexKey(NamedTuple):
    """Lexicographic position of one coordinate (i, z) in the order named
    by a descriptor; bigger keys dominate."""

    block_position: int
    level: int
    chain_position: int


class ClassKind(enum.IntEnum):
    IDENTITY = 0
    P = 1
    LAMBDA = 2
    ZETA = 3


@dataclass(frozen=True)
class ArchClass:
    """Archimedean class tag: the identity, one P coordinate (i, z), the
    scaling generator's class, or the shift generator's class."""

    kind: ClassKind
    i: Optional[int] = None
    z: Optional[int] = None

    def __str__(self):
        if self.kind == ClassKind.IDENTITY:
            return "identity"
        if self.kind == ClassKind.P:
            return f"h[{self.i},{self.z}]"
        if self.kind == ClassKind.LAMBDA:
            return "L"
        return "Z"


class Comparison(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"


class ArchOrder(enum.Enum):
    MUCH_LESS = "much-less"
    EQUIVALENT = "equivalent"
    MUCH_GREATER = "much-greater"


class _Slot(NamedTuple):
    block_position: int
    chain_position: int
    offset: int
    ascending: bool


@lru_cache(maxsize=4096)
def _slots(d: OrderDescriptor) -> Dict[int, _Slot]:
    """Per-family placement data, validated once per descriptor."""
    problem = validate(d)
    if problem is not None:
        raise InvalidDescriptorError(problem)
    table: Dict[int, _Slot] = {}
    for position, (block, direction, chain) in enumerate(
        zip(d.blocks, d.directions, d.mixing)
    ):
        ascending = bool(direction)
        table[block[0]] = _Slot(position, 0, 0, ascending)
        for slot, (index, offset) in enumerate(chain, start=1):
            table[index] = _Slot(position, slot, offset, ascending)
    return table


def index_key(d: OrderDescriptor, i: int, z: int) -> IndexKey:
    """Key of coordinate (i, z); keys compare lexicographically."""
    slots = _slots(d)
    if i not in slots:
        raise IndexRangeError(f"family index {i} outside 1..{d.n}")
    slot = slots[i]
    level = z - slot.offset if slot.ascending else slot.offset - z
    return IndexKey(slot.block_position, level, slot.chain_position)


def _gamma_adjust(sign: Sign, bit: int) -> Sign:
    return sign if bit else sign.flipped()


def sign_of(
    d: OrderDescriptor,
    g: GroupElement,
    primes: Optional[Sequence[int]] = None,
    max_bits: int = DEFAULT_PRECISION_CEILING,
) -> Sign:
    """Sign of g under the order named by d; zero exactly at the identity."""
    slots = _slots(d)
    if d.n != g.n:
        raise ArityMismatchError(f"arity mismatch: descriptor {d.n}, element {g.n}")
    if g.b != 0:
        return _gamma_adjust(rational_sign(g.b), d.gamma[d.n + 1])
    if not g.a.is_zero():
        return _gamma_adjust(g.a.sign, d.gamma[d.n])
    if g.rho.is_identity():
        return Sign.ZERO

    best_key = None
    best_family = best_stratum = 0
    for idx, _ in g.rho.items:
        slot = slots[idx.i]
        level = idx.z - slot.offset if slot.ascending else slot.offset - idx.z
        key = (slot.block_position, level, slot.chain_position)
        if best_key is None or key > best_key:
            best_key = key
            best_family, best_stratum = idx.i, idx.z

    slice_terms = [
        (coeff, idx.x)
        for idx, coeff in g.rho.items
        if idx.i == best_family and idx.z == best_stratum
    ]
    if len(slice_terms) == 1:
        # A single coordinate: p**x > 0 carries the coefficient's sign.
        dominant = rational_sign(slice_terms[0][0])
    else:
        ps = first_primes(d.n) if primes is None else primes
        dominant = linear_comb_sign(ps[best_family - 1], slice_terms, max_bits=max_bits)
    return _gamma_adjust(dominant, d.gamma[best_family - 1])


def compare(
    d: OrderDescriptor,
    g: GroupElement,
    h: GroupElement,
    primes: Optional[Sequence[int]] = None,
    max_bits: int = DEFAULT_PRECISION_CEILING,
) -> Comparison:
    """Order verdict for g vs h: g < h exactly when g^-1 h is positive."""
    sign = sign_of(d, multiply(invert(g, primes), h, primes), primes, max_bits)
    if sign == Sign.POSITIVE:
        return Comparison.LESS
    if sign == Sign.NEGATIVE:
        return Comparison.GREATER
    return Comparison.EQUAL


def abs_element(
    d: OrderDescriptor,
    g: GroupElement,
    primes: Optional[Sequence[int]] = None,
    max_bits: int = DEFAULT_PRECISION_CEILING,
) -> GroupElement:
    """max(g, g^-1) under d; order-dependent, so computed on demand."""
    if sign_of(d, g, primes, max_bits) == Sign.NEGATIVE:
        return invert(g, primes)
    return g


def arch_class(
    d: OrderDescriptor,
    g: GroupElement,
    primes: Optional[Sequence[int]] = None,
) -> ArchClass:
    """Archimedean class of g: the Z class if b is nonzero, else the L
    class if a is nonzero, else the class of the dominant P coordinate."""
    slots = _slots(d)
    if d.n != g.n:
        raise ArityMismatchError(f"arity mismatch: descriptor {d.n}, element {g.n}")
    if g.b != 0:
        return ArchClass(ClassKind.ZETA)
    if not g.a.is_zero():
        return ArchClass(ClassKind.LAMBDA)
    if g.rho.is_identity():
        return ArchClass(ClassKind.IDENTITY)
    best = max(
        (index_key(d, idx.i, idx.z), idx.i, idx.z) for idx, _ in g.rho.items
    )
    return ArchClass(ClassKind.P, best[1], best[2])


def _class_rank(d: OrderDescriptor, cls: ArchClass):
    if cls.kind == ClassKind.P:
        return (int(cls.kind), index_key(d, cls.i, cls.z))
    return (int(cls.kind), IndexKey(0, 0, 0))


def arch_compare(
    d: OrderDescriptor,
    g: GroupElement,
    h: GroupElement,
    primes: Optional[Sequence[int]] = None,
) -> ArchOrder:
    """Archimedean verdict for g vs h under the total class order
    identity < every P coordinate < L < Z, P coordinates by key."""
    rank_g = _class_rank(d, arch_class(d, g, primes))
    rank_h = _class_rank(d, arch_class(d, h, primes))
    if rank_g < rank_h:
        return ArchOrder.MUCH_LESS
    if rank_g > rank_h:
        return ArchOrder.MUCH_GREATER
    return ArchOrder.EQUIVALENT
