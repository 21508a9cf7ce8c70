"""Topology of the space of orders: sign certificates as basic open sets,
isolation certificates for fully mixed orders, more-mixed limit witnesses,
the canonical positive strata O_k, and the finite rank model.

A certificate is a finite list of (element, required sign) pairs; the
orders satisfying it form a basic open neighborhood.  A fully mixed
order (single block) is pinned by a finite chain of sign constraints;
an order with at least two blocks is approximated by merging its two
smallest blocks at ever more extreme offsets, which leaves the dominant
coordinate of any fixed bounded element unchanged.

The rank model runs the isolated-point derivative on mixing shapes:
a shape survives a stage while some strictly more mixed shape is still
present.  Only the partition matters for that relation, so the model is
computed exactly on the partition quotient and every shape inherits the
rank of its partition.
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .descriptor import (
    MixShape,
    OrderDescriptor,
    enumerate_shapes,
    require_valid,
    set_partitions,
)
from .errors import (
    ArityError,
    ArityMismatchError,
    IndexRangeError,
    NotFullyMixedError,
    SingleBlockError,
    WitnessExhaustionError,
)
from .exact import DEFAULT_PRECISION_CEILING, Dyadic, Sign
from .group import GroupElement, gen_h, gen_lambda, gen_zeta, invert, multiply
from .oracle import sign_of

__all__ = [
    "Certificate",
    "RankReport",
    "ShapeRanks",
    "agrees",
    "isolation_certificate",
    "limit_witness",
    "in_ok",
    "cb_model",
    "certificate_to_json",
    "certificate_from_json",
]


@dataclass(frozen=True)
class Certificate:
    """Finite set of signed elements; the orders assigning each element
    its recorded sign form a basic open set."""

    entries: Tuple[Tuple[GroupElement, Sign], ...]

    def __post_init__(self):
        seen = set()
        for element, sign in self.entries:
            if sign == Sign.ZERO:
                raise ValueError("certificate signs must be nonzero")
            if element in seen:
                raise ValueError("certificate elements must be distinct")
            seen.add(element)

    def __len__(self):
        return len(self.entries)


def agrees(
    d: OrderDescriptor,
    c: Certificate,
    primes: Optional[Sequence[int]] = None,
    max_bits: int = DEFAULT_PRECISION_CEILING,
) -> bool:
    """True when d assigns every certificate element its recorded sign."""
    for element, sign in c.entries:
        if d.n != element.n:
            raise ArityMismatchError(
                f"arity mismatch: descriptor {d.n}, element {element.n}"
            )
        if sign_of(d, element, primes, max_bits) != sign:
            return False
    return True


def _signed_generator(n: int, i: int, z: int, positive: bool) -> GroupElement:
    # |h[i,z,0]| under a given gamma bit: the generator itself when the
    # family is positive, its inverse (coefficient -1) when negative.
    return gen_h(n, i, z, Dyadic(0), Fraction(1 if positive else -1))


def isolation_certificate(
    d: OrderDescriptor, primes: Optional[Sequence[int]] = None
) -> Certificate:
    """A certificate satisfied by d and designed to pin it uniquely.

    Requires a fully mixed descriptor (a single block).  The certificate
    records the sign of Z and of every h[i,0,0], then forces the block's
    interleaving chain through quotients of absolute values:

        1 < |h[i0,0,0]| < |h[i1,u1,0]| < ... < |h[i0,+-1,0]| < |L|

    where the closing stratum is +1 for an ascending block and -1 for a
    descending one.  Consecutive chain coordinates are never Archimedean
    equivalent in any order, so these finitely many inequalities pin the
    whole interleaving; the final quotient also fixes the sign of L.
    """
    require_valid(d)
    if len(d.blocks) != 1:
        raise NotFullyMixedError(
            f"isolation requires a single block, got {len(d.blocks)}"
        )
    n = d.n
    block = d.blocks[0]
    chain = d.mixing[0]
    ascending = bool(d.directions[0])

    entries: List[Tuple[GroupElement, Sign]] = []
    entries.append(
        (gen_zeta(n, 1), Sign.POSITIVE if d.gamma[n + 1] else Sign.NEGATIVE)
    )
    for i in block:
        entries.append(
            (
                gen_h(n, i, 0, Dyadic(0), Fraction(1)),
                Sign.POSITIVE if d.gamma[i - 1] else Sign.NEGATIVE,
            )
        )

    least = block[0]
    ladder = [_signed_generator(n, least, 0, bool(d.gamma[least - 1]))]
    for index, offset in chain:
        ladder.append(_signed_generator(n, index, offset, bool(d.gamma[index - 1])))
    ladder.append(_signed_generator(n, least, 1 if ascending else -1, bool(d.gamma[least - 1])))
    ladder.append(gen_lambda(n, Dyadic(1 if d.gamma[n] else -1)))

    for lower, upper in zip(ladder, ladder[1:]):
        quotient = multiply(invert(lower, primes), upper, primes)
        entries.append((quotient, Sign.POSITIVE))

    deduped: List[Tuple[GroupElement, Sign]] = []
    seen = set()
    for element, sign in entries:
        if element not in seen:
            seen.add(element)
            deduped.append((element, sign))
    return Certificate(tuple(deduped))


def _support_bound(c: Certificate) -> int:
    strata = [abs(idx.z) for element, _ in c.entries for idx in element.rho.support()]
    return max(strata, default=0)


def limit_witness(
    d: OrderDescriptor,
    c: Certificate,
    count: int,
    primes: Optional[Sequence[int]] = None,
    offset_budget: Optional[int] = None,
) -> List[OrderDescriptor]:
    """`count` distinct descriptors, each strictly more mixed than d and
    agreeing with c.

    The two smallest blocks of d are merged into one chain, putting the
    second block at an extreme offset so that within the certificate's
    bounded strata every dominant coordinate is preserved.  Candidates
    are emitted at offsets of growing magnitude, keeping those the real
    oracle confirms; exhausting the offset budget raises, which for a
    certificate drawn from d's own sign pattern indicates a bug.
    """
    require_valid(d)
    if len(d.blocks) < 2:
        raise SingleBlockError("cannot mix further: descriptor has a single block")
    if not agrees(d, c, primes):
        raise ValueError("certificate does not agree with the descriptor")
    if count <= 0:
        return []

    bound = max(
        _support_bound(c),
        max((abs(u) for chain in d.mixing for _, u in chain), default=0),
    )
    low, high = d.blocks[0], d.blocks[1]
    low_chain, high_chain = d.mixing[0], d.mixing[1]
    ascending = bool(d.directions[0])
    sigma = 1 if ascending else -1
    merged_block = tuple(sorted(low + high))

    rest_blocks = d.blocks[2:]
    rest_dirs = d.directions[2:]
    rest_mixing = d.mixing[2:]

    found: List[OrderDescriptor] = []
    budget = offset_budget if offset_budget is not None else 8 * (bound + 1) + 4 * count + 32
    magnitude = bound + 3
    for _ in range(budget):
        if len(found) >= count:
            break
        if low[0] < high[0]:
            # The merged least index stays in the low block; push the high
            # block's members to huge levels via a common shift.
            shift = -sigma * magnitude
            chain = tuple(low_chain)
            chain += ((high[0], shift),)
            chain += tuple((index, shift + u) for index, u in high_chain)
        else:
            # The high block owns the least index, which must sit at offset
            # zero; push the low block's members down instead.
            shift = sigma * magnitude
            chain = tuple(high_chain)
            chain += ((low[0], shift),)
            chain += tuple((index, shift + u) for index, u in low_chain)
        candidate = OrderDescriptor(
            n=d.n,
            gamma=d.gamma,
            blocks=(merged_block,) + rest_blocks,
            directions=(d.directions[0],) + rest_dirs,
            mixing=(chain,) + rest_mixing,
        )
        magnitude += 1
        if agrees(candidate, c, primes):
            found.append(candidate)
    if len(found) < count:
        raise WitnessExhaustionError(
            f"only {len(found)} of {count} witnesses within the offset budget"
        )
    return found


def in_ok(d: OrderDescriptor, k: int) -> bool:
    """Membership in the canonical positive stratum O_k: everything
    positive, every direction ascending, families 1..k mixed in index
    order (with arbitrary offsets), then k+1, ..., n as singleton blocks
    in ascending class order."""
    require_valid(d)
    if not 1 <= k <= d.n:
        raise IndexRangeError(f"stratum {k} outside 1..{d.n}")
    if any(bit != 1 for bit in d.gamma):
        return False
    if any(bit != 1 for bit in d.directions):
        return False
    expected_blocks = (tuple(range(1, k + 1)),) + tuple(
        (i,) for i in range(k + 1, d.n + 1)
    )
    if d.blocks != expected_blocks:
        return False
    if k >= 2:
        chain_indices = tuple(index for index, _ in d.mixing[0])
        if chain_indices != tuple(range(2, k + 1)):
            return False
    return True


Partition = FrozenSet[FrozenSet[int]]


def _partition_of(blocks) -> Partition:
    return frozenset(frozenset(block) for block in blocks)


def _proper_refinement(p1: Partition, p2: Partition) -> bool:
    if p1 == p2:
        return False
    return all(any(b1 <= b2 for b2 in p2) for b1 in p1)


class ShapeRanks(Mapping):
    """Total map MixShape -> model rank, backed by the partition quotient.

    The more-mixed relation only reads the partition, and every partition
    is realized by shapes with every gamma/direction/chain choice, so the
    shape derivative factors exactly through the partition derivative.
    The mapping iterates shapes in enumeration order and computes each
    rank on demand instead of materializing the full shape space.
    """

    def __init__(self, n: int, partition_ranks: Dict[Partition, int]):
        self._n = n
        self._partition_ranks = dict(partition_ranks)
        total = 0
        for blocks in set_partitions(n):
            m = len(blocks)
            chains = 1
            for block in blocks:
                chains *= factorial(len(block) - 1)
            total += factorial(m) * (2**m) * chains
        self._size = total * (2 ** (n + 2))

    def __getitem__(self, shape: MixShape) -> int:
        if shape.n != self._n:
            raise KeyError(shape)
        key = _partition_of(shape.blocks)
        if key not in self._partition_ranks:
            raise KeyError(shape)
        return self._partition_ranks[key]

    def __iter__(self) -> Iterator[MixShape]:
        return enumerate_shapes(self._n)

    def __len__(self) -> int:
        return self._size


@dataclass(frozen=True)
class RankReport:
    """Result of the rank model: the stage at which each shape's stratum
    is removed by the more-mixed derivative, and the first empty stage."""

    n: int
    space_rank: int
    shape_ranks: ShapeRanks
    partition_ranks: Tuple[Tuple[Tuple[Tuple[int, ...], ...], int], ...]

    def to_json_dict(self, shape_limit: int = 100_000) -> dict:
        report = {
            "n": self.n,
            "spaceRank": self.space_rank,
            "shapeCount": len(self.shape_ranks),
            "partitionRanks": [
                {"partition": [list(block) for block in blocks], "rank": rank}
                for blocks, rank in self.partition_ranks
            ],
        }
        if len(self.shape_ranks) <= shape_limit:
            report["shapeRanks"] = [
                [_shape_to_json_dict(shape), rank]
                for shape, rank in self.shape_ranks.items()
            ]
        return report


def _shape_to_json_dict(shape: MixShape) -> dict:
    mixing = {
        str(pos): list(chain) for pos, chain in enumerate(shape.mixing) if chain
    }
    return {
        "n": shape.n,
        "gamma": "".join(map(str, shape.gamma)),
        "blocks": [list(block) for block in shape.blocks],
        "directions": "".join(map(str, shape.directions)),
        "mixing": mixing,
    }


def cb_model(n: int) -> RankReport:
    """Run the more-mixed derivative to exhaustion and report the ranks.

    A shape survives a stage while some strictly more mixed shape is
    still present; the stage at which it is removed is its rank, and the
    space rank is the first stage at which nothing is left.  Fully mixed
    shapes are removed immediately (rank 0) and the all-singleton shapes
    last, so the space rank equals n.
    """
    if n < 2:
        raise ArityError(f"arity must be at least 2, got {n}")
    canonical = {_partition_of(blocks): blocks for blocks in set_partitions(n)}
    remaining = set(canonical)
    ranks: Dict[Partition, int] = {}
    stage = 0
    while remaining:
        kept = {
            p
            for p in remaining
            if any(_proper_refinement(p, q) for q in remaining if q != p)
        }
        for p in remaining - kept:
            ranks[p] = stage
        remaining = kept
        stage += 1
    partition_ranks = tuple(
        sorted((canonical[p], rank) for p, rank in ranks.items())
    )
    return RankReport(
        n=n,
        space_rank=stage,
        shape_ranks=ShapeRanks(n, ranks),
        partition_ranks=partition_ranks,
    )


def certificate_to_json(c: Certificate) -> str:
    from .parser import format_element

    payload = [
        {"element": format_element(element), "sign": int(sign)}
        for element, sign in c.entries
    ]
    return json.dumps(payload, separators=(",", ":"))


def certificate_from_json(text: str, n: int, primes=None) -> Certificate:
    from .parser import parse_element

    payload = json.loads(text)
    if not isinstance(payload, list):
        raise ValueError("certificate JSON must be a list")
    entries = []
    for item in payload:
        if set(item) != {"element", "sign"}:
            raise ValueError(f"certificate entry must have element and sign: {item}")
        entries.append((parse_element(item["element"], n, primes), Sign(item["sign"])))
    return Certificate(tuple(entries))
