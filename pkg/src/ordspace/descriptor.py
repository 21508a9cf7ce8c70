"""Order descriptors: the finite invariant tuples naming the orders of G(n).

A descriptor records, for one bi-invariant order:

  * gamma        -- n+2 sign bits: one per h[i,0,0] (positions 0..n-1),
                    then L (position n), then Z (position n+1); 1 = positive;
  * blocks       -- the partition of {1..n} into groups of mutually mixed
                    generator families, listed from Archimedean-smallest
                    block to largest (list position IS the class order);
  * directions   -- one bit per block: 1 if the stratum ladder of the
                    block's families ascends with z, 0 if it descends;
  * mixing       -- per block of size k >= 2, the k-1 pairs (index, offset)
                    giving the interleaving chain of the block's non-least
                    families after its least index, in chain order.

Descriptors are pure data; all order semantics live in the oracle module.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import ArityError, ArityMismatchError, InvalidDescriptorError

__all__ = [
    "OrderDescriptor",
    "MixShape",
    "validate",
    "reference_descriptor",
    "enumerate_descriptors",
    "enumerate_shapes",
    "more_mixed",
    "shape_of",
    "set_partitions",
    "ordered_partitions",
    "descriptor_to_json_dict",
    "descriptor_from_json_dict",
    "dump_descriptor",
    "load_descriptor",
]

Blocks = Tuple[Tuple[int, ...], ...]
Mixing = Tuple[Tuple[Tuple[int, int], ...], ...]
ShapeMixing = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class OrderDescriptor:
    """Complete invariant tuple for one order of G(n)."""

    n: int
    gamma: Tuple[int, ...]
    blocks: Blocks
    directions: Tuple[int, ...]
    mixing: Mixing


@dataclass(frozen=True)
class MixShape:
    """A descriptor with the mixing offsets erased (chain indices kept)."""

    n: int
    gamma: Tuple[int, ...]
    blocks: Blocks
    directions: Tuple[int, ...]
    mixing: ShapeMixing


def _bits_ok(bits: Sequence[int]) -> bool:
    return all(bit in (0, 1) for bit in bits)


def validate(d) -> Optional[str]:
    """None if every structural invariant holds, else the first violation.

    Accepts either an OrderDescriptor or a MixShape.
    """
    with_offsets = isinstance(d, OrderDescriptor)
    if not with_offsets and not isinstance(d, MixShape):
        return f"not a descriptor: {type(d).__name__}"
    if d.n < 2:
        return f"arity {d.n} below 2"
    if len(d.gamma) != d.n + 2 or not _bits_ok(d.gamma):
        return f"gamma must be {d.n + 2} bits of 0/1"
    seen: set = set()
    for block in d.blocks:
        if not block:
            return "empty block"
        if list(block) != sorted(block):
            return f"block {block} not sorted ascending"
        for index in block:
            if not isinstance(index, int) or not 1 <= index <= d.n:
                return f"index {index} outside 1..{d.n}"
            if index in seen:
                return f"not a partition: index {index} repeated"
            seen.add(index)
    if len(seen) != d.n:
        return "not a partition: some index missing"
    if len(d.directions) != len(d.blocks) or not _bits_ok(d.directions):
        return "directions must carry one 0/1 bit per block"
    if len(d.mixing) != len(d.blocks):
        return "mixing must carry one chain per block"
    for block, chain in zip(d.blocks, d.mixing):
        indices = [pair[0] if with_offsets else pair for pair in chain]
        if len(block) == 1:
            if indices:
                return f"singleton block {block} must have an empty chain"
            continue
        least = block[0]
        if least in indices:
            return f"least index {least} listed in the chain of block {block}"
        if sorted(indices) != sorted(block[1:]):
            return (
                f"chain of block {block} must enumerate exactly its"
                f" non-least indices, got {indices}"
            )
        if with_offsets and not all(isinstance(pair[1], int) for pair in chain):
            return f"non-integer offset in the chain of block {block}"
    return None


def require_valid(d) -> None:
    problem = validate(d)
    if problem is not None:
        raise InvalidDescriptorError(problem)


def reference_descriptor(n: int) -> OrderDescriptor:
    """The descriptor of the built-in layered order.

    Everything positive; no mixing; the family index is most significant
    in descending order (block list [{n}, ..., {1}]); within each family
    the lowest stratum decides, so every direction bit is 0.
    """
    if n < 2:
        raise ArityError(f"arity must be at least 2, got {n}")
    return OrderDescriptor(
        n=n,
        gamma=(1,) * (n + 2),
        blocks=tuple((i,) for i in range(n, 0, -1)),
        directions=(0,) * n,
        mixing=((),) * n,
    )


def set_partitions(n: int) -> Iterator[Blocks]:
    """All partitions of {1..n}, blocks sorted ascending and listed by
    least element; generated in restricted-growth-string order."""
    labels = [0] * n

    def emit() -> Blocks:
        groups: Dict[int, List[int]] = {}
        for pos, label in enumerate(labels):
            groups.setdefault(label, []).append(pos + 1)
        return tuple(tuple(groups[label]) for label in sorted(groups))

    def recurse(pos: int, top: int) -> Iterator[Blocks]:
        if pos == n:
            yield emit()
            return
        for label in range(top + 2):
            labels[pos] = label
            yield from recurse(pos + 1, max(top, label))

    if n == 0:
        yield ()
        return
    labels[0] = 0
    yield from recurse(1, 0)


def ordered_partitions(n: int) -> Iterator[Blocks]:
    """All partitions of {1..n} with every ordering of their blocks."""
    for blocks in set_partitions(n):
        for permuted in itertools.permutations(blocks):
            yield tuple(permuted)


def _chain_choices(block: Tuple[int, ...], offset_bound: int):
    if len(block) == 1:
        return ((),)
    choices = []
    rest = block[1:]
    offsets = range(-offset_bound, offset_bound + 1)
    for order in itertools.permutations(rest):
        for offs in itertools.product(offsets, repeat=len(rest)):
            choices.append(tuple(zip(order, offs)))
    return tuple(choices)


def enumerate_descriptors(n: int, offset_bound: int) -> Iterator[OrderDescriptor]:
    """Every valid descriptor with all offsets in [-offset_bound,
    offset_bound], each exactly once, in a fixed deterministic order."""
    if n < 2:
        raise ArityError(f"arity must be at least 2, got {n}")
    if offset_bound < 0:
        raise ValueError("offset bound must be nonnegative")
    for blocks in ordered_partitions(n):
        per_block = [_chain_choices(block, offset_bound) for block in blocks]
        for gamma in itertools.product((0, 1), repeat=n + 2):
            for directions in itertools.product((0, 1), repeat=len(blocks)):
                for mixing in itertools.product(*per_block):
                    yield OrderDescriptor(n, gamma, blocks, directions, mixing)


def enumerate_shapes(n: int) -> Iterator[MixShape]:
    """Every mixing shape for arity n, in the same deterministic order as
    enumerate_descriptors with the offsets erased."""
    if n < 2:
        raise ArityError(f"arity must be at least 2, got {n}")
    for blocks in ordered_partitions(n):
        per_block = [
            tuple(itertools.permutations(block[1:])) if len(block) > 1 else ((),)
            for block in blocks
        ]
        for gamma in itertools.product((0, 1), repeat=n + 2):
            for directions in itertools.product((0, 1), repeat=len(blocks)):
                for mixing in itertools.product(*per_block):
                    yield MixShape(n, gamma, blocks, directions, mixing)


def more_mixed(d1, d2) -> bool:
    """True when d2 is strictly more mixed than d1: d1's partition is a
    proper refinement of d2's.  Ignores gamma, directions, and offsets."""
    if d1.n != d2.n:
        raise ArityMismatchError(f"arity mismatch: {d1.n} vs {d2.n}")
    p1 = frozenset(frozenset(block) for block in d1.blocks)
    p2 = frozenset(frozenset(block) for block in d2.blocks)
    if p1 == p2:
        return False
    return all(any(b1 <= b2 for b2 in p2) for b1 in p1)


def shape_of(d: OrderDescriptor) -> MixShape:
    """Erase the mixing offsets, keeping everything else."""
    return MixShape(
        n=d.n,
        gamma=d.gamma,
        blocks=d.blocks,
        directions=d.directions,
        mixing=tuple(tuple(i for i, _ in chain) for chain in d.mixing),
    )


_JSON_KEYS = {"n", "gamma", "blocks", "directions", "mixing"}


def descriptor_to_json_dict(d: OrderDescriptor) -> dict:
    mixing = {
        str(pos): [[index, offset] for index, offset in chain]
        for pos, chain in enumerate(d.mixing)
        if chain
    }
    return {
        "n": d.n,
        "gamma": "".join(map(str, d.gamma)),
        "blocks": [list(block) for block in d.blocks],
        "directions": "".join(map(str, d.directions)),
        "mixing": mixing,
    }


def descriptor_from_json_dict(obj: dict) -> OrderDescriptor:
    """Parse the canonical JSON form; unknown fields are rejected and the
    result is validated."""
    if not isinstance(obj, dict):
        raise InvalidDescriptorError("descriptor JSON must be an object")
    unknown = set(obj) - _JSON_KEYS
    if unknown:
        raise InvalidDescriptorError(f"unknown descriptor fields: {sorted(unknown)}")
    missing = {"n", "gamma", "blocks", "directions"} - set(obj)
    if missing:
        raise InvalidDescriptorError(f"missing descriptor fields: {sorted(missing)}")
    try:
        n = int(obj["n"])
        gamma = tuple(int(ch) for ch in obj["gamma"])
        blocks = tuple(tuple(int(i) for i in block) for block in obj["blocks"])
        directions = tuple(int(ch) for ch in obj["directions"])
        raw_mixing = obj.get("mixing", {})
        mixing_map = {
            int(pos): tuple((int(i), int(u)) for i, u in chain)
            for pos, chain in raw_mixing.items()
        }
    except (TypeError, ValueError) as exc:
        raise InvalidDescriptorError(f"malformed descriptor field: {exc}") from exc
    if any(pos < 0 or pos >= len(blocks) for pos in mixing_map):
        raise InvalidDescriptorError("mixing keyed by a block index out of range")
    mixing = tuple(mixing_map.get(pos, ()) for pos in range(len(blocks)))
    d = OrderDescriptor(n, gamma, blocks, directions, mixing)
    require_valid(d)
    return d


def dump_descriptor(d: OrderDescriptor) -> str:
    return json.dumps(descriptor_to_json_dict(d), separators=(",", ":"))


def load_descriptor(text: str) -> OrderDescriptor:
    return descriptor_from_json_dict(json.loads(text))
