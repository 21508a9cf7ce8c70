#!/usr/bin/env python3
"""Walkthrough of the space of orders of G(n).

Orders form a compact space whose basic open sets are finite sign
constraints.  Fully mixed orders are isolated: a finite certificate pins
them uniquely.  Orders with separate blocks are limit points: merging
their two smallest blocks at ever more extreme offsets yields infinitely
many strictly-more-mixed orders satisfying any fixed finite constraint.
Running the resulting removal process on mixing shapes ranks the space:
the process empties exactly at stage n.
"""

from ordspace import (
    Certificate,
    Sign,
    agrees,
    cb_model,
    dump_descriptor,
    enumerate_descriptors,
    in_ok,
    isolation_certificate,
    limit_witness,
    more_mixed,
    parse_element,
    shape_of,
)
from ordspace.verify import ok_descriptor

print("Enumeration of all orders with bounded mixing offsets (n = 2)")
for bound in (0, 1, 2):
    count = sum(1 for _ in enumerate_descriptors(2, bound))
    print(f"  offsets within [-{bound}, {bound}] : {count} descriptors")

print("\nIsolation: a fully mixed order is pinned by one finite certificate")
mixed = next(
    d for d in enumerate_descriptors(2, 0)
    if len(d.blocks) == 1 and all(d.gamma) and d.directions == (1,)
)
certificate = isolation_certificate(mixed)
print("  descriptor :", dump_descriptor(mixed))
print("  certificate:")
for element, sign in certificate.entries:
    print(f"    {'+' if sign > 0 else '-'}  {element}")
pool = list(enumerate_descriptors(2, 2))
matches = [d for d in pool if agrees(d, certificate)]
print(f"  satisfied by {len(matches)} of {len(pool)} bounded descriptors (itself)")

print("\nLimit points: every neighborhood of a split order contains")
print("infinitely many strictly more mixed orders")
split = ok_descriptor(2, 1)
pattern = Certificate(
    tuple(
        (parse_element(text, 2), Sign.POSITIVE)
        for text in ("h[1,0,0]", "h[2,0,0]", "L", "Z", "h[1,0,0]^-1 * h[2,0,0]")
    )
)
for witness in limit_witness(split, pattern, 3):
    assert more_mixed(split, witness) and agrees(witness, pattern)
    print("  ", dump_descriptor(witness))

print("\nCanonical positive strata: O_k mixes families 1..k in index order")
probe = ok_descriptor(3, 2, offsets=(5,))
print("  descriptor:", dump_descriptor(probe))
print("  in O_2:", in_ok(probe, 2), "   in O_1:", in_ok(probe, 1))

print("\nRank model: the removal process on mixing shapes empties at stage n")
for n in range(2, 7):
    report = cb_model(n)
    print(f"  n = {n}: space rank {report.space_rank} over {len(report.shape_ranks)} shapes")

report = cb_model(3)
print("\n  shape ranks by stratum (n = 3): O_k shapes carry rank n - k")
for k in (1, 2, 3):
    shape = shape_of(ok_descriptor(3, k))
    print(f"    O_{k} -> rank {report.shape_ranks[shape]}")
