#!/usr/bin/env python3
"""Walkthrough of the order oracle.

A descriptor names one bi-invariant order of G(n).  The oracle decides
the sign of any element under that order by cascading through the
semidirect structure (Z exponent, then L exponent, then the dominant
coordinate of the P part), and classifies elements into Archimedean
classes ordered by the descriptor's interleaving data.
"""

from ordspace import (
    Dyadic,
    OrderDescriptor,
    arch_class,
    arch_compare,
    compare,
    dump_descriptor,
    gen_h,
    gen_lambda,
    gen_zeta,
    invert,
    multiply,
    parse_element,
    reference_descriptor,
    sign_of,
)

split = OrderDescriptor(2, (1, 1, 1, 1), ((1,), (2,)), (1, 1), ((), ()))
mixed = OrderDescriptor(2, (1, 1, 1, 1), ((1, 2),), (1,), (((2, 0),),))

print("Two descriptors for G(2)")
print("  split :", dump_descriptor(split), " (family 1 far below family 2)")
print("  mixed :", dump_descriptor(mixed), " (families interleave)")

print("\nSign cascade: Z decides first, then L, then the P part")
for text in ("Z^-3", "h[1,5,0]^9 * L^-1/2", "h[2,-7,0] * h[1,5,0]^-9"):
    g = parse_element(text, 2)
    print(f"  sign({text:<24}) = {int(sign_of(split, g)):+d}")

print("\nThe same quotient can point different ways under different orders")
q = multiply(invert(gen_h(2, 2, 3, Dyadic(0), 1)), gen_h(2, 1, 4, Dyadic(0), 1))
print("  q = h[2,3,0]^-1 * h[1,4,0]")
print(f"  under split: {int(sign_of(split, q)):+d}   under mixed: {int(sign_of(mixed, q)):+d}")

print("\nComparisons are sign queries on quotients")
lam, zeta = gen_lambda(2, Dyadic(1)), gen_zeta(2, 1)
print("  L vs Z                  :", compare(split, lam, zeta).value)
print("  h[2,0,0] vs h[1,1,0] (mixed):", compare(mixed, gen_h(2, 2, 0, Dyadic(0), 1), gen_h(2, 1, 1, Dyadic(0), 1)).value)

print("\nArchimedean classes and the class ladder")
samples = [
    "h[1,3,0]^5 * h[1,-2,1/2]",
    "h[1,0,0] * L^1/2",
    "h[2,0,0]^3 * Z^-1",
]
for text in samples:
    g = parse_element(text, 2)
    print(f"  class({text:<26}) = {arch_class(split, g)}")

print("\n  under split, h[1,z,0] << h[2,z',0] for every pair of strata:")
g1 = gen_h(2, 1, 6, Dyadic(0), 1)
g2 = gen_h(2, 2, -6, Dyadic(0), 1)
print("  arch_compare(h[1,6,0], h[2,-6,0]) =", arch_compare(split, g1, g2).value)
print("  under mixed they interleave stratum by stratum:")
print("  arch_compare(h[1,6,0], h[2,-6,0]) =", arch_compare(mixed, g1, g2).value)

print("\nSingle-slice sums are signed exactly (2^(1/2) - 2 < 0):")
g = parse_element("h[1,0,0]^-2 * h[1,0,1/2]", 2)
print("  sign(h[1,0,1/2] * h[1,0,0]^-2) =", int(sign_of(split, g)))

print("\nThe built-in layered order and its descriptor:")
print(" ", dump_descriptor(reference_descriptor(2)))
