#!/usr/bin/env python3
"""Walkthrough of exact element arithmetic in G(n).

Elements live in a two-step semidirect product (P ⋊ A) ⋊ Z and every
one of them has a unique normal form  rho * L^a * Z^b.  This script
builds generators, shows the three defining conjugation actions, and
round-trips elements through the text expression language.
"""

from ordspace import (
    Dyadic,
    conjugate,
    format_element,
    gen_h,
    gen_lambda,
    gen_zeta,
    invert,
    multiply,
    parse_element,
)


def show(label, element):
    print(f"  {label:<34} {format_element(element)}")


print("Generators of G(2)")
h = gen_h(2, 1, 0, Dyadic(0), 1)
lam = gen_lambda(2, Dyadic(1))
zeta = gen_zeta(2, 1)
show("h[1,0,0]", h)
show("L", lam)
show("Z", zeta)

print("\nDefining conjugation actions")
show("Z^-1 * h[1,0,0] * Z  (stratum shift)", conjugate(h, zeta))
show("Z^-1 * L * Z         (exponent halves)", conjugate(lam, zeta))
# Conjugating by L^(3/4) moves the coordinate 1/2 to 1/2 + 3/4 = 5/4,
# which wraps to 1/4 and multiplies the coefficient by p_1^1 = 2.
g = gen_h(2, 1, 0, Dyadic(1, 1), 1)
show("L^-3/4 * h[1,0,1/2] * L^3/4", conjugate(g, gen_lambda(2, Dyadic(3, 2))))

print("\nProducts normalize eagerly")
show("Z * h[1,0,0]", multiply(zeta, h))
show("L * h[1,0,0]", multiply(lam, h))
show("(h[1,0,0] * L)^-1", invert(multiply(h, lam)))

print("\nCoefficients are exact rationals, coordinates exact dyadics")
wild = parse_element("h[2,-3,5/8]^-7/3 * h[1,4,0]^2 * L^-5/16 * Z^2", 2)
show("parsed and renormalized", wild)
assert parse_element(format_element(wild), 2) == wild
print("  round-trip through the grammar is bit-exact")

print("\nPowers by repeated multiplication")
word = multiply(h, zeta)
for e in (2, 3, -1):
    show(f"(h[1,0,0] * Z)^{e}", word**e)

check = multiply(word**3, word**-3)
print(f"\n  (w^3)(w^-3) is the identity: {check.is_identity()}")
