"""Normal-form arithmetic in the bi-orderable groups G(n) = (P ⋊ A) ⋊ Z.

Every element has a unique normal form  rho * L^a * Z^b  where rho is a
finite rational combination of basis generators h[i,z,x] (1 <= i <= n,
z an integer, x a dyadic in [0, 1)), a is a dyadic rational and b an
integer.  The group is determined by the conjugation actions

    Z^-b * h[i,z,x]^r * Z^b = h[i,z+b,x]^r
    L^-a * h[i,z,x]^r * L^a = h[i,z,x']^(r * p_i^m)
        where m = floor(x + a*2^z) and x' = x + a*2^z - m
    Z^-b * L^a * Z^b = L^(a/2^b)

for a fixed list of distinct primes p_1, ..., p_n (the first n primes
by default).  All values are immutable and all operations pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional, Sequence, Tuple, Union

from .errors import ArityError, ArityMismatchError, IndexRangeError
from .exact import Dyadic, ZERO

__all__ = [
    "PIndex",
    "PElement",
    "GroupElement",
    "first_primes",
    "identity",
    "gen_h",
    "gen_lambda",
    "gen_zeta",
    "conj_p_by_lambda",
    "conj_p_by_zeta",
    "multiply",
    "invert",
    "conjugate",
    "power",
]

RationalLike = Union[int, Fraction]
DyadicLike = Union[Dyadic, int, Fraction, str]

_ONE = Dyadic(1)


@lru_cache(maxsize=None)
def first_primes(n: int) -> Tuple[int, ...]:
    """The first n primes (2, 3, 5, ...)."""
    primes = []
    candidate = 2
    while len(primes) < n:
        if all(candidate % q for q in primes):
            primes.append(candidate)
        candidate += 1
    return tuple(primes)


class PIndex(NamedTuple):
    """Coordinate of one basis line of P: generator family i, stratum z,
    fractional coordinate x in [0, 1)."""

    i: int
    z: int
    x: Dyadic


class PElement:
    """Finite-support map PIndex -> nonzero rational coefficient.

    Members of the restricted direct product of rational lines; the group
    operation is pointwise addition of coefficients.  Items are stored
    sorted, so equality, hashing, and emission order are canonical.
    """

    __slots__ = ("_items",)

    def __init__(self, items: Iterable[Tuple[PIndex, Fraction]] = ()):
        merged: dict = {}
        for idx, coeff in items:
            value = merged.get(idx, Fraction(0)) + coeff
            if value == 0:
                merged.pop(idx, None)
            else:
                merged[idx] = value
        object.__setattr__(self, "_items", tuple(sorted(merged.items())))

    def __setattr__(self, name, value):
        raise AttributeError("PElement values are immutable")

    @classmethod
    def single(cls, index: PIndex, coeff: Fraction) -> "PElement":
        return cls(((index, coeff),))

    @property
    def items(self) -> Tuple[Tuple[PIndex, Fraction], ...]:
        return self._items

    def support(self) -> Tuple[PIndex, ...]:
        return tuple(idx for idx, _ in self._items)

    def coefficient(self, index: PIndex) -> Fraction:
        for idx, coeff in self._items:
            if idx == index:
                return coeff
        return Fraction(0)

    def is_identity(self) -> bool:
        return not self._items

    def __add__(self, other: "PElement") -> "PElement":
        if not isinstance(other, PElement):
            return NotImplemented
        return PElement(itertools.chain(self._items, other._items))

    def __neg__(self) -> "PElement":
        result = PElement()
        object.__setattr__(
            result, "_items", tuple((idx, -coeff) for idx, coeff in self._items)
        )
        return result

    def __eq__(self, other):
        if not isinstance(other, PElement):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        return f"PElement({list(self._items)!r})"


_EMPTY_P = PElement()


@dataclass(frozen=True)
class GroupElement:
    """Group element in normal form rho * L^a * Z^b.

    Two elements are equal exactly when all fields are equal; the
    identity is the empty rho with a = 0 and b = 0.
    """

    n: int
    rho: PElement
    a: Dyadic
    b: int

    def is_identity(self) -> bool:
        return self.rho.is_identity() and self.a.is_zero() and self.b == 0

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return multiply(self, other)

    def __pow__(self, exponent: int) -> "GroupElement":
        return power(self, exponent)

    def inverse(self) -> "GroupElement":
        return invert(self)

    def __str__(self):
        from .parser import format_element

        return format_element(self)


def _require_arity(n: int) -> None:
    if n < 2:
        raise ArityError(f"arity must be at least 2, got {n}")


def identity(n: int) -> GroupElement:
    """The identity element of G(n)."""
    _require_arity(n)
    return GroupElement(n, _EMPTY_P, ZERO, 0)


def gen_h(
    n: int,
    i: int,
    z: int,
    x: DyadicLike,
    r: RationalLike = 1,
) -> GroupElement:
    """The generator h[i,z,x]^r; r = 0 yields the identity."""
    _require_arity(n)
    if not 1 <= i <= n:
        raise IndexRangeError(f"generator index {i} outside 1..{n}")
    x = Dyadic.from_value(x)
    if x.mantissa < 0 or not x < _ONE:
        raise IndexRangeError(f"coordinate {x} outside [0, 1)")
    coeff = Fraction(r)
    if coeff == 0:
        return identity(n)
    return GroupElement(n, PElement.single(PIndex(i, z, x), coeff), ZERO, 0)


def gen_lambda(n: int, a: DyadicLike) -> GroupElement:
    """The scaling generator L^a; a = 0 yields the identity."""
    _require_arity(n)
    return GroupElement(n, _EMPTY_P, Dyadic.from_value(a), 0)


def gen_zeta(n: int, b: int) -> GroupElement:
    """The shift generator Z^b; b = 0 yields the identity."""
    _require_arity(n)
    return GroupElement(n, _EMPTY_P, ZERO, int(b))


def conj_p_by_lambda(
    rho: PElement, alpha: Dyadic, primes: Sequence[int]
) -> PElement:
    """L^-alpha * rho * L^alpha, computed componentwise.

    Each term (i, z, x) -> r maps to (i, z, x') -> r * p_i^m with
    m = floor(x + alpha*2^z) and x' its fractional part.
    """
    items = []
    for idx, coeff in rho.items:
        m, x2 = (idx.x + alpha.mul_pow2(idx.z)).floor_split()
        items.append((PIndex(idx.i, idx.z, x2), coeff * Fraction(primes[idx.i - 1]) ** m))
    return PElement(items)


def conj_p_by_zeta(rho: PElement, beta: int) -> PElement:
    """Z^-beta * rho * Z^beta: every stratum index shifts by beta."""
    items = [(PIndex(idx.i, idx.z + beta, idx.x), coeff) for idx, coeff in rho.items]
    return PElement(items)


def _resolve_primes(n: int, primes: Optional[Sequence[int]]) -> Sequence[int]:
    if primes is None:
        return first_primes(n)
    if len(primes) < n:
        raise ValueError(f"need at least {n} primes, got {len(primes)}")
    return primes


def multiply(
    g1: GroupElement, g2: GroupElement, primes: Optional[Sequence[int]] = None
) -> GroupElement:
    """Normal form of the product g1 * g2."""
    if g1.n != g2.n:
        raise ArityMismatchError(f"arity mismatch: {g1.n} vs {g2.n}")
    ps = _resolve_primes(g1.n, primes)
    # Push g2's P-part left through Z^b1 and L^a1:
    #   rho = rho1 + L^a1 Z^b1 rho2 Z^-b1 L^-a1
    moved = conj_p_by_lambda(conj_p_by_zeta(g2.rho, -g1.b), -g1.a, ps)
    return GroupElement(
        g1.n,
        g1.rho + moved,
        g1.a + g2.a.mul_pow2(g1.b),
        g1.b + g2.b,
    )


def invert(g: GroupElement, primes: Optional[Sequence[int]] = None) -> GroupElement:
    """Normal form of the inverse of g."""
    ps = _resolve_primes(g.n, primes)
    rho = conj_p_by_zeta(conj_p_by_lambda(-g.rho, g.a, ps), g.b)
    return GroupElement(g.n, rho, (-g.a).mul_pow2(-g.b), -g.b)


def conjugate(
    g: GroupElement, k: GroupElement, primes: Optional[Sequence[int]] = None
) -> GroupElement:
    """k^-1 * g * k in normal form."""
    return multiply(multiply(invert(k, primes), g, primes), k, primes)


def power(
    g: GroupElement, exponent: int, primes: Optional[Sequence[int]] = None
) -> GroupElement:
    """g**exponent by repeated squaring; negative exponents invert."""
    if exponent < 0:
        return power(invert(g, primes), -exponent, primes)
    result = identity(g.n)
    base = g
    e = exponent
    while e:
        if e & 1:
            result = multiply(result, base, primes)
        base = multiply(base, base, primes)
        e >>= 1
    return result
