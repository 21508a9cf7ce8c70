"""Exact dyadic/rational arithmetic and guaranteed sign determination.

The sign engine decides the sign of a finite sum

    r_1 * p**x_1 + ... + r_m * p**x_m

with rational coefficients r_j, a prime base p, and dyadic exponents
x_j in [0, 1).  Terms with equal exponents are merged first, so exact
cancellation is detected symbolically with no numeric work.  A nonzero
remainder is separated from zero by evaluating the 2**k-th root of p
with directed rounding, doubling the working precision until the
enclosing interval excludes zero.
"""

from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Iterable, Tuple, Union

from .errors import PrecisionExceededError

__all__ = [
    "Rational",
    "Sign",
    "Dyadic",
    "ZERO",
    "rational_sign",
    "dyadic_floor_split",
    "prime_power",
    "linear_comb_sign",
    "STARTING_PRECISION_BITS",
    "DEFAULT_PRECISION_CEILING",
]

# Coefficients are plain stdlib fractions; they are already canonical
# (lowest terms, positive denominator) and hash/compare by value.
Rational = Fraction

STARTING_PRECISION_BITS = 64
DEFAULT_PRECISION_CEILING = 16384

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class Sign(enum.IntEnum):
    """Exact sign of a real quantity."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def flipped(self) -> "Sign":
        return Sign(-int(self))


def rational_sign(q: Union[int, Fraction]) -> Sign:
    if q > 0:
        return Sign.POSITIVE
    if q < 0:
        return Sign.NEGATIVE
    return Sign.ZERO


class Dyadic:
    """Dyadic rational mantissa / 2**exponent in canonical form.

    The exponent is the smallest nonnegative integer representing the
    value, so the mantissa is odd whenever the exponent is positive and
    zero is stored as 0 / 2**0.  Canonical form makes equality (and
    therefore hashing and exponent merging in the sign engine) purely
    structural.
    """

    __slots__ = ("mantissa", "exponent")

    def __init__(self, mantissa: int, exponent: int = 0):
        if exponent < 0:
            raise ValueError("dyadic exponent must be nonnegative")
        if mantissa == 0:
            exponent = 0
        else:
            shift = min(exponent, (mantissa & -mantissa).bit_length() - 1)
            mantissa >>= shift
            exponent -= shift
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic values are immutable")

    @classmethod
    def from_fraction(cls, value: Fraction) -> "Dyadic":
        den = value.denominator
        k = den.bit_length() - 1
        if den != 1 << k:
            raise ValueError(f"{value} is not a dyadic rational")
        return cls(value.numerator, k)

    @classmethod
    def from_value(cls, value: Union["Dyadic", int, Fraction, str]) -> "Dyadic":
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, int):
            return cls(value)
        if isinstance(value, Fraction):
            return cls.from_fraction(value)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a dyadic rational")

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        match = _RATIONAL_RE.match(text.strip())
        if match is None:
            raise ValueError(f"malformed dyadic literal {text!r}")
        num = int(match.group(1))
        if match.group(2) is None:
            return cls(num)
        return cls.from_fraction(Fraction(num, int(match.group(2))))

    def as_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.exponent)

    @property
    def sign(self) -> Sign:
        return rational_sign(self.mantissa)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def is_zero(self) -> bool:
        return self.mantissa == 0

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        k = max(self.exponent, other.exponent)
        return Dyadic(
            (self.mantissa << (k - self.exponent))
            + (other.mantissa << (k - other.exponent)),
            k,
        )

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self.mantissa, self.exponent)

    def mul_pow2(self, e: int) -> "Dyadic":
        """The value scaled by 2**e (e may be negative)."""
        if self.mantissa == 0:
            return self
        if e >= self.exponent:
            return Dyadic(self.mantissa << (e - self.exponent))
        return Dyadic(self.mantissa, self.exponent - e)

    def floor_split(self) -> Tuple[int, "Dyadic"]:
        """Integer floor and fractional part; the parts recombine exactly."""
        floor = self.mantissa >> self.exponent
        return floor, Dyadic(self.mantissa - (floor << self.exponent), self.exponent)

    def _cmp_key(self, other: "Dyadic") -> Tuple[int, int]:
        return (
            self.mantissa << other.exponent,
            other.mantissa << self.exponent,
        )

    def __lt__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a < b

    def __le__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a <= b

    def __gt__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a > b

    def __ge__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        a, b = self._cmp_key(other)
        return a >= b

    def __eq__(self, other):
        if not isinstance(other, Dyadic):
            return NotImplemented
        return self.mantissa == other.mantissa and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.mantissa, self.exponent))

    def __str__(self):
        if self.exponent == 0:
            return str(self.mantissa)
        return f"{self.mantissa}/{1 << self.exponent}"

    def __repr__(self):
        return f"Dyadic({self.mantissa}, {self.exponent})"


ZERO = Dyadic(0)


def dyadic_floor_split(d: Dyadic) -> Tuple[int, Dyadic]:
    """Split d into (floor, fraction) with 0 <= fraction < 1, exactly."""
    return d.floor_split()


def prime_power(p: int, m: int) -> Fraction:
    """The exact value p**m as a fraction; m may be negative."""
    if p < 2:
        raise ValueError("base must be at least 2")
    return Fraction(p) ** m


def _floor_root_pow2(value: int, k: int) -> int:
    """floor(value ** (1 / 2**k)) by k successive integer square roots."""
    for _ in range(k):
        value = math.isqrt(value)
    return value


def linear_comb_sign(
    p: int,
    terms: Iterable[Tuple[Union[int, Fraction], Union[Dyadic, int, Fraction, str]]],
    max_bits: int = DEFAULT_PRECISION_CEILING,
) -> Sign:
    """Exact sign of  sum_j coeff_j * p**exp_j  for dyadic exp_j in [0, 1).

    Equal exponents are merged; the sum is zero if and only if every
    merged coefficient vanishes (the powers p**x for distinct dyadic x
    are linearly independent over the rationals for prime p).  Otherwise
    the 2**K-th root of p is enclosed in a directed-rounding interval of
    doubling precision until the sum's enclosure excludes zero.  Raises
    PrecisionExceededError at the ceiling, which for legitimate inputs
    never happens; hitting it indicates a precondition violation such as
    a composite base.
    """
    if p < 2:
        raise ValueError("base must be at least 2")
    one = Dyadic(1)
    merged: dict = {}
    for coeff, exp in terms:
        exp = Dyadic.from_value(exp)
        if exp.mantissa < 0 or not exp < one:
            raise ValueError(f"exponent {exp} outside [0, 1)")
        merged[exp] = merged.get(exp, Fraction(0)) + Fraction(coeff)
    merged = {x: r for x, r in merged.items() if r != 0}
    if not merged:
        return Sign.ZERO
    if len(merged) == 1:
        # p**x > 0, so a single term carries its coefficient's sign.
        return rational_sign(next(iter(merged.values())))

    # Rewrite as an integer combination of powers of q = p**(1/2**K).
    root_log = max(x.exponent for x in merged)
    denom_lcm = math.lcm(*(r.denominator for r in merged.values()))
    entries = [
        (int(r * denom_lcm), x.mantissa << (root_log - x.exponent))
        for x, r in merged.items()
    ]
    top = max(c for _, c in entries)

    bits = STARTING_PRECISION_BITS
    while bits <= max_bits:
        # root_lo/2**bits <= q <= (root_lo+1)/2**bits; q is irrational here,
        # so both enclosure bounds are strict.
        root_lo = _floor_root_pow2(p << (bits << root_log), root_log)
        lo = hi = 0
        for a, c in entries:
            pow_lo = root_lo**c
            pow_hi = (root_lo + 1) ** c
            shift = bits * (top - c)
            if a > 0:
                lo += a * (pow_lo << shift)
                hi += a * (pow_hi << shift)
            else:
                lo += a * (pow_hi << shift)
                hi += a * (pow_lo << shift)
        if lo > 0:
            return Sign.POSITIVE
        if hi < 0:
            return Sign.NEGATIVE
        bits *= 2
    raise PrecisionExceededError(
        f"sign undecided at {max_bits} bits; check that {p} is prime"
    )
