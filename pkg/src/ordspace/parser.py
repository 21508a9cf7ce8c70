"""Element expression language: parsing and normal-form emission.

Grammar (whitespace insignificant):

    element  := term ('*' term)* | 'I'
    term     := atom ('^' exponent)?
    atom     := 'h[' i ',' z ',' x ']' | 'L' | 'Z' | '(' element ')'
    exponent := rational for h-atoms (coefficient scaling),
                dyadic for L, integer for Z and parenthesized groups
                (repeated multiplication; ^-1 is the inverse)

Emission uses the same grammar with terms in normal-form order: the
P-part sorted by (i, z, x), then L, then Z.  Exponents equal to 1 are
omitted, so emission and parsing round-trip bit-exactly.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .errors import ExprSyntaxError
from .exact import Dyadic
from .group import GroupElement, gen_h, gen_lambda, gen_zeta, identity, multiply, power

__all__ = ["parse_element", "format_element"]

_TOKEN_RE = re.compile(r"\s*(?:(-?\d+)|([hLZI])|([\[\](),*/^]))")


class _Token(NamedTuple):
    kind: str  # 'int', 'name', 'sym', 'end'
    text: str
    pos: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None or match.lastindex is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprSyntaxError(
                f"unexpected character {stripped[0]!r}", len(text) - len(stripped)
            )
        start = match.start(match.lastindex)
        if match.group(1) is not None:
            tokens.append(_Token("int", match.group(1), start))
        elif match.group(2) is not None:
            tokens.append(_Token("name", match.group(2), start))
        else:
            tokens.append(_Token("sym", match.group(3), start))
        pos = match.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int, primes=None):
        self.tokens = _tokenize(text)
        self.cursor = 0
        self.n = n
        self.primes = primes

    def peek(self) -> _Token:
        return self.tokens[self.cursor]

    def advance(self) -> _Token:
        token = self.tokens[self.cursor]
        self.cursor += 1
        return token

    def expect(self, kind: str, text: Optional[str] = None) -> _Token:
        token = self.peek()
        if token.kind != kind or (text is not None and token.text != text):
            want = text if text is not None else kind
            raise ExprSyntaxError(f"expected {want!r}", token.pos)
        return self.advance()

    def parse_int(self, what: str) -> int:
        token = self.peek()
        if token.kind != "int":
            raise ExprSyntaxError(f"expected {what}", token.pos)
        self.advance()
        return int(token.text)

    def parse_rational(self) -> Fraction:
        num = self.parse_int("a rational")
        if self.peek().kind == "sym" and self.peek().text == "/":
            self.advance()
            den_token = self.peek()
            den = self.parse_int("a denominator")
            if den <= 0:
                raise ExprSyntaxError("denominator must be positive", den_token.pos)
            return Fraction(num, den)
        return Fraction(num)

    def parse_dyadic(self, what: str = "a dyadic rational") -> Dyadic:
        start = self.peek()
        value = self.parse_rational()
        den = value.denominator
        if den & (den - 1):
            raise ExprSyntaxError(
                f"expected {what} (denominator must be a power of 2)", start.pos
            )
        return Dyadic.from_fraction(value)

    def parse_element(self) -> GroupElement:
        token = self.peek()
        if token.kind == "name" and token.text == "I":
            self.advance()
            return identity(self.n)
        result = self.parse_term()
        while self.peek().kind == "sym" and self.peek().text == "*":
            self.advance()
            result = multiply(result, self.parse_term(), self.primes)
        return result

    def parse_term(self) -> GroupElement:
        token = self.peek()
        if token.kind == "name" and token.text == "h":
            self.advance()
            self.expect("sym", "[")
            i = self.parse_int("a generator index")
            self.expect("sym", ",")
            z = self.parse_int("a stratum index")
            self.expect("sym", ",")
            x = self.parse_dyadic("a coordinate")
            self.expect("sym", "]")
            r = Fraction(1)
            if self._take_caret():
                r = self.parse_rational()
            return gen_h(self.n, i, z, x, r)
        if token.kind == "name" and token.text == "L":
            self.advance()
            a = Dyadic(1)
            if self._take_caret():
                a = self.parse_dyadic("a dyadic exponent")
            return gen_lambda(self.n, a)
        if token.kind == "name" and token.text == "Z":
            self.advance()
            b = 1
            if self._take_caret():
                b = self.parse_int("an integer exponent")
            return gen_zeta(self.n, b)
        if token.kind == "sym" and token.text == "(":
            self.advance()
            inner = self.parse_element()
            self.expect("sym", ")")
            if self._take_caret():
                return power(inner, self.parse_int("an integer exponent"), self.primes)
            return inner
        raise ExprSyntaxError("expected an atom (h[...], L, Z, or '(')", token.pos)

    def _take_caret(self) -> bool:
        if self.peek().kind == "sym" and self.peek().text == "^":
            self.advance()
            return True
        return False


def parse_element(text: str, n: int, primes=None) -> GroupElement:
    """Parse an element expression; the result is in normal form."""
    parser = _Parser(text, n, primes)
    result = parser.parse_element()
    trailing = parser.peek()
    if trailing.kind != "end":
        raise ExprSyntaxError(f"unexpected trailing input {trailing.text!r}", trailing.pos)
    return result


def format_element(g: GroupElement) -> str:
    """Emit the normal form of g in the expression grammar."""
    parts = []
    for idx, coeff in g.rho.items:
        atom = f"h[{idx.i},{idx.z},{idx.x}]"
        parts.append(atom if coeff == 1 else f"{atom}^{coeff}")
    if not g.a.is_zero():
        parts.append("L" if g.a == Dyadic(1) else f"L^{g.a}")
    if g.b:
        parts.append("Z" if g.b == 1 else f"Z^{g.b}")
    if not parts:
        return "I"
    return " * ".join(parts)
