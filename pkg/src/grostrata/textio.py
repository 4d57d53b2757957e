"""Round-trip text format for polynomials.

Grammar (whitespace ignored, '-' also accepted before the first term):

    poly     := term (('+'|'-') term)*
    term     := [coeff '*'] monomial | coeff
    coeff    := integer | integer '/' integer
    monomial := var ('^' nat)? ('*' var ('^' nat)?)*

Variables are positional: the canonical names are x0..xn, and a display
name list (e.g. x,y,z,w) maps names to positions without changing the
underlying ring.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError
from .orders import MonomialOrder
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^]))")
_CANONICAL = re.compile(r"x(\d+)$")


def default_names(dim: int) -> list[str]:
    return [f"x{i}" for i in range(dim)]


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise DomainError(f"cannot read polynomial near {text[pos:pos+12]!r}")
            break
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str], names: Sequence[str]):
        self.tokens = tokens
        self.pos = 0
        self.index = {name: i for i, name in enumerate(names)}
        self.dim = len(names)

    def peek(self) -> Optional[str]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise DomainError("unexpected end of polynomial")
        self.pos += 1
        return tok

    def parse_poly(self) -> Poly:
        result = Poly.zero(self.dim)
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
        result = result + self.parse_term(sign)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take() == "-" else 1
            result = result + self.parse_term(sign)
        if self.peek() is not None:
            raise DomainError(f"trailing input in polynomial: {self.tokens[self.pos:]!r}")
        return result

    def parse_term(self, sign: int) -> Poly:
        coeff = Fraction(sign)
        exponent = [0] * self.dim
        tok = self.peek()
        if tok is None:
            raise DomainError("empty term")
        if tok.isdigit():
            coeff *= self.parse_coeff()
            if self.peek() == "*":
                self.take()
                self.parse_monomial(exponent)
        else:
            self.parse_monomial(exponent)
        return Poly(self.dim, {tuple(exponent): coeff})

    def parse_coeff(self) -> Fraction:
        num = int(self.take())
        if self.peek() == "/":
            self.take()
            den_tok = self.take()
            if not den_tok.isdigit():
                raise DomainError(f"expected denominator, got {den_tok!r}")
            den = int(den_tok)
            if den == 0:
                raise DomainError("zero denominator")
            return Fraction(num, den)
        return Fraction(num)

    def parse_monomial(self, exponent: list[int]) -> None:
        while True:
            name = self.take()
            if name not in self.index:
                raise DomainError(f"unknown variable {name!r}")
            power = 1
            if self.peek() == "^":
                self.take()
                ptok = self.take()
                if not ptok.isdigit():
                    raise DomainError(f"expected exponent, got {ptok!r}")
                power = int(ptok)
            exponent[self.index[name]] += power
            if self.peek() == "*" and self.pos + 1 < len(self.tokens) \
                    and not self.tokens[self.pos + 1].isdigit():
                self.take()
                continue
            return


def parse_polynomial(text: str, names: Sequence[str]) -> Poly:
    return _Parser(_tokenize(text), names).parse_poly()


def split_polynomial_list(text: str) -> list[str]:
    chunks = re.split(r"[;\n]", text)
    return [c for c in (chunk.strip() for chunk in chunks) if c]


def infer_names(text: str) -> list[str]:
    """Dimension from canonical x<k> tokens when no display names are given."""
    top = -1
    for chunk in split_polynomial_list(text) or [text]:
        for tok in _tokenize(chunk):
            if tok[0].isalpha() or tok[0] == "_":
                m = _CANONICAL.match(tok)
                if not m:
                    raise DomainError(
                        f"variable {tok!r} is not canonical (x0, x1, ...); pass --vars to name variables")
                top = max(top, int(m.group(1)))
    if top < 0:
        raise DomainError("no variables found; pass --vars to fix the ring")
    return default_names(top + 1)


def parse_polynomial_list(text: str, names: Optional[Sequence[str]] = None) -> tuple[list[Poly], list[str]]:
    chunks = split_polynomial_list(text)
    if not chunks:
        raise DomainError("no polynomials in input")
    if names is None:
        names = infer_names(text)
    return [parse_polynomial(c, names) for c in chunks], list(names)


def format_polynomial(f: Poly, order: MonomialOrder, names: Optional[Sequence[str]] = None) -> str:
    """Canonical text: terms in decreasing order, reduced fractions."""
    if names is None:
        names = default_names(f.dim)
    if len(names) != f.dim:
        raise DomainError(f"{f.dim} variables but {len(names)} names")
    if not f.terms:
        return "0"
    parts = []
    for e in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[e]
        mono = "*".join(
            name if p == 1 else f"{name}^{p}"
            for name, p in zip(names, e) if p > 0)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    sign0, body0 = parts[0]
    out = ("-" if sign0 == "-" else "") + body0
    for sign, body in parts[1:]:
        out += sign + body
    return out
