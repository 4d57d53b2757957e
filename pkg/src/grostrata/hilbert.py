"""Univariate rational polynomials P(t) and the Gotzmann decomposition.

A Hilbert polynomial is stored dense, by its coefficient list c0..cd.  The
Gotzmann number of P is the length r of the unique decomposition

    P(t) = sum_{i=1..r} binom(t + a_i - i + 1, a_i),   a_1 >= ... >= a_r >= 0,

computed greedily: a_i is the degree of the current remainder.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .errors import DomainError


@dataclass(frozen=True)
class HilbertPolynomial:
    """P(t) = sum coeffs[i] * t^i, trailing zeros stripped (0 = empty tuple)."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def from_coeffs(coeffs: Iterable[Fraction | int]) -> "HilbertPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return HilbertPolynomial(tuple(cs))

    @staticmethod
    def zero() -> "HilbertPolynomial":
        return HilbertPolynomial(())

    @property
    def degree(self) -> int:
        """Degree of P; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, t: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        cs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            cs[i] += c
        for i, c in enumerate(other.coeffs):
            cs[i] += c
        return HilbertPolynomial.from_coeffs(cs)

    def __sub__(self, other: "HilbertPolynomial") -> "HilbertPolynomial":
        return self + other.scale(-1)

    def scale(self, c: Fraction | int) -> "HilbertPolynomial":
        return HilbertPolynomial.from_coeffs(Fraction(c) * x for x in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]


@lru_cache(maxsize=None)
def binomial_poly(shift: int, top: int) -> HilbertPolynomial:
    """binom(t + shift, top) as a polynomial in t, exact over Q."""
    if top < 0:
        raise DomainError("binomial with negative lower index")
    coeffs = [Fraction(1)]
    for j in range(top):
        # multiply by (t + shift - j)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c * (shift - j)
            nxt[i + 1] += c
        coeffs = nxt
    fact = 1
    for j in range(2, top + 1):
        fact *= j
    return HilbertPolynomial.from_coeffs(Fraction(c, fact) for c in coeffs)


def gotzmann_decomposition(p: HilbertPolynomial) -> list[int]:
    """Exponents a_1 >= ... >= a_r of the binomial decomposition of P.

    Raises DomainError if the greedy subtraction fails, i.e. the input is
    not the Hilbert polynomial of any subscheme of projective space.
    """
    remainder = p
    exponents: list[int] = []
    prev = None
    i = 0
    while remainder:
        i += 1
        a = remainder.degree
        if remainder.leading_coefficient() < 0:
            raise DomainError(f"not a Hilbert polynomial: negative remainder at step {i}")
        if prev is not None and a > prev:
            raise DomainError(f"not a Hilbert polynomial: degree grew at step {i}")
        remainder = remainder - binomial_poly(a - i + 1, a)
        if remainder and remainder.degree > a:
            raise DomainError(f"not a Hilbert polynomial: degree grew at step {i}")
        exponents.append(a)
        prev = a
    return exponents


def gotzmann_number(p: HilbertPolynomial) -> int:
    """Length of the binomial decomposition; 0 for the zero polynomial."""
    return len(gotzmann_decomposition(p))
