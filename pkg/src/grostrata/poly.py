"""Sparse multivariate polynomials over exact rationals.

Terms are kept in a dict mapping exponent tuples to nonzero Fractions; the
zero polynomial is the empty dict.  Every polynomial carries its ambient
dimension so that the zero polynomial still knows its ring.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import DimensionMismatch, DomainError
from .orders import Exponent, MonomialOrder, degree, divides, vec_add, vec_lcm, vec_sub


class Poly:
    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms: Mapping[Exponent, Fraction] | None = None):
        self.dim = dim
        clean: dict[Exponent, Fraction] = {}
        if terms:
            for e, c in terms.items():
                c = Fraction(c)
                if c == 0:
                    continue
                e = tuple(e)
                if len(e) != dim:
                    raise DimensionMismatch(f"exponent {e} in a {dim}-variable polynomial")
                clean[e] = c
        self.terms = clean

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Poly":
        return Poly(dim)

    @staticmethod
    def constant(dim: int, c) -> "Poly":
        return Poly(dim, {(0,) * dim: Fraction(c)})

    @staticmethod
    def monomial(exponent: Sequence[int], coeff=1) -> "Poly":
        e = tuple(exponent)
        return Poly(len(e), {e: Fraction(coeff)})

    # -- ring operations -------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"mixing {self.dim}- and {other.dim}-variable polynomials")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, 0) + c
            if s == 0:
                res.pop(e, None)
            else:
                res[e] = s
        out = Poly.zero(self.dim)
        out.terms = res
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        out = Poly.zero(self.dim)
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        res: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = vec_add(e1, e2)
                s = res.get(e, 0) + c1 * c2
                if s == 0:
                    res.pop(e, None)
                else:
                    res[e] = s
        out = Poly.zero(self.dim)
        out.terms = res
        return out

    def term_mul(self, coeff, exponent: Exponent) -> "Poly":
        """Multiply by coeff * x^exponent in one pass."""
        coeff = Fraction(coeff)
        out = Poly.zero(self.dim)
        if coeff != 0:
            out.terms = {vec_add(e, exponent): c * coeff for e, c in self.terms.items()}
        return out

    def scale(self, coeff) -> "Poly":
        return self.term_mul(coeff, (0,) * self.dim)

    # -- inspection ------------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.dim == other.dim and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        if not self.terms:
            return "Poly(0)"
        parts = [f"{c}*x^{e}" for e, c in sorted(self.terms.items())]
        return "Poly(" + " + ".join(parts) + ")"

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponent), Fraction(0))

    def support(self) -> list[Exponent]:
        return sorted(self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {degree(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial."""
        if not self.terms:
            raise DomainError("zero polynomial has no degree")
        degrees = {degree(e) for e in self.terms}
        if len(degrees) > 1:
            raise DomainError("polynomial is not homogeneous")
        return degrees.pop()

    def leading_exponent(self, order: MonomialOrder) -> Exponent:
        if not self.terms:
            raise DomainError("zero polynomial has no leading data")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_exponent(order)]

    def monic(self, order: MonomialOrder) -> "Poly":
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return self.scale(Fraction(1, 1) / lc)

    def primitive(self) -> "Poly":
        """Integer-scaled copy with content 1; keeps intermediate numbers small."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator * (den // c.denominator)))
        return self.scale(Fraction(den, num))


class LeadingData(NamedTuple):
    le: Exponent
    lc: Fraction
    order: MonomialOrder


def leading_data(f: Poly, order: MonomialOrder) -> LeadingData:
    """Leading exponent and coefficient of a nonzero polynomial."""
    le = f.leading_exponent(order)
    return LeadingData(le, f.terms[le], order)


def normal_form(f: Poly, divisors: Sequence[Poly], order: MonomialOrder) -> Poly:
    """Remainder of f on division by the sequence of divisors.

    Deterministic: the order-largest term still reducible is cancelled by
    the first divisor in sequence order whose leading exponent divides it.
    No term of the result is divisible by any divisor's leading exponent.
    """
    for g in divisors:
        if not g:
            raise DomainError("zero divisor in normal form computation")
    leads = [(g.leading_exponent(order), g.leading_coefficient(order), g) for g in divisors]
    remainder: dict[Exponent, Fraction] = {}
    p = Poly(f.dim, f.terms)
    while p.terms:
        e = max(p.terms, key=order.key)
        c = p.terms[e]
        for le, lc, g in leads:
            if divides(le, e):
                p = p - g.term_mul(c / lc, vec_sub(e, le))
                break
        else:
            remainder[e] = c
            del p.terms[e]
    out = Poly.zero(f.dim)
    out.terms = remainder
    return out


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    """S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g."""
    if not f or not g:
        raise DomainError("S-polynomial of the zero polynomial")
    lf, lg = f.leading_exponent(order), g.leading_exponent(order)
    l = vec_lcm(lf, lg)
    return (f.term_mul(1 / f.terms[lf], vec_sub(l, lf))
            - g.term_mul(1 / g.terms[lg], vec_sub(l, lg)))


class GroebnerBasis(NamedTuple):
    generators: tuple[Poly, ...]
    order: MonomialOrder
    reduced: bool

    def leading_exponents(self) -> list[Exponent]:
        return [g.leading_exponent(self.order) for g in self.generators]

    def is_zero_ideal(self) -> bool:
        return not self.generators


def _interreduce(basis: list[Poly], order: MonomialOrder) -> list[Poly]:
    """Minimalize leading exponents, then fully reduce every tail."""
    basis = sorted(basis, key=lambda g: order.key(g.leading_exponent(order)))
    minimal: list[Poly] = []
    for g in basis:
        le = g.leading_exponent(order)
        if not any(divides(h.leading_exponent(order), le) for h in minimal):
            minimal.append(g)
    reduced: list[Poly] = []
    for i, g in enumerate(minimal):
        others = reduced + minimal[i + 1:]
        r = normal_form(g, others, order) if others else g
        reduced.append(r.monic(order))
    return reduced


def buchberger(generators: Iterable[Poly], order: MonomialOrder) -> GroebnerBasis:
    """The unique reduced Groebner basis of the ideal the generators span.

    Normal pair-selection strategy (smallest lcm degree first, ties broken
    by the order), with the coprime leading-term criterion.  The zero ideal
    yields an empty basis.
    """
    basis = [g.primitive() for g in generators if g]
    if not basis:
        return GroebnerBasis((), order, True)

    def le(i: int) -> Exponent:
        return basis[i].leading_exponent(order)

    def pair_key(i: int, j: int):
        l = vec_lcm(le(i), le(j))
        return (degree(l), order.key(l), i, j)

    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    while pairs:
        i, j = min(pairs, key=lambda p: pair_key(*p))
        pairs.discard((i, j))
        li, lj = le(i), le(j)
        if vec_lcm(li, lj) == vec_add(li, lj):
            continue
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            basis.append(r.primitive())
            k = len(basis) - 1
            pairs.update((k, m) for m in range(k))
    return GroebnerBasis(tuple(_interreduce(basis, order)), order, True)
