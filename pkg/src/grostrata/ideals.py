"""Ideal-level operations: initial standard set, reduced-basis checking,
truncation, colon by the irrelevant ideal and saturation.

Saturation and ideal intersection use the classical auxiliary-variable
constructions: an extra variable t is adjoined in front and eliminated
with a block order, so (I : x_i^oo) = (I + <1 - t*x_i>) inter k[x] and
I inter J = (t*I + (1-t)*J) inter k[x].
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError
from .orders import MonomialOrder, divides, elimination_order, vec_sub, vectors_of_degree
from .poly import GroebnerBasis, Poly, buchberger, normal_form, s_polynomial
from .staircase import StandardSet


def initial_standard_set(generators: Iterable[Poly], order: MonomialOrder) -> StandardSet:
    """Standard set of the initial ideal: corners are the reduced basis'
    leading exponents."""
    gens = [g for g in generators if g]
    if not gens:
        raise DomainError("the zero ideal has no initial standard set")
    gb = buchberger(gens, order)
    return StandardSet.from_corners(gb.leading_exponents(), dim=gens[0].dim)


def is_reduced_gb_for(delta: StandardSet, basis: Sequence[Poly], order: MonomialOrder) -> bool:
    """True iff basis is a homogeneous reduced Groebner basis whose initial
    standard set is exactly delta: monic homogeneous members, leading
    exponents bijective with the corners, tails supported in delta, and
    every S-polynomial reducing to zero."""
    gens = list(basis)
    if any(not g for g in gens):
        return False
    if any(g.dim != delta.dim for g in gens):
        return False
    leads = []
    for g in gens:
        if not g.is_homogeneous():
            return False
        le = g.leading_exponent(order)
        if g.terms[le] != 1:
            return False
        leads.append(le)
        for e in g.terms:
            if e != le and not delta.contains(e):
                return False
    if len(set(leads)) != len(leads) or set(leads) != set(delta.corners):
        return False
    for f, g in combinations(gens, 2):
        if normal_form(s_polynomial(f, g, order), gens, order):
            return False
    return True


def _require_homogeneous(generators: Sequence[Poly]) -> None:
    for g in generators:
        if not g.is_homogeneous():
            raise DomainError("operation needs homogeneous generators")


def truncate_ideal(generators: Iterable[Poly], r: int, order: MonomialOrder) -> GroebnerBasis:
    """Reduced basis of the degree >= r part of a homogeneous ideal."""
    gens = [g for g in generators if g]
    _require_homogeneous(gens)
    if r < 0:
        raise DomainError("truncation degree must be non-negative")
    if not gens:
        return GroebnerBasis((), order, True)
    gb = buchberger(gens, order)
    if r == 0:
        return gb
    dim = gens[0].dim
    spread: list[Poly] = []
    for g in gb.generators:
        d = g.homogeneous_degree()
        if d >= r:
            spread.append(g)
        else:
            for m in vectors_of_degree(r - d, dim):
                spread.append(g.term_mul(1, m))
    return buchberger(spread, order)


# -- auxiliary-variable plumbing -------------------------------------------


def _lift(f: Poly) -> Poly:
    return Poly(f.dim + 1, {(0,) + e: c for e, c in f.terms.items()})


def _project_t_free(basis: Sequence[Poly]) -> list[Poly]:
    out = []
    for g in basis:
        if all(e[0] == 0 for e in g.terms):
            out.append(Poly(g.dim - 1, {e[1:]: c for e, c in g.terms.items()}))
    return out


def intersect_ideals(a: Sequence[Poly], b: Sequence[Poly], order: MonomialOrder) -> list[Poly]:
    """Generators (a reduced basis) of the intersection of two ideals."""
    if not a or not b:
        return []
    dim = a[0].dim
    t = Poly.monomial((1,) + (0,) * dim)
    one = Poly.constant(dim + 1, 1)
    lifted = [t * _lift(f) for f in a] + [(one - t) * _lift(g) for g in b]
    gb = buchberger(lifted, elimination_order(0))
    return list(buchberger(_project_t_free(gb.generators), order).generators)


def _saturate_wrt_variable(generators: Sequence[Poly], i: int, order: MonomialOrder) -> list[Poly]:
    """(I : x_i^oo) via the Rabinowitsch trick."""
    dim = generators[0].dim
    t_xi = Poly(dim + 1, {tuple(1 if j in (0, i + 1) else 0 for j in range(dim + 1)): Fraction(1)})
    trick = Poly.constant(dim + 1, 1) - t_xi
    lifted = [_lift(f) for f in generators] + [trick]
    gb = buchberger(lifted, elimination_order(0))
    return list(buchberger(_project_t_free(gb.generators), order).generators)


def saturate_ideal(generators: Iterable[Poly], order: MonomialOrder) -> GroebnerBasis:
    """Reduced basis of (I : m^oo) for homogeneous I, as the intersection of
    the saturations with respect to each variable."""
    gens = [g for g in generators if g]
    if not gens:
        raise DomainError("cannot saturate the zero ideal")
    _require_homogeneous(gens)
    dim = gens[0].dim
    current = _saturate_wrt_variable(gens, 0, order)
    for i in range(1, dim):
        current = intersect_ideals(current, _saturate_wrt_variable(gens, i, order), order)
    return buchberger(current, order)


def _colon_by_monomial(generators: Sequence[Poly], exponent, order: MonomialOrder) -> list[Poly]:
    """(I : x^exponent): intersect with the principal monomial ideal, then
    divide each generator exactly."""
    dim = generators[0].dim
    inter = intersect_ideals(generators, [Poly.monomial(exponent)], order)
    out = []
    for h in inter:
        if not all(divides(exponent, e) for e in h.terms):
            raise DomainError(f"intersection element not divisible by x^{tuple(exponent)}")
        out.append(Poly(dim, {vec_sub(e, exponent): c for e, c in h.terms.items()}))
    return out


def colon_by_irrelevant(generators: Iterable[Poly], l: int, order: MonomialOrder) -> GroebnerBasis:
    """Reduced basis of (I : m^l), the intersection of the quotients by all
    degree-l monomials."""
    gens = [g for g in generators if g]
    if not gens:
        raise DomainError("cannot form a colon of the zero ideal")
    _require_homogeneous(gens)
    if l < 1:
        raise DomainError("colon exponent must be positive")
    dim = gens[0].dim
    current: list[Poly] | None = None
    for m in vectors_of_degree(l, dim):
        piece = _colon_by_monomial(gens, m, order)
        current = piece if current is None else intersect_ideals(current, piece, order)
    return buchberger(current or [], order)


def ideals_equal(a: Iterable[Poly], b: Iterable[Poly], order: MonomialOrder) -> bool:
    """Ideal equality through reduced-basis uniqueness."""
    return buchberger(a, order).generators == buchberger(b, order).generators
