"""Symbolic equations of the homogeneous Groebner stratum.

For a standard set D with corners C(D), the stratum lives in the ring
R = Z[T[a|b] : a in C(D), b in D, b < a, |a| = |b|].  The extension family
assigns to every a in D u B(D) a row of R-polynomials (T[a|b])_{b}; the
stratum's defining ideal is spanned by the closure relations I1 (corner
times variable) and the commutation relations I2 (one per edge triple).

A functor point assigns a rational to every ring variable; T[a|b] = c
means the reduced-basis member with leading monomial x^a has normal-form
coefficient c at x^b, i.e. the basis polynomial is x^a - sum c * x^b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

from .errors import DimensionMismatch, DomainError, InternalConsistencyError
from .ideals import is_reduced_gb_for
from .orders import Exponent, MonomialOrder, degree, unit_vectors, vec_add, vec_sub
from .poly import Poly
from .staircase import StandardSet


class TVar(NamedTuple):
    alpha: Exponent
    beta: Exponent

    def __str__(self) -> str:
        return "T[%s|%s]" % (",".join(map(str, self.alpha)), ",".join(map(str, self.beta)))


TMonomial = tuple[TVar, ...]


class TPoly:
    """Integer-coefficient polynomial in the T variables; monomials are
    sorted tuples of variables (multisets)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[TMonomial, int] | None = None):
        clean: dict[TMonomial, int] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[tuple(sorted(m))] = int(c)
        self.terms = clean

    @staticmethod
    def zero() -> "TPoly":
        return TPoly()

    @staticmethod
    def one() -> "TPoly":
        return TPoly({(): 1})

    @staticmethod
    def variable(v: TVar) -> "TPoly":
        return TPoly({(v,): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, TPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "TPoly") -> "TPoly":
        res = dict(self.terms)
        for m, c in other.terms.items():
            s = res.get(m, 0) + c
            if s:
                res[m] = s
            else:
                res.pop(m, None)
        out = TPoly()
        out.terms = res
        return out

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "TPoly":
        if not c:
            return TPoly()
        out = TPoly()
        out.terms = {m: k * c for m, k in self.terms.items()}
        return out

    def __mul__(self, other: "TPoly") -> "TPoly":
        res: dict[TMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(sorted(m1 + m2))
                s = res.get(m, 0) + c1 * c2
                if s:
                    res[m] = s
                else:
                    res.pop(m, None)
        out = TPoly()
        out.terms = res
        return out

    def evaluate(self, assignment: Mapping[TVar, Fraction]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            val = Fraction(c)
            for v in m:
                val *= assignment.get(v, Fraction(0))
                if val == 0:
                    break
            total += val
        return total

    def variables(self) -> set[TVar]:
        return {v for m in self.terms for v in m}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            factors = "*".join(str(v) for v in m)
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = factors
            else:
                body = f"{abs(c)}*{factors}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for sign, body in parts[1:]:
            out += " " + sign + " " + body
        return out

    def __repr__(self) -> str:
        return f"TPoly({self})"


def _check_stratum_input(delta: StandardSet) -> None:
    if delta.is_whole_space():
        raise DomainError("the whole space has no corners, hence no stratum ring")
    if delta.is_empty():
        raise DomainError("the empty standard set has no stratum ring")


def t_ring(delta: StandardSet, order: MonomialOrder) -> list[TVar]:
    """All ring variables, sorted by corner (lex ascending) then tail
    monomial (descending under the order)."""
    _check_stratum_input(delta)
    out = []
    for alpha in sorted(delta.corners):
        betas = order.sorted(delta.slice(degree(alpha)), reverse=True)
        out.extend(TVar(alpha, beta) for beta in betas if order.compare(beta, alpha) < 0)
    return out


class ExtensionFamily:
    """Memoized rows T[a|.] for a in D u B(D), built by the border recursion:
    a Kronecker row on D, a variable row on the corners, and for the rest
    T[a|b] = sum_g T[a-v|g] T[g+v|b] with v the first direction that steps
    back onto the border."""

    def __init__(self, delta: StandardSet, order: MonomialOrder):
        _check_stratum_input(delta)
        self.delta = delta
        self.order = order
        self.units = unit_vectors(delta.dim)
        self._rows: dict[Exponent, dict[Exponent, TPoly]] = {}

    def row(self, alpha: Exponent) -> dict[Exponent, TPoly]:
        if len(alpha) != self.delta.dim:
            raise DimensionMismatch(f"{alpha} vs dimension {self.delta.dim}")
        if self.delta.contains(alpha):
            return {alpha: TPoly.one()}
        cached = self._rows.get(alpha)
        if cached is not None:
            return cached
        if alpha in self.delta.corners:
            row = {beta: TPoly.variable(TVar(alpha, beta))
                   for beta in self.delta.slice(degree(alpha))
                   if self.order.compare(beta, alpha) < 0}
        elif self.delta.is_border(alpha):
            row = self._border_row(alpha)
        else:
            raise DomainError(f"{alpha} is neither in the set, a corner, nor on the border")
        self._rows[alpha] = row
        return row

    def _border_row(self, alpha: Exponent) -> dict[Exponent, TPoly]:
        nu = None
        for i, e in enumerate(self.units):
            if alpha[i] > 0 and self.delta.is_border(vec_sub(alpha, e)):
                nu = e
                break
        if nu is None:
            raise InternalConsistencyError(
                f"no border predecessor for {alpha}; the extension recursion is stuck")
        return self.multiply_row(self.row(vec_sub(alpha, nu)), nu)

    def multiply_row(self, row: Mapping[Exponent, TPoly], step: Exponent) -> dict[Exponent, TPoly]:
        """Row of sum_g row[g] * T[g+step|.]; the formal product of the row
        with one more variable."""
        acc: dict[Exponent, TPoly] = {}
        for gamma, coeff in row.items():
            grown = vec_add(gamma, step)
            if self.delta.contains(grown):
                acc[grown] = acc.get(grown, TPoly.zero()) + coeff
            else:
                for beta, q in self.row(grown).items():
                    acc[beta] = acc.get(beta, TPoly.zero()) + coeff * q
        return {b: p for b, p in acc.items() if p}


def extension_row(delta: StandardSet, order: MonomialOrder,
                  alpha: Exponent) -> dict[Exponent, TPoly]:
    """One-off extension-family row; use ExtensionFamily directly when many
    rows of the same stratum are needed."""
    return ExtensionFamily(delta, order).row(tuple(alpha))


@dataclass(frozen=True)
class SchemeIdeal:
    delta: StandardSet
    order: MonomialOrder
    variables: tuple[TVar, ...]
    i1: tuple[TPoly, ...]
    i2: tuple[TPoly, ...]

    def is_zero(self) -> bool:
        return not self.i1 and not self.i2

    def generators(self) -> tuple[TPoly, ...]:
        return self.i1 + self.i2


def scheme_ideal(delta: StandardSet, order: MonomialOrder) -> SchemeIdeal:
    """Expanded defining equations of the stratum: I1 closure relations and
    I2 edge-triple commutation relations, zero and duplicate generators
    dropped, in a deterministic order."""
    _check_stratum_input(delta)
    fam = ExtensionFamily(delta, order)
    variables = tuple(t_ring(delta, order))

    def emit(target: list[TPoly], seen: set[TPoly], lhs: Mapping[Exponent, TPoly],
             rhs: Mapping[Exponent, TPoly]) -> None:
        betas = sorted(set(lhs) | set(rhs), key=order.key)
        for beta in betas:
            gen = lhs.get(beta, TPoly.zero()) - rhs.get(beta, TPoly.zero())
            if gen and gen not in seen:
                seen.add(gen)
                target.append(gen)

    i1: list[TPoly] = []
    seen1: set[TPoly] = set()
    for alpha in sorted(delta.corners):
        row_alpha = fam.row(alpha)
        for e in fam.units:
            stepped = vec_add(alpha, e)
            if not delta.is_border(stepped):
                continue
            emit(i1, seen1, fam.row(stepped), fam.multiply_row(row_alpha, e))

    i2: list[TPoly] = []
    seen2: set[TPoly] = set()
    for eps, lam, mu in delta.edge_triples():
        left = fam.multiply_row(fam.row(vec_add(eps, lam)), mu)
        right = fam.multiply_row(fam.row(vec_add(eps, mu)), lam)
        emit(i2, seen2, left, right)

    return SchemeIdeal(delta, order, variables, tuple(i1), tuple(i2))


class FunctorPoint:
    """A tail-coefficient assignment defining one ideal with initial set delta."""

    __slots__ = ("delta", "order", "coefficients")

    def __init__(self, delta: StandardSet, order: MonomialOrder,
                 coefficients: Mapping[TVar, Fraction] | None = None):
        self.delta = delta
        self.order = order
        self.coefficients: dict[TVar, Fraction] = dict(coefficients or {})

    def value(self, alpha: Exponent, beta: Exponent) -> Fraction:
        return self.coefficients.get(TVar(alpha, beta), Fraction(0))

    def __eq__(self, other) -> bool:
        return (isinstance(other, FunctorPoint) and self.delta == other.delta
                and self.order == other.order and self.coefficients == other.coefficients)

    def __repr__(self) -> str:
        vals = ", ".join(f"{tv}={val}" for tv, val in sorted(self.coefficients.items()))
        return f"FunctorPoint({sorted(self.delta.corners)}; {vals})"


def make_point(delta: StandardSet, order: MonomialOrder,
               coefficients: Mapping[TVar, Fraction | int]) -> FunctorPoint:
    """Build a functor point, rejecting keys outside the stratum ring."""
    admissible = set(t_ring(delta, order))
    clean: dict[TVar, Fraction] = {}
    for key, val in coefficients.items():
        tv = TVar(tuple(key[0]), tuple(key[1]))
        if tv not in admissible:
            raise DomainError(f"{tv} is not a variable of this stratum ring")
        val = Fraction(val)
        if val != 0:
            clean[tv] = val
    return FunctorPoint(delta, order, clean)


def ingest_coefficient_table(delta: StandardSet, order: MonomialOrder,
                             table: Mapping[tuple, Fraction | int],
                             ) -> tuple[FunctorPoint, list[tuple[TVar, Fraction]]]:
    """Split a full coefficient table into a functor point plus the values
    sitting at structurally-zero positions (tail monomial above the leading
    one); those residues decide K3 membership in the locally-closed test."""
    admissible = set(t_ring(delta, order))
    clean: dict[TVar, Fraction] = {}
    residues: list[tuple[TVar, Fraction]] = []
    for key, val in table.items():
        tv = TVar(tuple(key[0]), tuple(key[1]))
        val = Fraction(val)
        if tv in admissible:
            if val != 0:
                clean[tv] = val
            continue
        if (tv.alpha in delta.corners and delta.contains(tv.beta)
                and degree(tv.alpha) == degree(tv.beta)
                and order.compare(tv.beta, tv.alpha) > 0):
            residues.append((tv, val))
            continue
        raise DomainError(f"{tv} is not a coefficient position of this stratum")
    residues.sort(key=lambda pair: pair[0])
    return FunctorPoint(delta, order, clean), residues


def point_to_basis(point: FunctorPoint) -> list[Poly]:
    """Candidate reduced-basis members x^a - sum c x^b, corners ascending."""
    out = []
    for alpha in sorted(point.delta.corners):
        terms: dict[Exponent, Fraction] = {alpha: Fraction(1)}
        for beta in point.delta.slice(degree(alpha)):
            c = point.value(alpha, beta)
            if c != 0:
                terms[beta] = -c
        out.append(Poly(point.delta.dim, terms))
    return out


def point_from_basis(delta: StandardSet, order: MonomialOrder,
                     basis: Sequence[Poly], validate: bool = False) -> FunctorPoint:
    """Read the coefficient assignment off a reduced basis for delta."""
    if validate and not is_reduced_gb_for(delta, basis, order):
        raise DomainError("basis is not a reduced Groebner basis for this standard set")
    coeffs: dict[TVar, Fraction] = {}
    for g in basis:
        alpha = g.leading_exponent(order)
        if alpha not in delta.corners:
            raise DomainError(f"leading exponent {alpha} is not a corner")
        for e, c in g.terms.items():
            if e != alpha:
                coeffs[TVar(alpha, e)] = -c
    return make_point(delta, order, coeffs)


def specialize(si: SchemeIdeal, point: FunctorPoint) -> list[Fraction]:
    """Residues of all defining equations at the point, in generator order."""
    if point.delta != si.delta or point.order != si.order:
        raise DomainError("point does not match the scheme ideal's standard set and order")
    return [g.evaluate(point.coefficients) for g in si.generators()]


def verify_point(point: FunctorPoint) -> bool:
    """Buchberger oracle: does the candidate basis really have initial set delta?"""
    return is_reduced_gb_for(point.delta, point_to_basis(point), point.order)


def degree_up(delta: StandardSet, order: MonomialOrder, r: int,
              truncated_point: FunctorPoint) -> FunctorPoint:
    """Invert truncation: from a verified point of the stratum of delta(r),
    reconstruct the unique point of the stratum of saturated delta whose
    ideal truncates to it.

    Level by level (degree r-1 down), the unknown row at alpha solves a
    linear system whose chosen minor is unitriangular because tails only
    involve monomials below the leading one; the remaining equations are
    then checked and any inconsistency is a hard failure.
    """
    if r < 1:
        raise DomainError("truncation degree must be positive")
    if delta.is_empty() or delta.is_whole_space():
        raise DomainError("degenerate standard set has no stratum to lift into")
    if not delta.is_saturated():
        raise DomainError("degree-up reconstruction needs a saturated standard set")
    delta_r = delta.truncate(r)
    if truncated_point.delta != delta_r or truncated_point.order != order:
        raise DomainError("input point does not belong to the truncated stratum")
    if not verify_point(truncated_point):
        raise DomainError("input point fails the reduced-basis oracle")

    units = unit_vectors(delta.dim)
    rows: dict[Exponent, dict[Exponent, Fraction]] = {}
    for tv, val in truncated_point.coefficients.items():
        rows.setdefault(tv.alpha, {})[tv.beta] = val
    for alpha in delta_r.corners:
        rows.setdefault(alpha, {})

    def coeff(a: Exponent, b: Exponent) -> Fraction:
        if delta.contains(a):
            return Fraction(1) if a == b else Fraction(0)
        return rows[a].get(b, Fraction(0))

    d = r - 1
    while True:
        outside = delta.complement_slice(d)
        if not outside:
            break
        gammas = order.sorted(delta.slice(d))
        s = len(gammas)
        escapes = []
        for g in gammas:
            for e in units:
                if delta.contains(vec_add(g, e)):
                    escapes.append(e)
                    break
            else:
                raise InternalConsistencyError(f"{g} is a top point of a saturated set")
        for alpha in outside:
            solution = [Fraction(0)] * s
            for j in range(s - 1, -1, -1):
                target = vec_add(gammas[j], escapes[j])
                acc = coeff(vec_add(alpha, escapes[j]), target)
                for i in range(j + 1, s):
                    acc -= solution[i] * coeff(vec_add(gammas[i], escapes[j]), target)
                solution[j] = acc
            for i in range(s):
                if solution[i] != 0 and order.compare(gammas[i], alpha) > 0:
                    raise InternalConsistencyError(
                        f"reconstructed row at {alpha} has a tail above the leading monomial")
            for e in units:
                lhs_alpha = vec_add(alpha, e)
                for beta in delta.slice(d + 1):
                    acc = Fraction(0)
                    for i in range(s):
                        if solution[i] != 0:
                            acc += solution[i] * coeff(vec_add(gammas[i], e), beta)
                    if acc != coeff(lhs_alpha, beta):
                        raise InternalConsistencyError(
                            f"residual equation failed at alpha={alpha}, beta={beta}")
            rows[alpha] = {gammas[i]: solution[i] for i in range(s) if solution[i] != 0}
        d -= 1

    coefficients: dict[TVar, Fraction] = {}
    for alpha in delta.corners:
        for beta, val in rows[alpha].items():
            if val != 0:
                coefficients[TVar(alpha, beta)] = val
    return make_point(delta, order, coefficients)
