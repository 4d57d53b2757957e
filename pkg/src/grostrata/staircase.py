"""Standard sets (monomial staircases) represented by their corner sets.

A standard set D in N^(n+1) is the complement of a monomial ideal's
exponent set.  It is stored by the finite antichain C(D) of corners, the
exponents of the minimal generators of the ideal.  Two degenerate cases:
an empty corner set encodes D = N^(n+1) (the zero ideal) and the corner
set {0} encodes D = {} (the unit ideal).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, NamedTuple, Optional

from .errors import DimensionMismatch, DomainError, InternalConsistencyError
from .hilbert import HilbertPolynomial, binomial_poly
from .orders import (
    Exponent,
    degree,
    divides,
    unit_vectors,
    vec_add,
    vec_lcm,
    vec_sub,
    vector,
    vectors_of_degree,
)

MAX_CORNERS_FOR_HILBERT = 20


class EdgeTriple(NamedTuple):
    """(epsilon; lam, mu): epsilon in D, epsilon+lam and epsilon+mu on the
    border, epsilon+lam+mu a corner of D union border."""

    epsilon: Exponent
    lam: Exponent
    mu: Exponent


def minimalize(vectors_in: Iterable[Exponent]) -> frozenset[Exponent]:
    """Drop every vector that is divisible by a different one."""
    vs = sorted(set(vectors_in), key=lambda v: (degree(v), v))
    keep: list[Exponent] = []
    for v in vs:
        if not any(divides(w, v) for w in keep):
            keep.append(v)
    return frozenset(keep)


@dataclass(frozen=True)
class StandardSet:
    dim: int
    corners: frozenset[Exponent]

    @staticmethod
    def from_corners(candidates: Iterable[Iterable[int]], dim: Optional[int] = None) -> "StandardSet":
        vs = [vector(c) for c in candidates]
        if dim is None:
            if not vs:
                raise DomainError("empty corner set needs an explicit dimension")
            dim = len(vs[0])
        for v in vs:
            if len(v) != dim:
                raise DimensionMismatch(f"corner {v} has dimension {len(v)}, expected {dim}")
        return StandardSet(dim, minimalize(vs))

    # -- membership and basic derived sets ---------------------------------

    def is_empty(self) -> bool:
        return (0,) * self.dim in self.corners

    def is_whole_space(self) -> bool:
        return not self.corners

    def contains(self, beta: Iterable[int]) -> bool:
        b = tuple(beta)
        if len(b) != self.dim:
            raise DimensionMismatch(f"point {b} has dimension {len(b)}, expected {self.dim}")
        return not any(divides(c, b) for c in self.corners)

    def slice(self, t: int) -> list[Exponent]:
        """Degree-t elements of the set, lexicographically sorted."""
        return [v for v in vectors_of_degree(t, self.dim) if self.contains(v)]

    def complement_slice(self, t: int) -> list[Exponent]:
        return [v for v in vectors_of_degree(t, self.dim) if not self.contains(v)]

    def is_border(self, alpha: Iterable[int]) -> bool:
        a = tuple(alpha)
        if self.contains(a):
            return False
        for i in range(self.dim):
            if a[i] > 0:
                below = a[:i] + (a[i] - 1,) + a[i + 1:]
                if self.contains(below):
                    return True
        return False

    def border_slice(self, t: int) -> list[Exponent]:
        return [v for v in vectors_of_degree(t, self.dim) if self.is_border(v)]

    def _corner_coord_max(self) -> tuple[int, ...]:
        return tuple(max(c[j] for c in self.corners) for j in range(self.dim))

    def max_corner_degree(self) -> int:
        if not self.corners:
            return 0
        return max(degree(c) for c in self.corners)

    def min_corner_degree(self) -> int:
        if not self.corners:
            return 0
        return min(degree(c) for c in self.corners)

    # -- saturation ---------------------------------------------------------

    def top_points(self) -> frozenset[Exponent]:
        """Points of the set whose every coordinate successor leaves it.

        A top point tau satisfies tau_j < c_j for some corner c in every
        direction j, so the box 0 <= tau_j <= max corner j-coordinate is
        exhaustive.
        """
        if self.is_whole_space():
            return frozenset()
        units = unit_vectors(self.dim)
        bounds = self._corner_coord_max()
        tops = []
        for tau in product(*(range(b + 1) for b in bounds)):
            if not self.contains(tau):
                continue
            if all(not self.contains(vec_add(tau, e)) for e in units):
                tops.append(tau)
        return frozenset(tops)

    def is_saturated(self) -> bool:
        return not self.top_points()

    def saturation_step(self) -> "StandardSet":
        """Remove the top points; the result is again a standard set."""
        tops = self.top_points()
        if not tops:
            return self
        return StandardSet(self.dim, minimalize(self.corners | tops))

    def saturate(self) -> tuple["StandardSet", int]:
        """Iterate saturation_step to its fixpoint; returns (fixpoint, steps)."""
        current = self
        steps = 0
        while True:
            nxt = current.saturation_step()
            if nxt == current:
                return current, steps
            current = nxt
            steps += 1

    # -- truncation ---------------------------------------------------------

    def truncate(self, r: int) -> "StandardSet":
        """Standard set of the ideal's degree >= r part:
        corners are the degree-r complement slice plus the corners of degree >= r."""
        if r < 0:
            raise DomainError("truncation degree must be non-negative")
        if r == 0:
            return self
        new_corners = set(self.complement_slice(r))
        new_corners.update(c for c in self.corners if degree(c) >= r)
        return StandardSet(self.dim, minimalize(new_corners))

    def is_truncation(self, r: int) -> bool:
        return self.truncate(r) == self

    # -- complete intersections ---------------------------------------------

    def ci_matrix(self) -> list[Exponent]:
        """Corner coordinates as matrix rows, lexicographically sorted."""
        if not self.corners:
            raise DomainError("no corners: the whole space has no corner matrix")
        return sorted(self.corners)

    def defines_complete_intersection(self) -> bool:
        """True iff the corner matrix has at most n rows and per-column at
        most one non-zero entry."""
        if self.is_whole_space() or self.is_empty():
            raise DomainError("complete-intersection test needs a proper non-empty set")
        rows = self.ci_matrix()
        if len(rows) > self.dim - 1:
            return False
        for j in range(self.dim):
            if sum(1 for row in rows if row[j] != 0) > 1:
                return False
        return True

    # -- edge triples ---------------------------------------------------------

    def union_border(self) -> "StandardSet":
        """The standard set D union B(D), computed through a certified corner search.

        Candidates live in the box 0 <= g_j <= (max corner j-coordinate)+1;
        the result is re-checked against pointwise membership on all degree
        slices up to (max corner degree)+2.
        """
        if self.is_whole_space():
            return self
        if self.is_empty():
            return self

        def in_union(v: Exponent) -> bool:
            return self.contains(v) or self.is_border(v)

        units = unit_vectors(self.dim)
        bounds = self._corner_coord_max()
        found = []
        for g in product(*(range(b + 2) for b in bounds)):
            if in_union(g):
                continue
            ok = True
            for i, e in enumerate(units):
                if g[i] > 0 and not in_union(vec_sub(g, e)):
                    ok = False
                    break
            if ok:
                found.append(g)
        result = StandardSet(self.dim, minimalize(found))
        for t in range(self.max_corner_degree() + 3):
            for v in vectors_of_degree(t, self.dim):
                if result.contains(v) != in_union(v):
                    raise InternalConsistencyError(
                        f"corner search for the bordered set missed {v} at degree {t}")
        return result

    def edge_triples(self) -> list[EdgeTriple]:
        """All triples (epsilon; lam, mu), lam index < mu index, sorted."""
        if self.is_whole_space() or self.is_empty():
            return []
        units = unit_vectors(self.dim)
        triples = []
        for c in sorted(self.union_border().corners):
            for i, j in combinations(range(self.dim), 2):
                if c[i] < 1 or c[j] < 1:
                    continue
                eps = vec_sub(vec_sub(c, units[i]), units[j])
                if (self.contains(eps)
                        and self.is_border(vec_add(eps, units[i]))
                        and self.is_border(vec_add(eps, units[j]))):
                    triples.append(EdgeTriple(eps, units[i], units[j]))
        return sorted(triples)

    # -- Hilbert data ---------------------------------------------------------

    def hilbert_function(self, t: int) -> int:
        return len(self.slice(t))

    def hilbert_polynomial(self) -> tuple[HilbertPolynomial, int]:
        """The polynomial P with P(t) = #(degree-t slice) for t >= t0, and t0.

        Inclusion-exclusion over corner subsets:
        P(t) = sum_{S subset of C} (-1)^|S| binom(t + n - |lcm S|, n).
        """
        if self.is_empty():
            return HilbertPolynomial.zero(), 0
        n = self.dim - 1
        corners = sorted(self.corners)
        if len(corners) > MAX_CORNERS_FOR_HILBERT:
            raise DomainError(
                f"Hilbert polynomial limited to {MAX_CORNERS_FOR_HILBERT} corners, got {len(corners)}")
        acc = [Fraction(0)] * (n + 1)
        t0 = 0
        for size in range(len(corners) + 1):
            for subset in combinations(corners, size):
                m = (0,) * self.dim
                for v in subset:
                    m = vec_lcm(m, v)
                t0 = max(t0, degree(m))
                term = binomial_poly(n - degree(m), n)
                if size % 2 == 0:
                    for i, c in enumerate(term.coeffs):
                        acc[i] += c
                else:
                    for i, c in enumerate(term.coeffs):
                        acc[i] -= c
        return HilbertPolynomial.from_coeffs(acc), t0

    def dimension(self) -> int:
        """Degree of the Hilbert polynomial; -1 for the empty scheme."""
        p, _ = self.hilbert_polynomial()
        return p.degree

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {"n_plus_1": self.dim, "corners": [list(c) for c in sorted(self.corners)]}

    @staticmethod
    def from_json(doc: dict) -> "StandardSet":
        try:
            dim = int(doc["n_plus_1"])
            corners = doc["corners"]
        except (KeyError, TypeError, ValueError) as exc:
            raise DomainError(f"malformed standard-set document: {exc}") from None
        return StandardSet.from_corners(corners, dim=dim)


def new_standard_set(candidates: Iterable[Iterable[int]], dim: Optional[int] = None) -> StandardSet:
    return StandardSet.from_corners(candidates, dim=dim)
