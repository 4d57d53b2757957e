"""Exponent vectors and monomial orders.

An exponent vector is a plain tuple of n+1 non-negative integers; the
vector (a0, ..., an) stands for the monomial x0^a0 * ... * xn^an.  All
orders here are global monomial orders: total, translation invariant and
with 0 as the minimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DomainError

Exponent = tuple[int, ...]


def vector(coords: Iterable[int]) -> Exponent:
    """Validate and normalize an exponent vector to a tuple."""
    v = tuple(int(c) for c in coords)
    if any(c < 0 for c in v):
        raise DomainError(f"negative exponent in {v}")
    return v


def check_same_dim(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatch(f"dimension mismatch: {len(a)} vs {len(b)}")


def degree(a: Sequence[int]) -> int:
    """Total degree |a| = a0 + ... + an."""
    return sum(a)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    """True iff b - a has no negative coordinate (x^a divides x^b)."""
    check_same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def vec_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Exponent, b: Exponent) -> Exponent:
    """a - b, assuming divisibility was checked by the caller."""
    return tuple(x - y for x, y in zip(a, b))


def vec_lcm(a: Exponent, b: Exponent) -> Exponent:
    """Coordinatewise max (exponent of lcm of the monomials)."""
    return tuple(max(x, y) for x, y in zip(a, b))


def unit_vectors(dim: int) -> tuple[Exponent, ...]:
    """All dim canonical unit vectors e0, ..., e_{dim-1}."""
    return tuple(tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim))


def _grevlex_key(a: Sequence[int]):
    return (sum(a), tuple(-c for c in reversed(a)))


@dataclass(frozen=True)
class MonomialOrder:
    """One of lex, grlex, grevlex or the block order elim(k).

    elim(k) compares the first block (variables 0..k) by grevlex and breaks
    ties by grevlex on the remaining variables; it is used internally to
    eliminate auxiliary variables and is not exposed on the CLI.
    """

    kind: str
    block: int = -1

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "grevlex", "elim"):
            raise DomainError(f"unknown order kind {self.kind!r}")
        if self.kind == "elim" and self.block < 0:
            raise DomainError("elim order needs a block size")

    def key(self, a: Sequence[int]):
        """Sort key: key(a) < key(b) iff a precedes b under the order."""
        if self.kind == "lex":
            return tuple(a)
        if self.kind == "grlex":
            return (sum(a), tuple(a))
        if self.kind == "grevlex":
            return _grevlex_key(a)
        k = self.block + 1
        return (_grevlex_key(a[:k]), _grevlex_key(a[k:]))

    def compare(self, a: Sequence[int], b: Sequence[int]) -> int:
        """-1, 0 or +1 as a precedes, equals or succeeds b."""
        check_same_dim(a, b)
        ka, kb = self.key(a), self.key(b)
        if ka < kb:
            return -1
        if ka > kb:
            return 1
        return 0

    def sorted(self, vectors: Iterable[Sequence[int]], reverse: bool = False) -> list[Exponent]:
        return [tuple(v) for v in sorted(vectors, key=self.key, reverse=reverse)]

    def max(self, vectors: Iterable[Sequence[int]]) -> Exponent:
        return tuple(max(vectors, key=self.key))

    def name(self) -> str:
        if self.kind == "elim":
            return f"elim({self.block})"
        return self.kind


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(block: int) -> MonomialOrder:
    """Block order whose first block is variables 0..block."""
    return MonomialOrder("elim", block)


_BY_NAME = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


def order_by_name(name: str) -> MonomialOrder:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise DomainError(f"unknown order {name!r}; expected lex, grlex or grevlex") from None


def compare(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    return order.compare(a, b)


def vectors_of_degree(deg: int, dim: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, lexicographically sorted."""
    if dim == 0:
        return [()] if deg == 0 else []
    out: list[Exponent] = []

    def rec(prefix: list[int], remaining: int, slots: int):
        if slots == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for c in range(remaining, -1, -1):
            rec(prefix + [c], remaining - c, slots - 1)

    rec([], deg, dim)
    out.sort()
    return out


def vectors_up_to_degree(deg: int, dim: int) -> list[Exponent]:
    out: list[Exponent] = []
    for d in range(deg + 1):
        out.extend(vectors_of_degree(d, dim))
    return out
