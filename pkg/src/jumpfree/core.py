"""Points of N^k, order signatures, coordinate fields, and cube detection.

Everything here is finite and immutable: a point is a plain tuple of
nonnegative ints, a cube is a sorted element set plus the arity of the
Cartesian power it spans, and every operation is a pure function.  Arity
k = 1 is allowed throughout this module; the theorem-level searches add
their own k >= 2 guards.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

KTuple = tuple[int, ...]


def as_ktuple(coords: Sequence[int]) -> KTuple:
    """Validate a coordinate sequence and return it as a plain tuple."""
    t = tuple(coords)
    if not t:
        raise ValueError("a point needs arity k >= 1")
    for c in t:
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ValueError(f"coordinates must be nonnegative integers, got {c!r}")
    return t


def min_max(x: KTuple) -> tuple[int, int]:
    """Coordinate-wise minimum and maximum of a point."""
    return min(x), max(x)


def order_signature(x: KTuple) -> KTuple:
    """Dense-rank signature of a point.

    Position i carries the number of distinct coordinate values strictly
    below x[i].  Two points get equal signatures exactly when they are
    order equivalent, which order_equivalent() checks by the literal
    pairwise definition.
    """
    ranks = {v: r for r, v in enumerate(sorted(set(x)))}
    return tuple(ranks[v] for v in x)


def order_equivalent(x: KTuple, y: KTuple) -> bool:
    """Whether two points of equal arity realize the same coordinate order.

    Compares the strict-inequality index set {(i,j) | x[i] < x[j]} and the
    equality index set {(i,j) | x[i] = x[j]} of both points literally.
    Deliberately independent of order_signature so the two implementations
    can cross-check each other.
    """
    if len(x) != len(y):
        raise ValueError(f"arity mismatch: {len(x)} vs {len(y)}")
    idx = range(len(x))
    lt_x = {(i, j) for i in idx for j in idx if x[i] < x[j]}
    lt_y = {(i, j) for i in idx for j in idx if y[i] < y[j]}
    if lt_x != lt_y:
        return False
    eq_x = {(i, j) for i in idx for j in idx if x[i] == x[j]}
    eq_y = {(i, j) for i in idx for j in idx if y[i] == y[j]}
    return eq_x == eq_y


def enumerate_order_types(k: int) -> list[KTuple]:
    """All order signatures of arity k, in lexicographic order.

    Points over {0, ..., k-1} realize every class (a signature is its own
    representative), so brute force over that grid is exhaustive.  The
    count is the number of ordered set partitions of k items; k^k is a
    coarse upper bound.
    """
    if k < 1:
        raise ValueError("arity k must be >= 1")
    return sorted({order_signature(t) for t in itertools.product(range(k), repeat=k)})


def field_of(tuples: Iterable[KTuple]) -> tuple[int, ...]:
    """Sorted set of all coordinates appearing in a collection of points.

    Empty input yields the empty tuple; mixed arities are rejected.
    """
    coords: set[int] = set()
    k = None
    for t in tuples:
        if k is None:
            k = len(t)
        elif len(t) != k:
            raise ValueError(f"mixed arities in point set: {k} and {len(t)}")
        coords.update(t)
    return tuple(sorted(coords))


@dataclass(frozen=True)
class Cube:
    """A strictly increasing element set E plus the arity k of its power E^k."""

    elements: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValueError("cube needs at least one element")
        if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in self.elements):
            raise ValueError("cube elements must be nonnegative integers")
        if any(a >= b for a, b in zip(self.elements, self.elements[1:])):
            raise ValueError(f"cube elements must be strictly increasing, got {self.elements}")
        if self.k < 1:
            raise ValueError("cube arity must be >= 1")

    @property
    def p(self) -> int:
        return len(self.elements)

    @property
    def min_element(self) -> int:
        return self.elements[0]

    def points(self) -> Iterator[KTuple]:
        """All p^k points of the Cartesian power, in lexicographic order."""
        return itertools.product(self.elements, repeat=self.k)

    def contains(self, x: KTuple) -> bool:
        elems = set(self.elements)
        return len(x) == self.k and all(c in elems for c in x)

    def to_json_dict(self) -> dict:
        return {"elements": list(self.elements), "k": self.k}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Cube":
        return cls(tuple(int(e) for e in data["elements"]), int(data["k"]))


def cubes_in(domain: Iterable[KTuple], p: int) -> list[Cube]:
    """Every cube of p elements whose full Cartesian power lies inside domain.

    Backtracks over the sorted field of the domain; a partial element set is
    abandoned as soon as one of the points it requires is absent.  Results
    come in lexicographic order of the element sets, which keeps every
    downstream search deterministic.
    """
    if p < 1:
        raise ValueError("cube size p must be >= 1")
    points = set(domain)
    if not points:
        return []
    k = len(next(iter(points)))
    fld = field_of(points)

    def extension_ok(partial: tuple[int, ...], e: int) -> bool:
        # Only points that use the new element need checking; the rest were
        # validated when the partial set was built.
        cand = partial + (e,)
        for t in itertools.product(cand, repeat=k):
            if e in t and t not in points:
                return False
        return True

    found: list[Cube] = []

    def extend(partial: tuple[int, ...], start: int) -> None:
        if len(partial) == p:
            found.append(Cube(partial, k))
            return
        for i in range(start, len(fld)):
            if len(fld) - i < p - len(partial):
                break
            e = fld[i]
            if extension_ok(partial, e):
                extend(partial + (e,), i + 1)

    extend((), 0)
    return found
