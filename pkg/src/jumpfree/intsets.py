"""Interval classification of function values over a cube, parametric
bijections from N onto Z, and the paired integer multisets they induce.

For a point x of the cube power E^k, a value sits in exactly one of three
intervals: [0, min(E)), [min(E), min(x)), or [min(x), oo).  Pushing every
value through its interval's bijection yields the full multiset; omitting
middle-interval contributions yields its counterpart.  The two coincide
exactly when no value lands in the middle interval, which regressive
regularity guarantees.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .core import Cube, KTuple
from .predicates import FiniteFunction

ZIGZAG = "zigzag"
ZIGZAG_NEG = "zigzagneg"
SHIFTED = "shifted"

MULTISET = "multiset"
SET = "set"
SEMANTICS = (MULTISET, SET)

INTERVAL_LOW = 0
INTERVAL_MID = 1
INTERVAL_HIGH = 2


def _zigzag(n: int) -> int:
    # 0, 1, 2, 3, 4, ... -> 0, 1, -1, 2, -2, ...
    return -(n // 2) if n % 2 == 0 else (n + 1) // 2


def _zigzag_inverse(z: int) -> int:
    return 2 * z - 1 if z > 0 else -2 * z


@dataclass(frozen=True)
class ZBijection:
    """A parametric bijection from N onto Z.

    zigzag interleaves positives and negatives starting at 0; zigzagneg is
    its negation; shifted adds a constant offset to zigzag.
    """

    kind: str
    offset: int = 0

    def __post_init__(self) -> None:
        if self.kind not in (ZIGZAG, ZIGZAG_NEG, SHIFTED):
            raise ValueError(f"unknown bijection kind {self.kind!r}")
        if self.kind != SHIFTED and self.offset != 0:
            raise ValueError(f"{self.kind} takes no offset")

    def apply(self, n: int) -> int:
        if n < 0:
            raise ValueError("bijection domain is the nonnegative integers")
        if self.kind == ZIGZAG:
            return _zigzag(n)
        if self.kind == ZIGZAG_NEG:
            return -_zigzag(n)
        return _zigzag(n) + self.offset

    def invert(self, z: int) -> int:
        """The unique n with apply(n) == z."""
        if self.kind == ZIGZAG:
            return _zigzag_inverse(z)
        if self.kind == ZIGZAG_NEG:
            return _zigzag_inverse(-z)
        return _zigzag_inverse(z - self.offset)

    def spec(self) -> str:
        return f"{SHIFTED}:{self.offset}" if self.kind == SHIFTED else self.kind

    @classmethod
    def parse(cls, text: str) -> "ZBijection":
        """Parse "zigzag", "zigzagneg", or "shifted:<offset>"."""
        text = text.strip().lower()
        if text == ZIGZAG:
            return cls(ZIGZAG)
        if text == ZIGZAG_NEG:
            return cls(ZIGZAG_NEG)
        if text.startswith(SHIFTED + ":"):
            return cls(SHIFTED, int(text.split(":", 1)[1]))
        raise ValueError(f"cannot parse bijection {text!r}")


@dataclass(frozen=True)
class GammaTriple:
    """One bijection per interval index."""

    g0: ZBijection
    g1: ZBijection
    g2: ZBijection

    def __getitem__(self, i: int) -> ZBijection:
        return (self.g0, self.g1, self.g2)[i]

    def to_json_dict(self) -> dict:
        return {"g0": self.g0.spec(), "g1": self.g1.spec(), "g2": self.g2.spec()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GammaTriple":
        return cls(*(ZBijection.parse(data[key]) for key in ("g0", "g1", "g2")))

    @classmethod
    def parse(cls, text: str) -> "GammaTriple":
        """Parse a comma-separated triple like "zigzag,zigzag,shifted:10"."""
        parts = text.split(",")
        if len(parts) != 3:
            raise ValueError(f"expected three comma-separated bijections, got {text!r}")
        return cls(*(ZBijection.parse(p) for p in parts))


DEFAULT_GAMMAS = GammaTriple(ZBijection(ZIGZAG), ZBijection(ZIGZAG), ZBijection(ZIGZAG))


class IntMultiset:
    """Multiset of integers with explicit multiplicities.

    Equality compares support and multiplicities; len() is the total size
    counting repeats.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Optional[Mapping[int, int]] = None):
        self._counts: Counter = Counter()
        if counts:
            for v, m in counts.items():
                self.add(v, m)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "IntMultiset":
        ms = cls()
        for v in values:
            ms.add(v)
        return ms

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "IntMultiset":
        ms = cls()
        for v, m in pairs:
            ms.add(int(v), int(m))
        return ms

    def add(self, value: int, multiplicity: int = 1) -> None:
        if not isinstance(value, int) or isinstance(value, bool):
            raise ValueError(f"multiset values must be integers, got {value!r}")
        if multiplicity < 1:
            raise ValueError("multiplicity must be >= 1")
        self._counts[value] += multiplicity

    def count(self, value: int) -> int:
        return self._counts[value]

    def items(self) -> list[tuple[int, int]]:
        """Sorted (value, multiplicity) pairs."""
        return sorted(self._counts.items())

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._counts))

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def negated(self) -> "IntMultiset":
        return IntMultiset({-v: m for v, m in self._counts.items()})

    def to_json(self) -> list[list[int]]:
        return [[v, m] for v, m in self.items()]

    def __iter__(self):
        for v, m in self.items():
            yield from [v] * m

    def __contains__(self, value: int) -> bool:
        return self._counts[value] > 0

    def __len__(self) -> int:
        return self.total

    def __bool__(self) -> bool:
        return self.total > 0

    def __eq__(self, other) -> bool:
        if isinstance(other, IntMultiset):
            return self._counts == other._counts
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}:{m}" for v, m in self.items())
        return f"IntMultiset({{{inner}}})"


def classify_interval(f: FiniteFunction, cube: Cube, x: KTuple) -> int:
    """Index of the interval holding f(x): 0, 1, or 2.

    The middle interval [min(E), min(x)) depends on x; it is empty whenever
    min(x) equals the cube minimum, so constant-diagonal points can only
    land in 0 or 2.
    """
    if not cube.contains(x):
        raise ValueError(f"point {x} lies outside the cube power")
    if x not in f.entries:
        raise ValueError(f"point {x} not in domain of {f.id}")
    v = f(x)
    if v < cube.min_element:
        return INTERVAL_LOW
    if v < min(x):
        return INTERVAL_MID
    return INTERVAL_HIGH


def build_fh(
    f: FiniteFunction,
    cube: Cube,
    gammas: GammaTriple = DEFAULT_GAMMAS,
    semantics: str = MULTISET,
) -> tuple[IntMultiset, IntMultiset]:
    """The paired integer multisets induced by f over the cube power.

    Every point's value is pushed through its interval's bijection.  The
    first multiset collects all contributions; the second omits the middle
    interval.  Under multiset semantics each of the p^k points contributes
    once, so the first multiset always has total size p^k.  Under set
    semantics the values are deduplicated per interval and the images
    combined as plain sets, so coincidences between bijection ranges can
    mask middle-interval contributions.
    """
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}, expected one of {SEMANTICS}")
    if f.k < 2:
        raise ValueError("construction requires arity k >= 2")
    if cube.p < 2:
        raise ValueError("cube needs at least 2 elements")
    if cube.k != f.k:
        raise ValueError(f"cube arity {cube.k} does not match function arity {f.k}")
    for x in cube.points():
        if x not in f.entries:
            raise ValueError(f"cube power not contained in domain of {f.id}: missing {x}")

    if semantics == MULTISET:
        full, partial = IntMultiset(), IntMultiset()
        for x in cube.points():
            i = classify_interval(f, cube, x)
            z = gammas[i].apply(f(x))
            full.add(z)
            if i != INTERVAL_MID:
                partial.add(z)
        return full, partial

    per_interval: list[set[int]] = [set(), set(), set()]
    for x in cube.points():
        per_interval[classify_interval(f, cube, x)].add(f(x))
    images = [{gammas[i].apply(v) for v in per_interval[i]} for i in range(3)]
    full = IntMultiset.from_values(sorted(images[0] | images[1] | images[2]))
    partial = IntMultiset.from_values(sorted(images[0] | images[2]))
    return full, partial


def fh_equal(first: IntMultiset, second: IntMultiset) -> bool:
    """Multiset equality: identical support and multiplicities."""
    return first == second
