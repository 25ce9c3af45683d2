"""Decision procedures over finite functions on N^k.

Covers reflexivity, predecessor sets, the pairwise and family-wide
jump-free checks, universe-relative fullness, and the per-order-type
regressive-regularity classifier.  All checks are pure; counterexamples
are returned as explicit witness records, and witness selection is
canonical (enumeration order, then lexicographic point order) so serial
and parallel callers agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import Cube, KTuple, as_ktuple, field_of, order_signature

CASE1 = "case1"
CASE2 = "case2"
VIOLATED = "violated"


@dataclass
class FiniteFunction:
    """A finite association from points of N^k to values in N.

    The domain is the set of entry keys; it is duplicate-free by
    construction.  Values may be arbitrary nonnegative integers:
    reflexivity is checked by is_reflexive(), never assumed, so
    non-reflexive functions can serve as counterexamples.  Treat
    instances as immutable once built.
    """

    id: str
    k: int
    entries: dict[KTuple, int]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("arity k must be >= 1")
        normalized: dict[KTuple, int] = {}
        for t, v in self.entries.items():
            t = as_ktuple(t)
            if len(t) != self.k:
                raise ValueError(f"{self.id}: domain point {t} has arity {len(t)}, expected {self.k}")
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{self.id}: value at {t} must be a nonnegative integer, got {v!r}")
            normalized[t] = v
        self.entries = normalized

    def __call__(self, x: KTuple) -> int:
        return self.entries[x]

    @property
    def domain(self):
        """Set-like view of the domain points."""
        return self.entries.keys()

    def domain_sorted(self) -> list[KTuple]:
        return sorted(self.entries)

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "k": self.k,
            "entries": [[list(t), v] for t, v in sorted(self.entries.items())],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "FiniteFunction":
        entries = {tuple(int(c) for c in t): int(v) for t, v in data["entries"]}
        return cls(id=str(data["id"]), k=int(data["k"]), entries=entries)


@dataclass
class Family:
    """An ordered collection of finite functions sharing one arity."""

    k: int
    members: tuple[FiniteFunction, ...]

    def __post_init__(self) -> None:
        self.members = tuple(self.members)
        ids = [m.id for m in self.members]
        if len(set(ids)) != len(ids):
            raise ValueError("family member ids must be unique")
        for m in self.members:
            if m.k != self.k:
                raise ValueError(f"member {m.id} has arity {m.k}, family expects {self.k}")

    def __len__(self) -> int:
        return len(self.members)

    def member(self, member_id: str) -> FiniteFunction:
        for m in self.members:
            if m.id == member_id:
                return m
        raise KeyError(member_id)

    def to_json_dict(self) -> dict:
        return {"k": self.k, "members": [m.to_json_dict() for m in self.members]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Family":
        members = tuple(FiniteFunction.from_json_dict(m) for m in data["members"])
        return cls(k=int(data["k"]), members=members)


@dataclass(frozen=True)
class JumpFreeWitness:
    """A concrete refutation of the jump-free implication.

    At point x both functions are defined, the first one's predecessor set
    is contained in the second one's with matching values on it, and yet
    the first one's value drops below the second one's.
    """

    id_a: str
    id_b: str
    x: KTuple
    value_a: int
    value_b: int

    def __post_init__(self) -> None:
        if not self.value_a < self.value_b:
            raise ValueError("witness requires value_a < value_b")

    def to_json_dict(self) -> dict:
        return {
            "idA": self.id_a,
            "idB": self.id_b,
            "x": list(self.x),
            "valueA": self.value_a,
            "valueB": self.value_b,
        }


@dataclass(frozen=True)
class ClassVerdict:
    """Outcome for one order-type class over a cube.

    kind "case1": constant value below the cube minimum (value set).
    kind "case2": every point's value at least its own minimum.
    kind "violated": both cases fail; offender is a point whose value
    drops below its own minimum, and conflict_pair (when present) is a
    pair of (point, value) entries with unequal values showing the
    constant-low case fails.  When conflict_pair is None the class values
    are constant but not below the cube minimum, which offender_value
    already documents.
    """

    kind: str
    value: Optional[int] = None
    offender: Optional[KTuple] = None
    offender_value: Optional[int] = None
    conflict_pair: Optional[tuple[tuple[KTuple, int], tuple[KTuple, int]]] = None

    def to_json_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == CASE1:
            out["value"] = self.value
        if self.kind == VIOLATED:
            out["offender"] = list(self.offender)
            out["offenderValue"] = self.offender_value
            out["conflictPair"] = (
                None
                if self.conflict_pair is None
                else [[list(t), v] for t, v in self.conflict_pair]
            )
        return out


@dataclass
class RegularityReport:
    """Per-order-type verdicts over one cube; overall true iff none violated."""

    per_class: dict[KTuple, ClassVerdict]
    overall: bool

    def violated_classes(self) -> list[KTuple]:
        return [sig for sig, v in self.per_class.items() if v.kind == VIOLATED]

    def to_json_dict(self) -> dict:
        return {
            "overall": self.overall,
            "perClass": {
                "(" + ",".join(map(str, sig)) + ")": verdict.to_json_dict()
                for sig, verdict in self.per_class.items()
            },
        }


def is_reflexive(f: FiniteFunction) -> bool:
    """Whether every value of f is a coordinate of some domain point."""
    fld = set(field_of(f.entries))
    return all(v in fld for v in f.entries.values())


def predecessor_set(domain: Iterable[KTuple], x: KTuple) -> set[KTuple]:
    """Points of the domain whose maximum coordinate is strictly below max(x)."""
    pts = set(domain)
    if x not in pts:
        raise ValueError(f"point {x} is not in the domain")
    mx = max(x)
    return {z for z in pts if max(z) < mx}


def jump_free_violation(fa: FiniteFunction, fb: FiniteFunction) -> Optional[JumpFreeWitness]:
    """First violation of the directional jump-free implication, or None.

    Scans shared points x in lexicographic order.  Where fa's predecessor
    set at x is contained in fb's and both functions agree on it (an empty
    predecessor set satisfies the hypothesis vacuously), fa(x) must not
    drop below fb(x).  Only the (fa, fb) ordering is checked; family-level
    checks cover both orders.
    """
    if fa.k != fb.k:
        raise ValueError(f"arity mismatch: {fa.id} has k={fa.k}, {fb.id} has k={fb.k}")
    shared = sorted(fa.entries.keys() & fb.entries.keys())
    for x in shared:
        mx = max(x)
        a_x = {z for z in fa.entries if max(z) < mx}
        b_x = {z for z in fb.entries if max(z) < mx}
        if a_x <= b_x and all(fa(y) == fb(y) for y in a_x):
            if fa(x) < fb(x):
                return JumpFreeWitness(fa.id, fb.id, x, fa(x), fb(x))
    return None


def is_jump_free_family(fam: Family) -> Optional[JumpFreeWitness]:
    """Check every ordered member pair, self-pairs included.

    Returns the canonically first witness (pair enumeration order, then
    lexicographic point), or None when the family is jump free.  Self-pairs
    can never violate, but including them keeps the quantification literal.
    """
    for fa in fam.members:
        for fb in fam.members:
            witness = jump_free_violation(fa, fb)
            if witness is not None:
                return witness
    return None


def is_full_over(fam: Family, universe: Sequence[Iterable[KTuple]]):
    """First universe domain covered by no member, or None.

    Fullness is only decidable relative to an explicit finite universe of
    domains, so the universe parameter is the scope of the check and must
    be surfaced alongside any verdict.
    """
    covered = {frozenset(m.entries.keys()) for m in fam.members}
    for dom in universe:
        if frozenset(tuple(t) for t in dom) not in covered:
            return dom
    return None


def regressive_regularity(f: FiniteFunction, cube: Cube) -> RegularityReport:
    """Classify f over every order-type class realized in the cube's power.

    Each class must either be constant with a value below the cube's
    minimum element, or have every point's value at least that point's own
    minimum coordinate.  Classes are processed in lexicographic signature
    order; violations record the first offending point.  Values need not
    be reflexive here.
    """
    if f.k < 2:
        raise ValueError("regressive regularity is defined for arity k >= 2")
    if cube.k != f.k:
        raise ValueError(f"cube arity {cube.k} does not match function arity {f.k}")
    if cube.p < 2:
        raise ValueError("cube needs at least 2 elements")

    classes: dict[KTuple, list[KTuple]] = {}
    for x in cube.points():
        if x not in f.entries:
            raise ValueError(f"cube power not contained in domain of {f.id}: missing {x}")
        classes.setdefault(order_signature(x), []).append(x)

    min_e = cube.min_element
    per_class: dict[KTuple, ClassVerdict] = {}
    for sig in sorted(classes):
        xs = classes[sig]
        values = [f(x) for x in xs]
        if len(set(values)) == 1 and values[0] < min_e:
            per_class[sig] = ClassVerdict(kind=CASE1, value=values[0])
        elif all(v >= min(x) for x, v in zip(xs, values)):
            per_class[sig] = ClassVerdict(kind=CASE2)
        else:
            offender = next(x for x in xs if f(x) < min(x))
            conflict = None
            if len(set(values)) > 1:
                first = (xs[0], values[0])
                other = next((x, v) for x, v in zip(xs, values) if v != values[0])
                conflict = (first, other)
            per_class[sig] = ClassVerdict(
                kind=VIOLATED,
                offender=offender,
                offender_value=f(offender),
                conflict_pair=conflict,
            )

    overall = all(v.kind != VIOLATED for v in per_class.values())
    return RegularityReport(per_class=per_class, overall=overall)
