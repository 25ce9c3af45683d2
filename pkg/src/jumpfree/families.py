"""Deterministic generators of concrete function families over bounded
universes, plus the best-effort search for a regressively regular witness.

A universe is an explicit finite list of domains standing in for "every
finite subset of N^k", which no artifact can enumerate.  Four value rules
generate families over a universe: max, min, and predmin are jump free by
construction, while constmin deliberately is not and serves as the
checkers' negative control.  The witness search scans members in family
order and cubes in lexicographic order, so absence of a witness is a
statement about the truncated universe only, never a refutation of the
existence claim for full families.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .core import Cube, KTuple, cubes_in, field_of
from .predicates import (
    Family,
    FiniteFunction,
    RegularityReport,
    predecessor_set,
    regressive_regularity,
)

FAMILY_KINDS = ("max", "min", "predmin", "constmin")

Domain = tuple[KTuple, ...]


@dataclass(frozen=True)
class UniverseSpec:
    """Reproducible recipe for a finite universe of domains.

    Coordinates range over 0..grid_bound-1.  When include_all_cubes is
    set, every cube power that fits under max_domain_size comes first;
    sample_count seeded-random domains of size <= max_domain_size follow.
    Identical specs yield identical universes.
    """

    k: int
    grid_bound: int
    max_domain_size: int
    sample_count: int
    seed: int
    include_all_cubes: bool

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("arity k must be >= 1")
        if self.grid_bound < 2:
            raise ValueError("grid_bound must be >= 2")
        if self.max_domain_size < 1:
            raise ValueError("max_domain_size must be >= 1")
        if self.sample_count < 0:
            raise ValueError("sample_count must be >= 0")

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "gridBound": self.grid_bound,
            "maxDomainSize": self.max_domain_size,
            "sampleCount": self.sample_count,
            "seed": self.seed,
            "includeAllCubes": self.include_all_cubes,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "UniverseSpec":
        return cls(
            k=int(data["k"]),
            grid_bound=int(data["gridBound"]),
            max_domain_size=int(data["maxDomainSize"]),
            sample_count=int(data["sampleCount"]),
            seed=int(data["seed"]),
            include_all_cubes=bool(data["includeAllCubes"]),
        )


def build_universe(spec: UniverseSpec) -> list[Domain]:
    """Materialize the universe described by a spec.

    Cube domains come ordered by element-set size then lexicographic
    element set; random domains follow in draw order.  Duplicates are
    dropped, keeping first occurrence.
    """
    domains: list[Domain] = []

    if spec.include_all_cubes:
        size = 2
        while size <= spec.grid_bound and size**spec.k <= spec.max_domain_size:
            for elems in itertools.combinations(range(spec.grid_bound), size):
                domains.append(tuple(itertools.product(elems, repeat=spec.k)))
            size += 1

    grid = sorted(itertools.product(range(spec.grid_bound), repeat=spec.k))
    rng = random.Random(spec.seed)
    for _ in range(spec.sample_count):
        size = rng.randint(1, min(spec.max_domain_size, len(grid)))
        domains.append(tuple(sorted(rng.sample(grid, size))))

    return list(dict.fromkeys(domains))


def _rule_max(dom: frozenset[KTuple], x: KTuple) -> int:
    return max(x)


def _rule_min(dom: frozenset[KTuple], x: KTuple) -> int:
    return min(x)


def _rule_predmin(dom: frozenset[KTuple], x: KTuple) -> int:
    # Minimum coordinate seen among x and all points below x's maximum.
    return min(field_of(predecessor_set(dom, x) | {x}))


def _rule_constmin(dom: frozenset[KTuple], x: KTuple) -> int:
    return min(field_of(dom))


_RULES = {
    "max": _rule_max,
    "min": _rule_min,
    "predmin": _rule_predmin,
    "constmin": _rule_constmin,
}


def gen_family(kind: str, universe: list[Domain]) -> Family:
    """One member per universe domain, valued by the named rule.

    All four rules are reflexive by construction.  max, min, and predmin
    yield jump-free families; constmin does not, by design, so checkers
    have a guaranteed negative fixture.
    """
    if kind not in _RULES:
        raise ValueError(f"unknown family kind {kind!r}, expected one of {FAMILY_KINDS}")
    if not universe:
        raise ValueError("cannot generate a family over an empty universe")
    rule = _RULES[kind]
    members = []
    k = None
    for i, dom in enumerate(universe):
        dom = tuple(tuple(t) for t in dom)
        if not dom:
            raise ValueError("universe domains must be nonempty")
        if k is None:
            k = len(dom[0])
        dom_set = frozenset(dom)
        entries = {x: rule(dom_set, x) for x in sorted(dom_set)}
        members.append(FiniteFunction(id=f"{kind}-{i:03d}", k=k, entries=entries))
    return Family(k=k, members=tuple(members))


@dataclass(frozen=True)
class SearchStats:
    functions_examined: int
    cubes_examined: int

    def to_json_dict(self) -> dict:
        return {
            "functionsExamined": self.functions_examined,
            "cubesExamined": self.cubes_examined,
        }


@dataclass
class WitnessResult:
    """A member and cube over which the member is regressively regular."""

    function_id: str
    cube: Cube
    report: RegularityReport
    search_stats: SearchStats

    def __post_init__(self) -> None:
        if not self.report.overall:
            raise ValueError("witness requires an overall-regular report")

    def to_json_dict(self) -> dict:
        return {
            "functionId": self.function_id,
            "cube": self.cube.to_json_dict(),
            "report": self.report.to_json_dict(),
            "searchStats": self.search_stats.to_json_dict(),
        }


def find_regressively_regular_witness(fam: Family, p: int) -> Optional[WitnessResult]:
    """First (member, cube) pair that classifies as regressively regular.

    Members are scanned in family order and candidate cubes of size p in
    lexicographic order, with no heuristics, so repeated runs return the
    identical witness.  Returns None when the whole family is exhausted;
    over a truncated universe that outcome carries no meaning beyond the
    scanned scope.
    """
    if p < 2:
        raise ValueError("witness search requires cube size p >= 2")
    if fam.k < 2:
        raise ValueError("witness search requires arity k >= 2")
    functions_examined = 0
    cubes_examined = 0
    for f in fam.members:
        functions_examined += 1
        for cube in cubes_in(f.entries.keys(), p):
            cubes_examined += 1
            report = regressive_regularity(f, cube)
            if report.overall:
                stats = SearchStats(functions_examined, cubes_examined)
                return WitnessResult(f.id, cube, report, stats)
    return None
