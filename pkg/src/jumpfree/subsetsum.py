"""Target-zero subset-sum deciders with certificates, plus the end-to-end
solvability-agreement experiment.

Convention: the empty subset does not count, otherwise target zero would
be trivially solvable.  Three methods are provided.  The exhaustive
enumerator is the oracle; the reachable-sums table handles negative
values by index offsetting and keeps parent links for certificate
recovery; meet-in-the-middle enumerates signed half-sums and matches
negations, preferring the smallest-absolute-value match.  All methods
return a certificate, never just a yes/no, so their answers can be
validated independently of solver internals.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .families import Family, WitnessResult, find_regressively_regular_witness
from .intsets import DEFAULT_GAMMAS, GammaTriple, IntMultiset, build_fh, fh_equal

EXHAUSTIVE_MAX_TOTAL = 24
DP_MAX_WEIGHT = 10**7

METHODS = ("exhaustive", "dp", "mitm")

OUTCOME_OK = "ok"
OUTCOME_NO_WITNESS = "no_witness"


class CapacityError(Exception):
    """Input exceeds a solver's guard; distinct from an unsolvable verdict."""


@dataclass(frozen=True)
class SubsetCertificate:
    """A sub-multiset, as sorted (value, multiplicity-taken) pairs, and its sum."""

    chosen: tuple[tuple[int, int], ...]
    sum: int

    def __post_init__(self) -> None:
        if not self.chosen:
            raise ValueError("certificate must choose a nonempty sub-multiset")
        if any(m < 1 for _, m in self.chosen):
            raise ValueError("chosen multiplicities must be >= 1")
        actual = sum(v * m for v, m in self.chosen)
        if actual != self.sum:
            raise ValueError(f"certificate sum mismatch: stated {self.sum}, actual {actual}")

    def to_json_dict(self) -> dict:
        return {"chosen": [[v, m] for v, m in self.chosen], "sum": self.sum}


def _certificate(counts: Counter) -> SubsetCertificate:
    chosen = tuple(sorted((v, m) for v, m in counts.items() if m > 0))
    return SubsetCertificate(chosen=chosen, sum=sum(v * m for v, m in chosen))


def is_valid_certificate(cert: SubsetCertificate, ms: IntMultiset) -> bool:
    """Nonempty, within the source multiplicities, and sums to zero."""
    if not cert.chosen:
        return False
    if any(m < 1 or m > ms.count(v) for v, m in cert.chosen):
        return False
    return cert.sum == 0 and sum(v * m for v, m in cert.chosen) == 0


def solve_subset_sum(ms: IntMultiset, method: str = "dp") -> Optional[SubsetCertificate]:
    """A nonempty sub-multiset of ms summing to zero, or None.

    Methods may return different certificates for the same input; the
    decision is always the same.  Guard violations raise CapacityError.
    """
    if method == "exhaustive":
        return _solve_exhaustive(ms)
    if method == "dp":
        return _solve_dp(ms)
    if method == "mitm":
        return _solve_mitm(ms)
    raise ValueError(f"unknown method {method!r}, expected one of {METHODS}")


def _solve_exhaustive(ms: IntMultiset) -> Optional[SubsetCertificate]:
    """Oracle: enumerate every nonempty sub-multiset."""
    if ms.total > EXHAUSTIVE_MAX_TOTAL:
        raise CapacityError(
            f"exhaustive enumeration capped at total size {EXHAUSTIVE_MAX_TOTAL}, got {ms.total}"
        )
    pairs = ms.items()
    values = [v for v, _ in pairs]
    for take in itertools.product(*(range(m + 1) for _, m in pairs)):
        if not any(take):
            continue
        if sum(v * t for v, t in zip(values, take)) == 0:
            return _certificate(Counter(dict(zip(values, take))))
    return None


def dp_reachable_sums(ms: IntMultiset) -> frozenset[int]:
    """Every sum attainable by a nonempty sub-multiset, via the dp table."""
    reached, _, offset = _dp_table(ms)
    return frozenset(i - offset for i, hit in enumerate(reached) if hit)


def _dp_table(ms: IntMultiset) -> tuple[bytearray, list, int]:
    """Reachable-sums table over [sum of negatives, sum of positives].

    Index = sum + offset.  parents[i] is (previous index or None, item
    value) recorded when index i first became reachable; walking parents
    back recovers a sub-multiset, each step consuming one item copy.
    """
    neg = sum(v * m for v, m in ms.items() if v < 0)
    pos = sum(v * m for v, m in ms.items() if v > 0)
    width = pos - neg + 1
    offset = -neg
    reached = bytearray(width)
    parents: list = [None] * width

    items = [v for v, m in ms.items() for _ in range(m)]
    for v in items:
        additions = []
        i_single = v + offset
        if not reached[i_single]:
            additions.append((i_single, None, v))
        for i, hit in enumerate(reached):
            if hit:
                j = i + v
                if not reached[j]:
                    additions.append((j, i, v))
        for j, prev, value in additions:
            if not reached[j]:
                reached[j] = 1
                parents[j] = (prev, value)
    return reached, parents, offset


def _solve_dp(ms: IntMultiset) -> Optional[SubsetCertificate]:
    if ms.count(0) > 0:
        # A zero element is a certificate on its own.
        return SubsetCertificate(chosen=((0, 1),), sum=0)
    weight = sum(abs(v) * m for v, m in ms.items())
    if weight > DP_MAX_WEIGHT:
        raise CapacityError(f"dp table capped at weight {DP_MAX_WEIGHT}, got {weight}")
    if ms.total == 0:
        return None
    reached, parents, offset = _dp_table(ms)
    if not reached[offset]:
        return None
    counts: Counter = Counter()
    i = offset
    while True:
        prev, v = parents[i]
        counts[v] += 1
        if prev is None:
            break
        i = prev
    return _certificate(counts)


def _half_sums(side: list[int]) -> tuple[dict[int, int], Optional[int]]:
    """Subset sums of one half: sum -> first achieving mask, plus the first
    nonempty mask summing to zero (the empty mask always claims sum 0)."""
    first: dict[int, int] = {}
    zero_nonempty = None
    for mask in range(1 << len(side)):
        s = sum(side[i] for i in range(len(side)) if mask >> i & 1)
        if s not in first:
            first[s] = mask
        if s == 0 and mask != 0 and zero_nonempty is None:
            zero_nonempty = mask
    return first, zero_nonempty


def _solve_mitm(ms: IntMultiset) -> Optional[SubsetCertificate]:
    items = [v for v, m in ms.items() for _ in range(m)]
    if not items:
        return None
    half = len(items) // 2
    left, right = items[:half], items[half:]
    lsums, lzero = _half_sums(left)
    rsums, rzero = _half_sums(right)

    for s in sorted((s for s in lsums if -s in rsums), key=lambda s: (abs(s), s)):
        mask_l, mask_r = lsums[s], rsums[-s]
        if mask_l == 0 and mask_r == 0:
            # Only the s == 0 pairing can be doubly empty; fall back to a
            # nonempty zero subset on either side if one exists.
            if lzero is not None:
                mask_l = lzero
            elif rzero is not None:
                mask_r = rzero
            else:
                continue
        counts: Counter = Counter()
        for i, v in enumerate(left):
            if mask_l >> i & 1:
                counts[v] += 1
        for i, v in enumerate(right):
            if mask_r >> i & 1:
                counts[v] += 1
        return _certificate(counts)
    return None


@dataclass
class ExperimentReport:
    """Everything one solvability-agreement run produced.

    Timings are informational only; no run asserts or checks any
    complexity bound.  outcome is "no_witness" when the bounded family
    exhausted without a regressively regular member, which is a defined
    result, not an error.
    """

    outcome: str
    method: str
    p: int
    witness: Optional[WitnessResult] = None
    fh_equal: Optional[bool] = None
    solvable_f: Optional[bool] = None
    solvable_h: Optional[bool] = None
    agreement: Optional[bool] = None
    cardinality_ok: Optional[bool] = None
    f_multiset: Optional[IntMultiset] = None
    h_multiset: Optional[IntMultiset] = None
    certificate_f: Optional[SubsetCertificate] = None
    certificate_h: Optional[SubsetCertificate] = None
    timings_ms: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "method": self.method,
            "p": self.p,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "fh_equal": self.fh_equal,
            "solvable_F": self.solvable_f,
            "solvable_H": self.solvable_h,
            "agreement": self.agreement,
            "cardinality_ok": self.cardinality_ok,
            "f_multiset": None if self.f_multiset is None else self.f_multiset.to_json(),
            "h_multiset": None if self.h_multiset is None else self.h_multiset.to_json(),
            "certificate_F": None if self.certificate_f is None else self.certificate_f.to_json_dict(),
            "certificate_H": None if self.certificate_h is None else self.certificate_h.to_json_dict(),
            "timings_ms": self.timings_ms,
        }


def run_corollary_experiment(
    fam: Family,
    p: int,
    gammas: GammaTriple = DEFAULT_GAMMAS,
    method: str = "dp",
) -> ExperimentReport:
    """Witness search, multiset construction, and paired solvability check.

    Finds the first regressively regular (member, cube) pair, builds the
    paired multisets under multiset semantics, solves both for target
    zero, and reports whether the decisions agree, along with the p^k
    cardinality check and wall-clock solve timings.
    """
    if p < 2:
        raise ValueError("experiment requires cube size p >= 2")
    witness = find_regressively_regular_witness(fam, p)
    if witness is None:
        return ExperimentReport(outcome=OUTCOME_NO_WITNESS, method=method, p=p)

    f = fam.member(witness.function_id)
    f_ms, h_ms = build_fh(f, witness.cube, gammas=gammas, semantics="multiset")

    t0 = time.perf_counter()
    cert_f = solve_subset_sum(f_ms, method)
    t1 = time.perf_counter()
    cert_h = solve_subset_sum(h_ms, method)
    t2 = time.perf_counter()

    solvable_f = cert_f is not None
    solvable_h = cert_h is not None
    return ExperimentReport(
        outcome=OUTCOME_OK,
        method=method,
        p=p,
        witness=witness,
        fh_equal=fh_equal(f_ms, h_ms),
        solvable_f=solvable_f,
        solvable_h=solvable_h,
        agreement=solvable_f == solvable_h,
        cardinality_ok=f_ms.total == p**fam.k,
        f_multiset=f_ms,
        h_multiset=h_ms,
        certificate_f=cert_f,
        certificate_h=cert_h,
        timings_ms={
            "solve_F": (t1 - t0) * 1000.0,
            "solve_H": (t2 - t1) * 1000.0,
        },
    )
