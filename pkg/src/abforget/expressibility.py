"""Checkers for the conditions characterizing which explanation sets a formula supports.

Every checker scans its search space in canonical order and reports the
first violating tuple, so witnesses are stable across runs.  Each witness
can replay itself against the raw set to confirm the violation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional, Union

from .abduction import ExplanationSet, Ordering, less
from .logic import FALSE, Formula
from .sets import between, check_budget, fmt, subsets

if TYPE_CHECKING:
    from .synthesis import SynthesisReport

PAIRWISE_BUDGET = 12
INCONSISTENCY_BUDGET = 8


def _j(s: Iterable[str]) -> list[str]:
    return sorted(s)


@dataclass(frozen=True)
class ConjunctiveWitness:
    hypotheses: frozenset[str]
    first: frozenset[str]
    second: frozenset[str]
    direction: str  # "union-missing" or "part-missing"

    def recheck(self, s: ExplanationSet) -> bool:
        e = self.hypotheses
        both = s.has(e, self.first) and s.has(e, self.second)
        return both != s.has(e, self.first | self.second)

    def to_json(self) -> dict:
        return {"E": _j(self.hypotheses), "M1": _j(self.first), "M2": _j(self.second), "direction": self.direction}

    def __str__(self) -> str:
        return f"{fmt(self.hypotheses)} with {fmt(self.first)} and {fmt(self.second)}: {self.direction}"


@dataclass(frozen=True)
class MonotonyWitness:
    low: frozenset[str]
    middle: frozenset[str]
    high: frozenset[str]
    manifestation: str
    other: str

    def recheck(self, s: ExplanationSet) -> bool:
        return (
            self.low <= self.middle <= self.high
            and s.has(self.low, {self.manifestation})
            and s.has(self.high, {self.other})
            and not s.has(self.middle, {self.manifestation})
        )

    def to_json(self) -> dict:
        return {"E": _j(self.low), "E'": _j(self.middle), "E''": _j(self.high), "m": self.manifestation, "m'": self.other}

    def __str__(self) -> str:
        return (f"{fmt(self.low)} => {self.manifestation} and {fmt(self.high)} => {self.other} "
                f"but not {fmt(self.middle)} => {self.manifestation}")


@dataclass(frozen=True)
class MinorityWitness:
    hypotheses: frozenset[str]
    lesser: frozenset[str]
    manifestations: frozenset[str]

    def recheck(self, s: ExplanationSet, ordering: Ordering) -> bool:
        return (
            s.has(self.hypotheses, self.manifestations)
            and s.has(self.lesser, self.manifestations)
            and less(ordering, self.lesser, self.hypotheses)
        )

    def to_json(self) -> dict:
        return {"E": _j(self.hypotheses), "E'": _j(self.lesser), "M": _j(self.manifestations)}

    def __str__(self) -> str:
        return f"{fmt(self.lesser)} < {fmt(self.hypotheses)} both explain {fmt(self.manifestations)}"


@dataclass(frozen=True)
class InconsistencyWitness:
    hypotheses: frozenset[str]       # E, with E => M in the set
    blocked: frozenset[str]          # E' ⊆ E, forced inconsistent
    manifestations: frozenset[str]   # M
    unexplained: frozenset[str]      # M', with E' => M' not in the set

    def recheck(self, s: ExplanationSet, ordering: Ordering) -> bool:
        e, e1, m, m1 = self.hypotheses, self.blocked, self.manifestations, self.unexplained
        if not (e1 <= e and m1 and s.has(e, m) and not s.has(e1, m1)):
            return False
        for x in m1:
            if not any(y.hypotheses <= e1 and x in y.manifestations for y in s):
                return False
        return not any(y.manifestations == m1 and less(ordering, y.hypotheses, e1) for y in s)

    def to_json(self) -> dict:
        return {"E": _j(self.hypotheses), "E'": _j(self.blocked), "M": _j(self.manifestations), "M'": _j(self.unexplained)}

    def __str__(self) -> str:
        return (f"{fmt(self.hypotheses)} => {fmt(self.manifestations)} is present although "
                f"{fmt(self.blocked)} must be inconsistent ({fmt(self.unexplained)} would be explained)")


@dataclass(frozen=True)
class ConsequentialWitness:
    hypotheses: frozenset[str]
    manifestations: frozenset[str]
    missing: frozenset[str]

    def recheck(self, s: ExplanationSet) -> bool:
        return (
            bool(self.missing)
            and self.missing <= self.manifestations
            and s.has(self.hypotheses, self.manifestations)
            and not s.has(self.hypotheses, self.missing)
        )

    def to_json(self) -> dict:
        return {"E": _j(self.hypotheses), "M": _j(self.manifestations), "M'": _j(self.missing)}

    def __str__(self) -> str:
        return f"{fmt(self.hypotheses)} => {fmt(self.manifestations)} without {fmt(self.hypotheses)} => {fmt(self.missing)}"


Witness = Union[ConjunctiveWitness, MonotonyWitness, MinorityWitness, InconsistencyWitness, ConsequentialWitness]


@dataclass(frozen=True)
class ConditionVerdict:
    holds: bool
    witness: Optional[Witness] = None

    def __post_init__(self) -> None:
        if not self.holds and self.witness is None:
            raise ValueError("a violated condition needs a witness")

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        return {"holds": self.holds, "witness": None if self.witness is None else self.witness.to_json()}


HOLDS = ConditionVerdict(True)


def _by_hypotheses(s: ExplanationSet) -> dict[frozenset[str], list[frozenset[str]]]:
    out: dict[frozenset[str], list[frozenset[str]]] = defaultdict(list)
    for x in s:
        out[x.hypotheses].append(x.manifestations)
    return out


def check_conjunctive(s: ExplanationSet) -> ConditionVerdict:
    """``E => M1`` and ``E => M2`` are both present iff ``E => M1∪M2`` is."""
    for e, ms in _by_hypotheses(s).items():
        present = set(ms)
        universe = frozenset().union(*ms)
        check_budget("manifestations of one hypothesis set", len(universe), PAIRWISE_BUDGET)
        candidates = list(subsets(universe, nonempty=True))
        for i, m1 in enumerate(candidates):
            for m2 in candidates[i:]:
                both = m1 in present and m2 in present
                union = (m1 | m2) in present
                if both and not union:
                    return ConditionVerdict(False, ConjunctiveWitness(e, m1, m2, "union-missing"))
                if union and not both:
                    return ConditionVerdict(False, ConjunctiveWitness(e, m1, m2, "part-missing"))
    return HOLDS


def check_overreaching_monotony(s: ExplanationSet, universe: Iterable[str] = ()) -> ConditionVerdict:
    """Singleton explanations ``E => m`` and ``E'' => m'`` force ``E' => m`` for ``E ⊆ E' ⊆ E''``.

    Members with more than one manifestation are ignored.
    """
    universe = frozenset(universe)
    if universe and not s.hypotheses() <= universe:
        raise ValueError(f"explanations use hypotheses outside {fmt(universe)}")
    singles = [(x.hypotheses, next(iter(x.manifestations))) for x in s if len(x.manifestations) == 1]
    present = set(singles)
    check_budget("hypotheses", len(s.hypotheses()), PAIRWISE_BUDGET)
    for low, m in singles:
        for high, other in singles:
            if not low <= high:
                continue
            for middle in between(low, high):
                if (middle, m) not in present:
                    return ConditionVerdict(False, MonotonyWitness(low, middle, high, m, other))
    return HOLDS


def check_minority(s: ExplanationSet, ordering: Ordering) -> ConditionVerdict:
    """No two explanations of the same manifestations with one hypothesis set less than the other."""
    by_m: dict[frozenset[str], list[frozenset[str]]] = defaultdict(list)
    for x in s:
        by_m[x.manifestations].append(x.hypotheses)
    for x in s:
        for other in by_m[x.manifestations]:
            if less(ordering, other, x.hypotheses):
                return ConditionVerdict(False, MinorityWitness(x.hypotheses, other, x.manifestations))
    return HOLDS


def check_inconsistency_condition(
    s: ExplanationSet,
    hypotheses: Iterable[str],
    manifestations: Iterable[str],
    ordering: Ordering,
    cap: int | None = INCONSISTENCY_BUDGET,
) -> ConditionVerdict:
    """No ``E => M`` present while some ``E' ⊆ E`` would be forced inconsistent.

    ``E'`` is forced inconsistent by a missing ``E' => M'`` whose every
    manifestation is explained by subsets of ``E'`` and which has no present
    explanation ``E'' => M'`` with ``E'' < E'``.
    """
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    s.check_over(hyp, man)
    check_budget("hypotheses", len(hyp), cap)
    by_m: dict[frozenset[str], list[frozenset[str]]] = defaultdict(list)
    for x in s:
        by_m[x.manifestations].append(x.hypotheses)
    covered_cache: dict[frozenset[str], frozenset[str]] = {}

    def covered(e1: frozenset[str]) -> frozenset[str]:
        if e1 not in covered_cache:
            covered_cache[e1] = frozenset().union(
                *(y.manifestations for y in s if y.hypotheses <= e1)
            )
        return covered_cache[e1]

    for x in s:
        for e1 in subsets(x.hypotheses):
            for m1 in subsets(covered(e1), nonempty=True):
                if s.has(e1, m1):
                    continue
                if any(less(ordering, e2, e1) for e2 in by_m[m1]):
                    continue
                return ConditionVerdict(False, InconsistencyWitness(x.hypotheses, e1, x.manifestations, m1))
    return HOLDS


def check_consequential_monotony(s: ExplanationSet) -> ConditionVerdict:
    """``E => M`` present implies ``E => M'`` present for every nonempty ``M' ⊆ M``."""
    for x in s:
        for m1 in subsets(x.manifestations, nonempty=True):
            if not s.has(x.hypotheses, m1):
                return ConditionVerdict(False, ConsequentialWitness(x.hypotheses, x.manifestations, m1))
    return HOLDS


@dataclass(frozen=True)
class SupportVerdict:
    supportable: bool
    conjunctive: ConditionVerdict
    monotony: ConditionVerdict
    formula: Optional[Formula] = None
    report: Optional["SynthesisReport"] = None

    def __bool__(self) -> bool:
        return self.supportable


EMPTY_SUPPORT = Formula((FALSE,))


def is_supportable(s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str]) -> SupportVerdict:
    """Decide whether some formula's explanations are exactly ``s``.

    The verdict from the two conditions is cross-checked by building the
    tentative-supporting formula and verifying it by enumeration; a
    disagreement raises ``AssertionError``.
    """
    from .synthesis import build_gs_all, verify_supports_exactly

    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    s.check_over(hyp, man)
    conj = check_conjunctive(s)
    mono = check_overreaching_monotony(s, hyp)
    holds = conj.holds and mono.holds
    gs = build_gs_all(s, hyp, man)
    report = verify_supports_exactly(gs, s, hyp, man)
    if report.verified != holds:
        raise AssertionError(f"condition verdict {holds} disagrees with synthesis for {s!r}")
    if not holds:
        return SupportVerdict(False, conj, mono, None, report)
    formula = EMPTY_SUPPORT if len(s) == 0 else gs
    return SupportVerdict(True, conj, mono, formula, report)
