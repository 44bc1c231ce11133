"""Tentative-supporting formulas and round-trip verification.

``build_gs_all`` and ``build_gs_minimal`` produce the clause sets that
support (resp. minimally support) a set of explanations exactly whenever any
formula does.  No subsumption or other size reduction is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .abduction import (
    AbductionFrame,
    Explanation,
    ExplanationSet,
    FrameError,
    Ordering,
    enumerate_explanations,
    less,
    minimal_explanations,
)
from .expressibility import ConsequentialWitness, check_consequential_monotony
from .forgetting import focus
from .logic import Formula, Node, clause
from .sets import check_budget, subsets

SYNTHESIS_BUDGET = 12
AUX_PREFIX = "__aux"


class PreconditionError(ValueError):
    def __init__(self, message: str, witness: ConsequentialWitness | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class SynthesisReport:
    formula: Formula
    verified: bool
    mismatch: Optional[tuple[Explanation, str]] = None  # (explanation, "extra" | "missing")

    def __post_init__(self) -> None:
        if self.verified != (self.mismatch is None):
            raise ValueError("verified reports carry no mismatch, failed ones carry one")

    def __bool__(self) -> bool:
        return self.verified

    def to_json(self) -> dict:
        mismatch = None
        if self.mismatch is not None:
            expl, direction = self.mismatch
            mismatch = {"explanation": expl.to_json(), "direction": direction}
        return {"verified": self.verified, "mismatch": mismatch}


class _ClauseSet:
    """Insertion-ordered set of (body, head) pairs; head ``None`` is ⊥."""

    def __init__(self) -> None:
        self._seen: dict[tuple[frozenset[str], str | None], None] = {}

    def add(self, body: frozenset[str], head: str | None) -> None:
        self._seen.setdefault((body, head), None)

    def formula(self) -> Formula:
        def key(item):
            body, head = item
            return (head is None, head or "", len(body), sorted(body))

        return Formula(tuple(clause(b, h) for b, h in sorted(self._seen, key=key)))


def build_gs_all(s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str]) -> Formula:
    """``E -> m`` for each ``E => m`` in ``s``, and ``E -> false`` for each
    missing ``E => m`` whose manifestation is explained by a strict subset of ``E``.

    Members with several manifestations contribute through their singleton
    parts only; a set where the two disagree is left for verification to reject.
    """
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    s.check_over(hyp, man)
    check_budget("hypotheses", len(hyp), SYNTHESIS_BUDGET)
    single = {(x.hypotheses, m) for x in s if len(x.manifestations) == 1 for m in x.manifestations}
    out = _ClauseSet()
    for e, m in sorted(single, key=lambda p: (p[1], len(p[0]), sorted(p[0]))):
        out.add(e, m)
    explained_by: dict[str, list[frozenset[str]]] = {m: [] for m in man}
    for e, m in single:
        explained_by[m].append(e)
    for m in sorted(man):
        for e in subsets(hyp):
            if (e, m) in single:
                continue
            if any(e1 < e for e1 in explained_by[m]):
                out.add(e, None)
    return out.formula()


def build_gs_minimal(
    s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str], ordering: Ordering
) -> Formula:
    """``E -> m`` for each ``E => M`` in ``s`` and ``m`` in ``M``; ``E -> false`` for each
    missing ``E => M`` such that every ``m`` in ``M`` is explained by some member
    over a subset of ``E`` and no member ``E' => M`` has ``E' < E``.
    """
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    s.check_over(hyp, man)
    check_budget("hypotheses", len(hyp), SYNTHESIS_BUDGET)
    out = _ClauseSet()
    for x in s:
        for m in sorted(x.manifestations):
            out.add(x.hypotheses, m)
    by_m: dict[frozenset[str], list[frozenset[str]]] = {}
    for x in s:
        by_m.setdefault(x.manifestations, []).append(x.hypotheses)
    for e in subsets(hyp):
        covered = frozenset().union(*(x.manifestations for x in s if x.hypotheses <= e))
        for m in subsets(covered, nonempty=True):
            if s.has(e, m):
                continue
            if any(less(ordering, e1, e) for e1 in by_m.get(m, ())):
                continue
            out.add(e, None)
    return out.formula()


def _compare(f: Formula, actual: ExplanationSet, expected: ExplanationSet) -> SynthesisReport:
    diff = [(x, "extra") for x in actual if x not in expected]
    diff += [(x, "missing") for x in expected if x not in actual]
    if not diff:
        return SynthesisReport(f, True)
    return SynthesisReport(f, False, min(diff, key=lambda d: d[0].key()))


def verify_supports_exactly(
    f: Formula, s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str],
    cap: int | None = SYNTHESIS_BUDGET,
) -> SynthesisReport:
    frame = AbductionFrame(f, frozenset(hypotheses), frozenset(manifestations))
    return _compare(f, enumerate_explanations(frame, cap), s)


def verify_min_supports_exactly(
    f: Formula, s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str],
    ordering: Ordering, cap: int | None = SYNTHESIS_BUDGET,
) -> SynthesisReport:
    frame = AbductionFrame(f, frozenset(hypotheses), frozenset(manifestations))
    return _compare(f, minimal_explanations(frame, ordering, cap), s)


def realize_as_forgetting(
    s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str], *, check: bool = True
) -> tuple[Formula, frozenset[str]]:
    """A formula over ``I`` plus fresh hypotheses whose focus on ``I ∪ C`` is ``s``.

    One fresh hypothesis ``a_i`` per member ``E_i => M_i`` with clauses
    ``E_i a_i -> m`` (m in M_i), ``a_i a_j -> false`` and ``a_i e -> false``
    for ``e`` outside ``E_i``.  With ``check=False`` the construction is
    emitted even for sets lacking consequential monotony.
    """
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    s.check_over(hyp, man)
    if check:
        verdict = check_consequential_monotony(s)
        if not verdict.holds:
            raise PreconditionError(f"not consequentially monotone: {verdict.witness}", verdict.witness)
    members = list(s)
    fresh = [f"{AUX_PREFIX}{i}" for i in range(1, len(members) + 1)]
    clash = set(fresh) & (hyp | man)
    if clash:
        raise FrameError(f"fresh names collide with the alphabets: {sorted(clash)}")
    sentences: list[Node] = []
    for x, a in zip(members, fresh):
        for m in sorted(x.manifestations):
            sentences.append(clause(x.hypotheses | {a}, m))
    for i, a in enumerate(fresh):
        for b in fresh[i + 1:]:
            sentences.append(clause({a, b}, None))
    for x, a in zip(members, fresh):
        for e in sorted(hyp - x.hypotheses):
            sentences.append(clause({a, e}, None))
    return Formula(tuple(sentences)), frozenset(fresh)


def verify_forgetting_roundtrip(
    s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str]
) -> SynthesisReport:
    """Build the forgetting instance without the precondition and compare its focus with ``s``."""
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    f, fresh = realize_as_forgetting(s, hyp, man, check=False)
    frame = AbductionFrame(f, hyp | fresh, man)
    return _compare(f, focus(frame, hyp | man, cap=None), s)
