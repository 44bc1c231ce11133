"""Abduction frames, explanations and their enumeration."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .logic import Formula, Reasoner, variable_name
from .sets import check_budget, fmt, set_key, subsets

DEFAULT_BUDGET = 16


class FrameError(ValueError):
    """An abduction frame or explanation violates its alphabet invariants."""


def _names(items: Iterable[str]) -> frozenset[str]:
    if isinstance(items, str):
        raise TypeError("expected a collection of variable names, got a string")
    return frozenset(variable_name(x) for x in items)


@dataclass(frozen=True)
class Explanation:
    """``hypotheses => manifestations``; the manifestation set is never empty."""

    hypotheses: frozenset[str]
    manifestations: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hypotheses", _names(self.hypotheses))
        object.__setattr__(self, "manifestations", _names(self.manifestations))
        if not self.manifestations:
            raise FrameError("an explanation must explain at least one manifestation")

    @property
    def E(self) -> frozenset[str]:
        return self.hypotheses

    @property
    def M(self) -> frozenset[str]:
        return self.manifestations

    def key(self) -> tuple:
        return (set_key(self.hypotheses), set_key(self.manifestations))

    def __lt__(self, other: "Explanation") -> bool:
        return self.key() < other.key()

    def __str__(self) -> str:
        return f"{fmt(self.hypotheses)} => {fmt(self.manifestations)}"

    def to_json(self) -> dict:
        return {"E": sorted(self.hypotheses), "M": sorted(self.manifestations)}


class ExplanationSet:
    """Immutable set of explanations iterated in canonical order."""

    __slots__ = ("_members", "_order")

    def __init__(self, members: Iterable[Explanation] = ()):
        self._members = frozenset(members)
        self._order = tuple(sorted(self._members))

    @classmethod
    def of(cls, pairs: Iterable[tuple[Iterable[str], Iterable[str]]]) -> "ExplanationSet":
        return cls(Explanation(frozenset(e), frozenset(m)) for e, m in pairs)

    def __iter__(self) -> Iterator[Explanation]:
        return iter(self._order)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, item: object) -> bool:
        return item in self._members

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExplanationSet):
            return self._members == other._members
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._members)

    def __repr__(self) -> str:
        return "ExplanationSet({" + "; ".join(str(x) for x in self._order) + "})"

    def has(self, hypotheses: Iterable[str], manifestations: Iterable[str]) -> bool:
        m = frozenset(manifestations)
        return bool(m) and Explanation(frozenset(hypotheses), m) in self._members

    @property
    def members(self) -> frozenset[Explanation]:
        return self._members

    def hypotheses(self) -> frozenset[str]:
        return frozenset().union(*(x.hypotheses for x in self._members))

    def manifestations(self) -> frozenset[str]:
        return frozenset().union(*(x.manifestations for x in self._members))

    def check_over(self, hypotheses: Iterable[str], manifestations: Iterable[str]) -> None:
        """Raise :class:`FrameError` unless every member lives over the given alphabets."""
        hyp, man = frozenset(hypotheses), frozenset(manifestations)
        if hyp & man:
            raise FrameError(f"hypotheses and manifestations overlap: {fmt(hyp & man)}")
        for x in self._order:
            if not x.hypotheses <= hyp or not x.manifestations <= man:
                raise FrameError(f"explanation {x} is not over hypotheses {fmt(hyp)} and manifestations {fmt(man)}")

    def to_json(self) -> list[dict]:
        return [x.to_json() for x in self._order]


@dataclass(frozen=True)
class AbductionFrame:
    """A formula with disjoint hypothesis and manifestation alphabets.

    Hypotheses or manifestations missing from the formula are accepted as
    declared extras and behave as unconstrained variables.
    """

    formula: Formula
    hypotheses: frozenset[str]
    manifestations: frozenset[str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hypotheses", _names(self.hypotheses))
        object.__setattr__(self, "manifestations", _names(self.manifestations))
        shared = self.hypotheses & self.manifestations
        if shared:
            raise FrameError(f"hypotheses and manifestations overlap: {fmt(shared)}")

    @property
    def extras(self) -> frozenset[str]:
        return (self.hypotheses | self.manifestations) - self.formula.alphabet

    def check(self, expl: Explanation) -> None:
        if not expl.hypotheses <= self.hypotheses:
            raise FrameError(f"{expl}: {fmt(expl.hypotheses - self.hypotheses)} not hypotheses of the frame")
        if not expl.manifestations <= self.manifestations:
            raise FrameError(f"{expl}: {fmt(expl.manifestations - self.manifestations)} not manifestations of the frame")


@dataclass(frozen=True)
class Ordering:
    """A strict order on hypothesis sets that refines strict set containment.

    ``kind`` is ``"subset"``, ``"cardinality"`` or ``"weighted"``; weighted
    orderings compare sums of strictly positive weights.
    """

    kind: str = "subset"
    weights: tuple[tuple[str, Fraction], ...] = field(default=())

    def __post_init__(self) -> None:
        if self.kind not in ("subset", "cardinality", "weighted"):
            raise ValueError(f"unknown ordering kind: {self.kind!r}")
        if self.kind == "weighted":
            for name, w in self.weights:
                if w <= 0:
                    raise FrameError(f"weight of {name} must be positive, got {w}")

    @classmethod
    def subset(cls) -> "Ordering":
        return cls("subset")

    @classmethod
    def cardinality(cls) -> "Ordering":
        return cls("cardinality")

    @classmethod
    def weighted(cls, weights: Mapping[str, object]) -> "Ordering":
        items = []
        for name, w in sorted(weights.items()):
            if isinstance(w, float):
                w = str(w)
            items.append((variable_name(name), Fraction(w)))
        return cls("weighted", tuple(items))

    def weight(self, names: Iterable[str]) -> Fraction:
        table = dict(self.weights)
        try:
            return sum((table[n] for n in names), Fraction(0))
        except KeyError as exc:
            raise FrameError(f"no weight given for {exc.args[0]}") from None

    def __str__(self) -> str:
        return self.kind


def less(ordering: Ordering, e1: Iterable[str], e2: Iterable[str]) -> bool:
    e1, e2 = frozenset(e1), frozenset(e2)
    if ordering.kind == "subset":
        return e1 < e2
    if ordering.kind == "cardinality":
        return len(e1) < len(e2)
    return ordering.weight(e1) < ordering.weight(e2)


def supports(frame: AbductionFrame, expl: Explanation) -> bool:
    """``F ∪ E`` is consistent and entails every manifestation of ``M``."""
    frame.check(expl)
    r = Reasoner(frame.formula)
    return r.consistent(expl.hypotheses) and r.entails(expl.hypotheses, expl.manifestations)


@lru_cache(maxsize=512)
def consistent_sets(frame: AbductionFrame) -> tuple[tuple[frozenset[str], frozenset[str]], ...]:
    """Every ``E ⊆ I`` consistent with the formula, with the manifestations it entails.

    Supersets of inconsistent sets are never tried, so the cost follows the
    number of consistent sets rather than ``2**|I|``.
    """
    r = Reasoner(frame.formula)
    hyps = sorted(frame.hypotheses)
    pos = {h: i for i, h in enumerate(hyps)}
    manifestations = sorted(frame.manifestations)

    def entailed(e: frozenset[str], known: frozenset[str]) -> frozenset[str]:
        return known | frozenset(m for m in manifestations if m not in known and r.entails_var(e, m))

    out: list[tuple[frozenset[str], frozenset[str]]] = []
    if not r.consistent(()):
        return ()
    level = {frozenset(): entailed(frozenset(), frozenset())}
    order = [frozenset()]
    while order:
        out.extend((e, level[e]) for e in order)
        nxt: dict[frozenset[str], frozenset[str]] = {}
        nxt_order = []
        for e in order:
            start = max((pos[h] for h in e), default=-1) + 1
            for h in hyps[start:]:
                cand = e | {h}
                known = frozenset()
                ok = True
                for drop in cand:
                    sub = cand - {drop}
                    if sub not in level:
                        ok = False
                        break
                    known |= level[sub]
                if not ok or not r.consistent(cand):
                    continue
                nxt[cand] = entailed(cand, known)
                nxt_order.append(cand)
        level, order = nxt, nxt_order
    return tuple(out)


def enumerate_explanations(frame: AbductionFrame, cap: int | None = DEFAULT_BUDGET) -> ExplanationSet:
    """All explanations supported by the frame."""
    check_budget("hypotheses", len(frame.hypotheses), cap)
    out = []
    for e, entailed in consistent_sets(frame):
        for m in subsets(entailed, nonempty=True):
            out.append(Explanation(e, m))
    return ExplanationSet(out)


abduct = enumerate_explanations


def select_minimal(s: ExplanationSet, ordering: Ordering) -> ExplanationSet:
    """Members ``E => M`` with no member ``E' => M`` such that ``E' < E``."""
    by_m: dict[frozenset[str], list[frozenset[str]]] = defaultdict(list)
    for x in s:
        by_m[x.manifestations].append(x.hypotheses)
    keep = []
    for m, es in by_m.items():
        for e in es:
            if not any(less(ordering, other, e) for other in es):
                keep.append(Explanation(e, m))
    return ExplanationSet(keep)


def minimal_explanations(
    frame: AbductionFrame, ordering: Ordering, cap: int | None = DEFAULT_BUDGET
) -> ExplanationSet:
    return select_minimal(enumerate_explanations(frame, cap), ordering)


minabduct = minimal_explanations
