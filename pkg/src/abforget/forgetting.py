"""Abductive forgetting: focusing and summarizing a frame on remembered variables."""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

from .abduction import (
    DEFAULT_BUDGET,
    AbductionFrame,
    Explanation,
    ExplanationSet,
    Ordering,
    enumerate_explanations,
    select_minimal,
)
from .sets import fmt

log = logging.getLogger(__name__)

FOCUS = "focus"
SUMMARIZE = "summarize"


@dataclass(frozen=True)
class ForgetRequest:
    frame: AbductionFrame
    remember: frozenset[str]
    operator: str = FOCUS
    ordering: Ordering | None = None  # None selects all explanations

    def __post_init__(self) -> None:
        object.__setattr__(self, "remember", frozenset(self.remember))
        if self.operator not in (FOCUS, SUMMARIZE):
            raise ValueError(f"unknown forgetting operator: {self.operator!r}")


def project_focus(base: ExplanationSet, remember: Iterable[str]) -> ExplanationSet:
    """Map each ``E => M`` to ``E∩R => M∩R``, dropping those with ``M∩R`` empty."""
    r = frozenset(remember)
    return ExplanationSet(
        Explanation(x.hypotheses & r, x.manifestations & r)
        for x in base
        if x.manifestations & r
    )


def project_summarize(base: ExplanationSet, remember: Iterable[str]) -> ExplanationSet:
    """Map each ``E => M`` with ``M ⊆ R`` to ``E∩R => M``; drop the others."""
    r = frozenset(remember)
    return ExplanationSet(
        Explanation(x.hypotheses & r, x.manifestations)
        for x in base
        if x.manifestations <= r
    )


def _base(frame: AbductionFrame, remember: frozenset[str], ordering: Ordering | None, cap: int | None) -> ExplanationSet:
    stray = remember - frame.hypotheses - frame.manifestations
    if stray:
        log.warning("ignoring remembered variables outside the frame alphabets: %s", fmt(stray))
    base = enumerate_explanations(frame, cap)
    return base if ordering is None else select_minimal(base, ordering)


def focus(
    frame: AbductionFrame,
    remember: Iterable[str],
    ordering: Ordering | None = None,
    cap: int | None = DEFAULT_BUDGET,
) -> ExplanationSet:
    remember = frozenset(remember)
    return project_focus(_base(frame, remember, ordering, cap), remember)


def summarize(
    frame: AbductionFrame,
    remember: Iterable[str],
    ordering: Ordering | None = None,
    cap: int | None = DEFAULT_BUDGET,
) -> ExplanationSet:
    remember = frozenset(remember)
    return project_summarize(_base(frame, remember, ordering, cap), remember)


def forget(request: ForgetRequest, cap: int | None = DEFAULT_BUDGET) -> ExplanationSet:
    op = focus if request.operator == FOCUS else summarize
    return op(request.frame, request.remember, request.ordering, cap)


def remember_from_forget(frame: AbductionFrame, forgotten: Iterable[str]) -> frozenset[str]:
    """The complement of a forget-list against the frame's hypotheses and manifestations."""
    return (frame.hypotheses | frame.manifestations) - frozenset(forgotten)


def maximal_antichain(s: ExplanationSet) -> dict[frozenset[str], list[frozenset[str]]]:
    """For each hypothesis set, its ⊆-maximal manifestation sets."""
    by_e: dict[frozenset[str], list[frozenset[str]]] = defaultdict(list)
    for x in s:
        by_e[x.hypotheses].append(x.manifestations)
    return {
        e: [m for m in ms if not any(m < other for other in ms)]
        for e, ms in by_e.items()
    }
