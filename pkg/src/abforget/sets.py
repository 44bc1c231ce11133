"""Small helpers for variable sets: canonical ordering and subset enumeration."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

VarSet = frozenset  # frozenset[str]


def set_key(s: Iterable[str]) -> tuple:
    """Order by cardinality, then lexicographically on the sorted names."""
    items = tuple(sorted(s))
    return (len(items), items)


def subsets(items: Iterable[str], *, nonempty: bool = False) -> Iterator[frozenset[str]]:
    """All subsets in canonical order (cardinality, then lexicographic)."""
    items = sorted(set(items))
    for k in range(1 if nonempty else 0, len(items) + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def between(lower: frozenset[str], upper: frozenset[str]) -> Iterator[frozenset[str]]:
    """Sets ``X`` with ``lower <= X <= upper`` in canonical order."""
    for extra in subsets(upper - lower):
        yield lower | extra


def fmt(s: Iterable[str]) -> str:
    items = sorted(s)
    return ",".join(items) if items else "{}"


class BudgetExceeded(RuntimeError):
    """A brute-force enumeration would exceed its configured size cap."""

    def __init__(self, what: str, required: int, limit: int):
        self.what = what
        self.required = required
        self.limit = limit
        super().__init__(f"{what}: size {required} exceeds budget {limit}")


def check_budget(what: str, required: int, limit: int | None) -> None:
    if limit is not None and required > limit:
        raise BudgetExceeded(what, required, limit)
