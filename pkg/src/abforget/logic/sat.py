"""DPLL with unit propagation and pure-literal elimination.

Clauses are sequences of nonzero ints, ``-v`` being the negation of ``v``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Clause = Sequence[int]


def _assign(clauses: list[list[int]], lit: int) -> list[list[int]] | None:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = [x for x in c if x != -lit]
            if not c:
                return None
        out.append(c)
    return out


def _dpll(clauses: list[list[int]], model: dict[int, bool]) -> dict[int, bool] | None:
    while True:
        unit = next((c[0] for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        model[abs(unit)] = unit > 0
        clauses = _assign(clauses, unit)
        if clauses is None:
            return None

    lits = {x for c in clauses for x in c}
    pure = [x for x in lits if -x not in lits]
    if pure:
        for x in pure:
            model[abs(x)] = x > 0
        clauses = [c for c in clauses if not any(x in c for x in pure)]

    if not clauses:
        return model

    branch = min(clauses, key=len)[0]
    for lit in (branch, -branch):
        reduced = _assign(clauses, lit)
        if reduced is not None:
            trial = dict(model)
            trial[abs(lit)] = lit > 0
            found = _dpll(reduced, trial)
            if found is not None:
                return found
    return None


def solve(clauses: Iterable[Clause], assumptions: Iterable[int] = ()) -> dict[int, bool] | None:
    """Return a (partial) satisfying assignment or ``None`` when unsatisfiable.

    Variables absent from the returned model are unconstrained.
    """
    work: list[list[int]] = []
    for c in clauses:
        c = list(dict.fromkeys(c))
        if not c:
            return None
        if any(-x in c for x in c):
            continue
        work.append(c)
    work.extend([a] for a in assumptions)
    return _dpll(work, {})


def satisfiable(clauses: Iterable[Clause], assumptions: Iterable[int] = ()) -> bool:
    return solve(clauses, assumptions) is not None
