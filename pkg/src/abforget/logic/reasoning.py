"""Consistency, entailment and consequential forgetting."""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping

from . import sat
from .cnf import to_cnf
from .formula import FALSE, TRUE, And, Const, Formula, Implies, Node, Not, Or, Var, disj


class Reasoner:
    """SAT queries against one formula under sets of positive assumptions.

    The CNF is built once, so repeated queries only pay for the search.
    Variables outside the formula's alphabet are unconstrained.
    """

    def __init__(self, formula: Formula):
        self.formula = formula
        self.cnf = to_cnf(formula)
        self._ids = {n: i + 1 for i, n in enumerate(self.cnf.names)}

    def _units(self, assumptions: Iterable[str]) -> list[int]:
        return [self._ids[a] for a in assumptions if a in self._ids]

    def consistent(self, assumptions: Iterable[str] = ()) -> bool:
        return sat.satisfiable(self.cnf.clauses, self._units(assumptions))

    def entails_var(self, assumptions: Iterable[str], goal: str) -> bool:
        assumptions = list(assumptions)
        if goal in assumptions:
            return True
        units = self._units(assumptions)
        if goal in self._ids:
            units.append(-self._ids[goal])
        return not sat.satisfiable(self.cnf.clauses, units)

    def entails(self, assumptions: Iterable[str], goal: Iterable[str]) -> bool:
        assumptions = list(assumptions)
        return all(self.entails_var(assumptions, g) for g in goal)


def is_consistent(f: Formula, assumptions: Iterable[str] = ()) -> bool:
    return Reasoner(f).consistent(assumptions)


def entails(f: Formula, assumptions: Iterable[str], goal: Iterable[str]) -> bool:
    """Every model of ``f`` plus the assumptions sets every goal variable true."""
    return Reasoner(f).entails(assumptions, goal)


def substitute(node: Node, values: Mapping[str, bool]) -> Node:
    """Replace variables by constants and fold the constants away."""
    if isinstance(node, Var):
        if node.name in values:
            return TRUE if values[node.name] else FALSE
        return node
    if isinstance(node, Const):
        return node
    if isinstance(node, Not):
        child = substitute(node.child, values)
        if isinstance(child, Const):
            return Const(not child.value)
        return Not(child)
    if isinstance(node, Implies):
        a = substitute(node.antecedent, values)
        b = substitute(node.consequent, values)
        if a == FALSE or b == TRUE:
            return TRUE
        if a == TRUE:
            return b
        if b == FALSE:
            return Not(a)
        return Implies(a, b)
    kids = [substitute(c, values) for c in node.children]
    absorbing, neutral = (FALSE, TRUE) if isinstance(node, And) else (TRUE, FALSE)
    if absorbing in kids:
        return absorbing
    kids = [k for k in kids if k != neutral]
    if not kids:
        return neutral
    if len(kids) == 1:
        return kids[0]
    return type(node)(tuple(kids))


def consequential_forget(f: Formula, drop: Iterable[str]) -> Formula:
    """Disjunction of ``f`` over every constant substitution of the dropped variables.

    A result equivalent to true is returned as the empty formula.
    """
    drop = sorted(set(drop) & f.alphabet)
    body = substitute(And(f.sentences), {}) if f.sentences else TRUE
    branches = []
    for values in product((True, False), repeat=len(drop)):
        b = substitute(body, dict(zip(drop, values)))
        if b == TRUE:
            return Formula()
        if b != FALSE and b not in branches:
            branches.append(b)
    result = disj(branches)
    if isinstance(result, Const):
        return Formula() if result.value else Formula((FALSE,))
    return Formula((result,))
