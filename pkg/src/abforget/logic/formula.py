"""Propositional formula trees and the canonical printer."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
RESERVED = frozenset({"true", "false"})


def variable_name(name: str) -> str:
    """Validate and intern a variable name."""
    if not isinstance(name, str) or not IDENT_RE.match(name):
        raise ValueError(f"invalid variable name: {name!r}")
    if name in RESERVED:
        raise ValueError(f"reserved word used as variable: {name!r}")
    return name


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self) -> None:
        variable_name(self.name)


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    child: "Node"


@dataclass(frozen=True)
class And:
    children: tuple["Node", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("conjunction needs at least one child")


@dataclass(frozen=True)
class Or:
    children: tuple["Node", ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise ValueError("disjunction needs at least one child")


@dataclass(frozen=True)
class Implies:
    antecedent: "Node"
    consequent: "Node"


Node = Union[Var, Const, Not, And, Or, Implies]

TRUE = Const(True)
FALSE = Const(False)


def variables(node: Node) -> frozenset[str]:
    out: set[str] = set()
    stack = [node]
    while stack:
        n = stack.pop()
        if isinstance(n, Var):
            out.add(n.name)
        elif isinstance(n, Not):
            stack.append(n.child)
        elif isinstance(n, (And, Or)):
            stack.extend(n.children)
        elif isinstance(n, Implies):
            stack.append(n.antecedent)
            stack.append(n.consequent)
    return frozenset(out)


def evaluate(node: Node, assignment: Mapping[str, bool]) -> bool:
    if isinstance(node, Var):
        return assignment[node.name]
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Not):
        return not evaluate(node.child, assignment)
    if isinstance(node, And):
        return all(evaluate(c, assignment) for c in node.children)
    if isinstance(node, Or):
        return any(evaluate(c, assignment) for c in node.children)
    if isinstance(node, Implies):
        return (not evaluate(node.antecedent, assignment)) or evaluate(node.consequent, assignment)
    raise TypeError(node)


@dataclass(frozen=True)
class Formula:
    """A set of sentences read conjunctively."""

    sentences: tuple[Node, ...] = ()
    alphabet: frozenset[str] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "sentences", tuple(self.sentences))
        alpha: frozenset[str] = frozenset()
        for s in self.sentences:
            alpha |= variables(s)
        object.__setattr__(self, "alphabet", alpha)

    def __iter__(self):
        return iter(self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)

    def __str__(self) -> str:
        return "; ".join(format_formula(self)) or "true"

    def evaluate(self, assignment: Mapping[str, bool]) -> bool:
        return all(evaluate(s, assignment) for s in self.sentences)


def conj(nodes: Iterable[Node]) -> Node:
    nodes = tuple(nodes)
    if not nodes:
        return TRUE
    if len(nodes) == 1:
        return nodes[0]
    return And(nodes)


def disj(nodes: Iterable[Node]) -> Node:
    nodes = tuple(nodes)
    if not nodes:
        return FALSE
    if len(nodes) == 1:
        return nodes[0]
    return Or(nodes)


def clause(body: Iterable[str], head: str | None) -> Node:
    """The sentence ``b1 & ... & bk -> head`` (``head=None`` means false)."""
    body = sorted(set(body))
    target = FALSE if head is None else Var(head)
    if not body:
        return target
    return Implies(conj(Var(b) for b in body), target)


# -- canonical printer ------------------------------------------------------

_PREC = {Implies: 1, Or: 2, And: 3, Not: 4, Var: 5, Const: 5}


def canonical(node: Node) -> Node:
    """Flatten nested conjunctions/disjunctions and sort their children by text."""
    if isinstance(node, (Var, Const)):
        return node
    if isinstance(node, Not):
        return Not(canonical(node.child))
    if isinstance(node, Implies):
        return Implies(canonical(node.antecedent), canonical(node.consequent))
    kind = type(node)
    flat: list[Node] = []
    for c in node.children:
        c = canonical(c)
        if isinstance(c, kind):
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1:
        return flat[0]
    flat.sort(key=_text)
    return kind(tuple(flat))


def _wrap(node: Node, min_prec: int) -> str:
    s = _text(node)
    return f"({s})" if _PREC[type(node)] < min_prec else s


def _text(node: Node) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Const):
        return "true" if node.value else "false"
    if isinstance(node, Not):
        return "!" + _wrap(node.child, _PREC[Not])
    if isinstance(node, And):
        return " & ".join(_wrap(c, _PREC[And] + 1) for c in node.children)
    if isinstance(node, Or):
        return " | ".join(_wrap(c, _PREC[Or] + 1) for c in node.children)
    if isinstance(node, Implies):
        # right-associative: only the antecedent needs parentheses for a nested implication
        return f"{_wrap(node.antecedent, _PREC[Implies] + 1)} -> {_wrap(node.consequent, _PREC[Implies])}"
    raise TypeError(node)


def format_node(node: Node) -> str:
    return _text(canonical(node))


def format_formula(f: Formula) -> list[str]:
    """One canonical line per sentence, sorted."""
    return sorted(format_node(s) for s in f.sentences)
