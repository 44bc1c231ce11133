"""Definitional CNF encoding of formulas."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import And, Const, Formula, Implies, Node, Not, Or, Var


@dataclass(frozen=True)
class CnfProgram:
    clauses: tuple[tuple[int, ...], ...]
    names: tuple[str, ...]  # names[i - 1] is the variable numbered i
    original_vars: frozenset[str]
    auxiliary_vars: frozenset[str]

    def index(self, name: str) -> int | None:
        try:
            return self.names.index(name) + 1
        except ValueError:
            return None

    def literal_clauses(self) -> list[list[str]]:
        """Clauses with literals spelled as ``name`` / ``!name``."""
        return [
            [("" if x > 0 else "!") + self.names[abs(x) - 1] for x in c]
            for c in self.clauses
        ]


def _cube(node: Node) -> list[Node] | None:
    if isinstance(node, And):
        out: list[Node] = []
        for c in node.children:
            sub = _cube(c)
            if sub is None:
                return None
            out.extend(sub)
        return out
    if isinstance(node, Var) or (isinstance(node, Not) and isinstance(node.child, Var)):
        return [node]
    if isinstance(node, Const) and node.value:
        return []
    return None


def _literals(node: Node) -> list[Node] | None:
    """The literals of ``node`` when it is already clause-shaped."""
    if isinstance(node, Var) or (isinstance(node, Not) and isinstance(node.child, Var)):
        return [node]
    if isinstance(node, Const) and not node.value:
        return []
    if isinstance(node, Or):
        out: list[Node] = []
        for c in node.children:
            sub = _literals(c)
            if sub is None:
                return None
            out.extend(sub)
        return out
    if isinstance(node, Implies):
        body = _cube(node.antecedent)
        head = _literals(node.consequent)
        if body is None or head is None:
            return None
        return [lit.child if isinstance(lit, Not) else Not(lit) for lit in body] + head
    return None


class _Encoder:
    def __init__(self, originals: frozenset[str]):
        self.names: list[str] = sorted(originals)
        self.ids = {n: i + 1 for i, n in enumerate(self.names)}
        self.aux: list[str] = []
        self.clauses: list[tuple[int, ...]] = []
        self.memo: dict[Node, int] = {}

    def fresh(self) -> int:
        # '#' cannot occur in an identifier, so auxiliaries never collide with originals
        name = f"#{len(self.aux) + 1}"
        self.aux.append(name)
        self.names.append(name)
        self.ids[name] = len(self.names)
        return len(self.names)

    def lit(self, node: Node) -> int:
        if isinstance(node, Var):
            return self.ids[node.name]
        if isinstance(node, Not):
            return -self.lit(node.child)
        if node in self.memo:
            return self.memo[node]
        if isinstance(node, Const):
            t = self.fresh()
            self.clauses.append((t,) if node.value else (-t,))
        elif isinstance(node, Implies):
            t = self.lit(Or((Not(node.antecedent), node.consequent)))
        else:
            kids = [self.lit(c) for c in node.children]
            t = self.fresh()
            if isinstance(node, And):
                self.clauses.extend((-t, k) for k in kids)
                self.clauses.append(tuple([t] + [-k for k in kids]))
            else:
                self.clauses.append(tuple([-t] + kids))
                self.clauses.extend((t, -k) for k in kids)
        self.memo[node] = t
        return t

    def require(self, node: Node) -> None:
        if isinstance(node, Const):
            if not node.value:
                self.clauses.append(())
            return
        if isinstance(node, And):
            for c in node.children:
                self.require(c)
            return
        lits = _literals(node)
        if lits is not None:
            self.clauses.append(tuple(self.lit(x) for x in lits))
            return
        self.clauses.append((self.lit(node),))


def to_cnf(f: Formula) -> CnfProgram:
    """Equisatisfiable clauses; models projected on the original variables are exactly those of ``f``."""
    enc = _Encoder(f.alphabet)
    for s in f.sentences:
        enc.require(s)
    return CnfProgram(
        clauses=tuple(enc.clauses),
        names=tuple(enc.names),
        original_vars=f.alphabet,
        auxiliary_vars=frozenset(enc.aux),
    )
