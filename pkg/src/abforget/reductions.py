"""Reductions from ∃X∀Y∃Z QBF validity to conditions on summarized explanation sets.

Two generators are provided.  ``reduce_to_conjunctive`` builds a frame whose
summarization violates the conjunctive condition exactly when the QBF is
true; ``reduce_to_monotony`` does the same for overreaching monotony.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .abduction import AbductionFrame
from .logic import FALSE, And, Formula, Implies, Node, Not, Or, Var, conj, disj, evaluate, parse_expr, variables
from .logic.formula import format_node
from .sets import check_budget

QBF_BUDGET = 18


class QbfError(ValueError):
    """Malformed QBF instance or text."""


@dataclass(frozen=True)
class QbfInstance:
    """``∃ x_vars ∀ y_vars ∃ z_vars . matrix`` with three blocks of equal length."""

    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...]
    z_vars: tuple[str, ...]
    matrix: Node

    def __post_init__(self) -> None:
        for name in ("x_vars", "y_vars", "z_vars"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        x, y, z = set(self.x_vars), set(self.y_vars), set(self.z_vars)
        if len(x) != len(self.x_vars) or len(y) != len(self.y_vars) or len(z) != len(self.z_vars):
            raise QbfError("repeated variable inside a quantifier block")
        if x & y or x & z or y & z:
            raise QbfError("quantifier blocks must be disjoint")
        if not (len(self.x_vars) == len(self.y_vars) == len(self.z_vars)):
            raise QbfError(
                f"blocks must have equal length, got {len(self.x_vars)}/{len(self.y_vars)}/{len(self.z_vars)}"
            )
        stray = variables(self.matrix) - x - y - z
        if stray:
            raise QbfError(f"matrix uses unquantified variables: {sorted(stray)}")

    @property
    def n(self) -> int:
        return len(self.x_vars)

    @property
    def all_vars(self) -> frozenset[str]:
        return frozenset(self.x_vars + self.y_vars + self.z_vars)


def _assignments(names: Sequence[str]):
    for bits in product((False, True), repeat=len(names)):
        yield dict(zip(names, bits))


def eval_qbf(q: QbfInstance) -> bool:
    """Brute-force truth of ``∃X ∀Y ∃Z . matrix``."""
    check_budget("QBF variables", 3 * q.n, QBF_BUDGET)
    for xs in _assignments(q.x_vars):
        if all(
            any(evaluate(q.matrix, {**xs, **ys, **zs}) for zs in _assignments(q.z_vars))
            for ys in _assignments(q.y_vars)
        ):
            return True
    return False


@dataclass(frozen=True)
class ReductionOutput:
    frame: AbductionFrame
    remember: frozenset[str]
    fresh_map: dict = field(compare=False)  # generated role name -> variable used


class _Names:
    """Generated names, primed until they avoid the QBF's own variables."""

    def __init__(self, taken: Iterable[str]):
        self.taken = set(taken)
        self.map: dict[str, str] = {}

    def __call__(self, role: str) -> str:
        if role not in self.map:
            name = role
            while name in self.taken:
                name += "'"
            self.taken.add(name)
            self.map[role] = name
        return self.map[role]


def _v(name: str) -> Var:
    return Var(name)


def _imp(body: Sequence[str], head: Node) -> Node:
    return Implies(conj(_v(b) for b in body), head)


def _neither(p: str, n: str) -> Node:
    return And((Not(_v(p)), Not(_v(n))))


def reduce_to_conjunctive(q: QbfInstance) -> ReductionOutput:
    """Frame whose summarization on ``R`` violates the conjunctive condition iff ``q`` is true."""
    name = _Names(q.all_vars)
    idx = range(1, q.n + 1)
    xp = [name(f"x{i}_p") for i in idx]
    xn = [name(f"x{i}_n") for i in idx]
    xs = [name(f"x{i}_s") for i in idx]
    yp = [name(f"y{i}_p") for i in idx]
    yn = [name(f"y{i}_n") for i in idx]
    ms = [name(f"m{i}") for i in idx]
    k = range(q.n)
    sentences: list[Node] = []
    sentences += [_imp([xp[i], xs[i]], _v(ms[i])) for i in k]
    sentences += [_imp([xn[i], xs[i]], _v(ms[i])) for i in k]
    sentences += [_imp([xp[i], xn[i]], FALSE) for i in k]
    sentences += [_imp([xs[i], *ms], FALSE) for i in k]
    sentences += [_imp([xp[i]], _v(q.x_vars[i])) for i in k]
    sentences += [_imp([xn[i]], Not(_v(q.x_vars[i]))) for i in k]
    sentences += [_imp([yp[i]], _v(q.y_vars[i])) for i in k]
    sentences += [_imp([yn[i]], Not(_v(q.y_vars[i]))) for i in k]
    sentences.append(Or((
        q.matrix,
        *(_neither(xp[i], xn[i]) for i in k),
        *(_neither(yp[i], yn[i]) for i in k),
        conj(_v(m) for m in ms),
    )))
    hyps = frozenset(xp + xn + xs + yp + yn)
    frame = AbductionFrame(Formula(tuple(sentences)), hyps, frozenset(ms))
    return ReductionOutput(frame, frozenset(xp + xn + ms), dict(name.map))


def reduce_to_monotony(q: QbfInstance) -> ReductionOutput:
    """Frame whose summarization on ``R`` violates overreaching monotony iff ``q`` is true."""
    name = _Names(q.all_vars)
    a, b, c, m = name("a"), name("b"), name("c"), name("m")
    idx = range(1, q.n + 1)
    xp = [name(f"x{i}_p") for i in idx]
    xn = [name(f"x{i}_n") for i in idx]
    yp = [name(f"y{i}_p") for i in idx]
    yn = [name(f"y{i}_n") for i in idx]
    k = range(q.n)
    sentences: list[Node] = [_imp([a, c], _v(m))]
    sentences += [_imp([xp[i]], _v(q.x_vars[i])) for i in k]
    sentences += [_imp([xn[i]], Not(_v(q.x_vars[i]))) for i in k]
    sentences.append(Implies(
        conj([_v(a), *(Or((_v(xp[i]), _v(xn[i]))) for i in k)]),
        Not(_v(c)),
    ))
    sentences += [_imp([yp[i]], _v(q.y_vars[i])) for i in k]
    sentences += [_imp([yn[i]], Not(_v(q.y_vars[i]))) for i in k]
    sentences.append(Or((
        q.matrix,
        Not(_v(a)),
        _v(c),
        *(_neither(yp[i], yn[i]) for i in k),
        _v(m),
    )))
    sentences.append(_imp([a, b], _v(m)))
    hyps = frozenset([a, b, c] + xp + xn + yp + yn)
    frame = AbductionFrame(Formula(tuple(sentences)), hyps, frozenset([m]))
    return ReductionOutput(frame, frozenset([a, b, m] + xp + xn), dict(name.map))


# -- matrices and text format ----------------------------------------------

def matrix_from_truth_table(names: Sequence[str], table: int) -> Node:
    """DNF whose models are the assignments ``j`` with bit ``j`` of ``table`` set.

    Assignment ``j`` gives ``names[i]`` the value of bit ``len(names)-1-i`` of ``j``.
    """
    width = len(names)
    terms = []
    for j in range(2 ** width):
        if table >> j & 1:
            lits = [
                _v(v) if (j >> (width - 1 - i)) & 1 else Not(_v(v))
                for i, v in enumerate(names)
            ]
            terms.append(conj(lits))
    return disj(terms)


def standard_instance(n: int, table: int) -> QbfInstance:
    """Instance over x1..xn, y1..yn, z1..zn with the matrix given by a truth table."""
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    ys = tuple(f"y{i}" for i in range(1, n + 1))
    zs = tuple(f"z{i}" for i in range(1, n + 1))
    return QbfInstance(xs, ys, zs, matrix_from_truth_table(xs + ys + zs, table))


def parse_qbf(text: str) -> QbfInstance:
    """Three ``exists:`` / ``forall:`` / ``exists2:`` header lines, then the matrix."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 4:
        raise QbfError("expected three quantifier lines followed by a matrix")
    blocks = []
    for line, tag in zip(lines[:3], ("exists", "forall", "exists2")):
        head, sep, rest = line.partition(":")
        if not sep or head.strip() != tag:
            raise QbfError(f"expected '{tag}:' header, got {line!r}")
        blocks.append(tuple(rest.split()))
    matrix = parse_expr("\n".join(lines[3:]))
    return QbfInstance(blocks[0], blocks[1], blocks[2], matrix)


def format_qbf(q: QbfInstance) -> str:
    return (
        f"exists: {' '.join(q.x_vars)}\n"
        f"forall: {' '.join(q.y_vars)}\n"
        f"exists2: {' '.join(q.z_vars)}\n"
        f"{format_node(q.matrix)}\n"
    )
