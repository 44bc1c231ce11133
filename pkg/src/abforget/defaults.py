"""Default theories that credulously support explanation sets.

Only normal defaults whose parts are conjunctions of literals, over a
background of literals, are handled.  That is the class emitted by
:func:`emit_default_theory`; anything else is rejected rather than
approximated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .abduction import Explanation, ExplanationSet
from .expressibility import ConditionVerdict, ConsequentialWitness
from .logic import variable_name
from .sets import subsets


class DefaultTheoryError(ValueError):
    """The theory lies outside the restricted class the evaluator handles."""


class Literal(NamedTuple):
    var: str
    positive: bool = True

    def negate(self) -> "Literal":
        return Literal(self.var, not self.positive)

    def __str__(self) -> str:
        return self.var if self.positive else "!" + self.var

    @classmethod
    def parse(cls, text: str) -> "Literal":
        text = text.strip()
        if text.startswith("!"):
            return cls(variable_name(text[1:].strip()), False)
        return cls(variable_name(text), True)


def _lits(items: Iterable[Literal]) -> frozenset[Literal]:
    return frozenset(Literal(*x) for x in items)


def consistent(lits: Iterable[Literal]) -> bool:
    lits = set(lits)
    return not any(x.negate() in lits for x in lits)


def _fmt_conj(lits: frozenset[Literal]) -> str:
    if not lits:
        return "true"
    return ",".join(str(x) for x in sorted(lits, key=lambda l: (l.var, not l.positive)))


@dataclass(frozen=True)
class DefaultRule:
    prerequisite: frozenset[Literal]
    justification: frozenset[Literal]
    consequent: frozenset[Literal]

    def __post_init__(self) -> None:
        for name in ("prerequisite", "justification", "consequent"):
            object.__setattr__(self, name, _lits(getattr(self, name)))

    @property
    def normal(self) -> bool:
        return self.justification == self.consequent

    def applicable(self, context: frozenset[Literal]) -> bool:
        return self.prerequisite <= context and consistent(context | self.justification)

    def __str__(self) -> str:
        return f"{_fmt_conj(self.prerequisite)} :: {_fmt_conj(self.justification)} / {_fmt_conj(self.consequent)}"


@dataclass(frozen=True)
class DefaultTheory:
    defaults: tuple[DefaultRule, ...] = ()
    background: frozenset[Literal] = field(default=frozenset())

    def __post_init__(self) -> None:
        object.__setattr__(self, "defaults", tuple(self.defaults))
        object.__setattr__(self, "background", _lits(self.background))


def emit_default_theory(s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str]) -> DefaultTheory:
    """One normal default ``E : K / K`` per member, ``K = E ∧ ¬(I∖E) ∧ M ∧ ¬(C∖M)``."""
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    s.check_over(hyp, man)
    rules = []
    for x in s:
        k = (
            {Literal(v, True) for v in x.hypotheses}
            | {Literal(v, False) for v in hyp - x.hypotheses}
            | {Literal(v, True) for v in x.manifestations}
            | {Literal(v, False) for v in man - x.manifestations}
        )
        rules.append(DefaultRule({Literal(v) for v in x.hypotheses}, k, k))
    return DefaultTheory(tuple(rules))


def extensions(theory: DefaultTheory, assumptions: Iterable[str] = ()) -> list[frozenset[Literal]]:
    """Extensions of ``<D, W ∪ assumptions>`` as literal sets.

    Each extension comes from applying at most one default; a second default
    still applicable afterwards means the theory is outside the handled class.
    """
    for d in theory.defaults:
        if not d.normal:
            raise DefaultTheoryError(f"non-normal default: {d}")
    base = theory.background | {Literal(a) for a in assumptions}
    if not consistent(base):
        raise DefaultTheoryError("background and assumptions are inconsistent")
    applicable = [d for d in theory.defaults if d.applicable(base)]
    if not applicable:
        return [base]
    found: dict[frozenset[Literal], None] = {}
    for d in applicable:
        ext = base | d.consequent
        for other in theory.defaults:
            if other is not d and other.applicable(ext) and not other.consequent <= ext:
                raise DefaultTheoryError(f"defaults applicable together: {d} and {other}")
        found.setdefault(ext, None)
    return sorted(found, key=lambda e: sorted((l.var, not l.positive) for l in e))


def default_supports(theory: DefaultTheory, expl: Explanation) -> bool:
    """Some extension of ``<D, W ∪ E>`` contains every manifestation of ``M``."""
    goal = {Literal(m) for m in expl.manifestations}
    return any(goal <= ext for ext in extensions(theory, expl.hypotheses))


def default_explanations(theory: DefaultTheory, hypotheses: Iterable[str], manifestations: Iterable[str]) -> ExplanationSet:
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    out = []
    for e in subsets(hyp):
        for m in subsets(man, nonempty=True):
            x = Explanation(e, m)
            if default_supports(theory, x):
                out.append(x)
    return ExplanationSet(out)


def verify_default_roundtrip(s: ExplanationSet, hypotheses: Iterable[str], manifestations: Iterable[str]) -> ConditionVerdict:
    """Whether the emitted theory supports exactly ``s``; the witness is the first differing explanation."""
    hyp, man = frozenset(hypotheses), frozenset(manifestations)
    got = default_explanations(emit_default_theory(s, hyp, man), hyp, man)
    if got == s:
        return ConditionVerdict(True)
    if any(x not in got for x in s):
        raise AssertionError("emitted theory fails to support a member of the set")
    # extras are exactly the downward-closure gaps of s
    extra = min(x for x in got if x not in s)
    owner = min(x for x in s if x.hypotheses == extra.hypotheses and extra.manifestations < x.manifestations)
    return ConditionVerdict(False, ConsequentialWitness(owner.hypotheses, owner.manifestations, extra.manifestations))


# -- text format ----------------------------------------------------------

def format_theory(theory: DefaultTheory) -> str:
    """One ``PRE :: JUST / CONS`` line per default, then the ``[W]`` section."""
    lines = [str(d) for d in theory.defaults]
    lines.append("[W]")
    if theory.background:
        lines.append(_fmt_conj(theory.background))
    return "\n".join(lines) + "\n"


def _parse_conj(text: str) -> frozenset[Literal]:
    text = text.strip()
    if text == "true":
        return frozenset()
    return frozenset(Literal.parse(t) for t in text.split(","))


def parse_theory(text: str) -> DefaultTheory:
    rules = []
    background: set[Literal] = set()
    in_w = False
    for n, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line == "[W]":
            in_w = True
            continue
        try:
            if in_w:
                background |= _parse_conj(line)
                continue
            pre, rest = line.split("::")
            just, cons = rest.split("/")
            rules.append(DefaultRule(_parse_conj(pre), _parse_conj(just), _parse_conj(cons)))
        except ValueError as exc:
            raise ValueError(f"line {n}: malformed default {line!r}: {exc}") from None
    return DefaultTheory(tuple(rules), frozenset(background))
