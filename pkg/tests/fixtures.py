"""Worked instances shared by the module tests and the acceptance suite."""

from __future__ import annotations

from abforget.abduction import AbductionFrame, ExplanationSet
from abforget.logic import parse_sentences


def frame(lines, hyps, mans) -> AbductionFrame:
    return AbductionFrame(parse_sentences(lines), frozenset(hyps), frozenset(mans))


def eset(*pairs: str) -> ExplanationSet:
    """``eset("ab:x", "a:xy")``; each letter is one variable, ``-`` is the empty set."""
    out = []
    for p in pairs:
        e, m = p.split(":")
        out.append((frozenset("" if e == "-" else e), frozenset(m)))
    return ExplanationSet.of(out)


def pairs(s) -> set:
    return {(x.hypotheses, x.manifestations) for x in s}


# unsupportable forgetting: two hypotheses that cannot be joined
BLOCKED = (["a & b -> x", "a & c -> y", "b & c -> false"], "abc", "xy")

# focus and summarize diverge in minimal mode
CHAIN = (["a -> x", "a & b -> y"], "ab", "xy")

# abductive and consequential forgetting diverge
SINGLE = (["a & b -> x"], "ab", "x")

# summarize breaks overreaching monotony when b is forgotten
MONOTONY_BREAK = (["a & b -> m", "!b | !c", "a & c -> mm"], "abcd", ["m", "mm"])

# size-minimality instance, as repaired for the missing separator and alphabet
SIZE_MIN = (
    ["a & b & c -> x", "a & b & d -> y", "c & d -> false", "e & f -> x", "e & f -> y"],
    ["a", "b", "c", "d", "e", "f", "a'"],
    "xy",
    {"b", "c", "f"},
)

# containment-minimality instance, same repairs
CONTAIN_MIN = (
    ["a & b & c -> x", "a & b & d -> y", "c & d -> false", "a & e -> x", "a & e -> y"],
    ["a", "b", "c", "d", "e", "a'"],
    "xy",
    {"b", "c"},
)

# minimal support without exact support
MIN_ONLY = (["a -> x", "a & b & x -> false", "c & d -> y"], "abcd", "xy", {"c"})


def _s(items) -> ExplanationSet:
    return ExplanationSet.of((frozenset(e), frozenset(m)) for e, m in items)


# Oracle output for SIZE_MIN (summarize on the remembered set), frozen.
SIZE_MIN_ALL = _s([
    (["a"], "x"), (["a'", "d", "e"], "x"), (["a'", "d", "e"], "xy"), (["a'", "d", "e"], "y"),
    (["a'", "e"], "x"), (["a'", "e"], "xy"), (["a'", "e"], "y"), (["a", "a'"], "x"),
    (["a", "a'", "d"], "y"), (["a", "a'", "d", "e"], "x"), (["a", "a'", "d", "e"], "xy"),
    (["a", "a'", "d", "e"], "y"), (["a", "a'", "e"], "x"), (["a", "a'", "e"], "xy"),
    (["a", "a'", "e"], "y"), (["a", "d"], "y"), (["a", "d", "e"], "x"), (["a", "d", "e"], "xy"),
    (["a", "d", "e"], "y"), (["a", "e"], "x"), (["a", "e"], "xy"), (["a", "e"], "y"),
    (["d", "e"], "x"), (["d", "e"], "xy"), (["d", "e"], "y"), (["e"], "x"), (["e"], "xy"), (["e"], "y"),
])
SIZE_MIN_SUBSET = _s([(["a"], "x"), (["a", "d"], "y"), (["e"], "x"), (["e"], "xy"), (["e"], "y")])
SIZE_MIN_CARD = _s([(["e"], "x"), (["e"], "xy"), (["e"], "y")])

CONTAIN_MIN_ALL = _s([
    (["a"], "x"), (["a", "a'"], "x"), (["a", "a'", "d"], "y"), (["a", "a'", "d", "e"], "x"),
    (["a", "a'", "d", "e"], "xy"), (["a", "a'", "d", "e"], "y"), (["a", "a'", "e"], "x"),
    (["a", "a'", "e"], "xy"), (["a", "a'", "e"], "y"), (["a", "d"], "y"), (["a", "d", "e"], "x"),
    (["a", "d", "e"], "xy"), (["a", "d", "e"], "y"), (["a", "e"], "x"), (["a", "e"], "xy"), (["a", "e"], "y"),
])
CONTAIN_MIN_SUBSET = _s([(["a"], "x"), (["a", "d"], "y"), (["a", "e"], "x"), (["a", "e"], "xy"), (["a", "e"], "y")])
CONTAIN_MIN_CARD = _s([(["a", "e"], "x"), (["a", "e"], "xy"), (["a", "e"], "y")])

MIN_ONLY_ALL = _s([(["a"], "x"), (["a", "d"], "x"), (["a", "d"], "xy"), (["a", "d"], "y"), (["b", "d"], "y"), (["d"], "y")])
MIN_ONLY_SUBSET = _s([(["a"], "x"), (["a", "d"], "xy"), (["d"], "y")])
MIN_ONLY_CARD = MIN_ONLY_SUBSET
