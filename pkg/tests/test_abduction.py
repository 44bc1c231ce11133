from __future__ import annotations

import random
from fractions import Fraction

import pytest

import oracles
from abforget.abduction import (
    AbductionFrame,
    Explanation,
    ExplanationSet,
    FrameError,
    Ordering,
    abduct,
    less,
    minabduct,
    supports,
)
from abforget.expressibility import check_conjunctive, check_overreaching_monotony
from abforget.logic import Formula, parse_sentences
from abforget.sets import BudgetExceeded
from fixtures import BLOCKED, CHAIN, SINGLE, eset, frame, pairs


class TestFrame:
    def test_overlap_rejected(self):
        with pytest.raises(FrameError):
            AbductionFrame(Formula(), frozenset("ab"), frozenset("bx"))

    def test_declared_extras(self):
        f = frame(["a -> x"], "ab", "xy")
        assert f.extras == {"b", "y"}

    def test_empty_manifestations_rejected(self):
        with pytest.raises(FrameError):
            Explanation(frozenset("a"), frozenset())

    def test_explanation_outside_frame(self):
        with pytest.raises(FrameError):
            supports(frame(*SINGLE), Explanation(frozenset("c"), frozenset("x")))


class TestSupports:
    def test_body_supports_head(self):
        assert supports(frame(*SINGLE), Explanation(frozenset("ab"), frozenset("x")))

    def test_inconsistent_hypotheses(self):
        assert not supports(frame(*BLOCKED), Explanation(frozenset("abc"), frozenset("xy")))


class TestEnumerate:
    def test_blocked(self):
        assert abduct(frame(*BLOCKED)) == eset("ab:x", "ac:y")

    def test_chain(self):
        assert abduct(frame(*CHAIN)) == eset("a:x", "ab:x", "ab:y", "ab:xy")

    def test_empty_formula(self):
        assert len(abduct(frame([], "ab", "x"))) == 0

    def test_empty_hypothesis_set_is_candidate(self):
        assert abduct(frame(["x"], "a", "x")) == eset("-:x", "a:x")

    def test_inconsistent_formula(self):
        assert len(abduct(frame(["false"], "a", "x"))) == 0

    def test_budget(self):
        names = [f"h{i}" for i in range(17)]
        with pytest.raises(BudgetExceeded) as info:
            abduct(AbductionFrame(Formula(), frozenset(names), frozenset("x")))
        assert info.value.required == 17

    def test_canonical_order(self):
        s = abduct(frame(*CHAIN))
        assert [str(x) for x in s] == ["a => x", "a,b => x", "a,b => y", "a,b => x,y"]

    def test_matches_oracle_on_random_frames(self):
        rng = random.Random(11)
        for _ in range(120):
            hyps = "abcd"[: rng.randint(1, 4)]
            mans = "xyz"[: rng.randint(1, 3)]
            lines = oracles.random_clause_formula(rng, hyps, mans)
            f = parse_sentences(lines)
            got = abduct(AbductionFrame(f, frozenset(hyps), frozenset(mans)))
            assert pairs(got) == oracles.abduct(tuple(f), hyps, mans), lines

    def test_conditions_hold_on_random_frames(self):
        rng = random.Random(5)
        for _ in range(100):
            hyps = "abcde"[: rng.randint(1, 5)]
            mans = "xyz"[: rng.randint(1, 3)]
            s = abduct(frame(oracles.random_clause_formula(rng, hyps, mans), hyps, mans))
            assert check_conjunctive(s).holds
            assert check_overreaching_monotony(s, hyps).holds
            for x in s:
                for m in oracles.powerset(x.manifestations, True):
                    assert s.has(x.hypotheses, m)


class TestMinimal:
    def test_subset(self):
        assert minabduct(frame(*CHAIN), Ordering.subset()) == eset("a:x", "ab:y", "ab:xy")

    def test_cardinality(self):
        assert minabduct(frame(*CHAIN), Ordering.cardinality()) == eset("a:x", "ab:y", "ab:xy")

    def test_empty(self):
        assert len(minabduct(frame([], "a", "x"), Ordering.subset())) == 0

    def test_matches_oracle(self):
        rng = random.Random(3)
        for _ in range(80):
            hyps, mans = "abcd", "xy"
            f = parse_sentences(oracles.random_clause_formula(rng, hyps, mans))
            all_ = oracles.abduct(tuple(f), hyps, mans)
            fr = AbductionFrame(f, frozenset(hyps), frozenset(mans))
            assert pairs(minabduct(fr, Ordering.subset())) == oracles.minimal(all_, oracles.subset_less)
            assert pairs(minabduct(fr, Ordering.cardinality())) == oracles.minimal(all_, oracles.card_less)
            got = minabduct(fr, Ordering.cardinality())
            assert got.members <= abduct(fr).members


class TestOrdering:
    def test_subset(self):
        assert less(Ordering.subset(), {"a"}, {"a", "b"})

    def test_cardinality(self):
        assert not less(Ordering.cardinality(), {"a", "b"}, {"c"})

    def test_weighted(self):
        w = Ordering.weighted({"a": 3, "b": 1, "c": 1})
        assert not less(w, {"a"}, {"b", "c"})
        assert less(w, {"b", "c"}, {"a"})
        assert w.weight({"a", "b"}) == Fraction(4)

    @pytest.mark.parametrize("bad", [0, -1, -0.5])
    def test_non_positive_weight(self, bad):
        with pytest.raises(FrameError):
            Ordering.weighted({"a": 1, "b": bad})

    def test_refines_subset(self):
        kinds = [Ordering.subset(), Ordering.cardinality(), Ordering.weighted({"a": 2, "b": 0.5, "c": 1})]
        sets = oracles.powerset("abc")
        for e1 in sets:
            for e2 in sets:
                if e1 < e2:
                    assert all(less(k, e1, e2) for k in kinds)


def test_explanation_set_equality_ignores_order():
    a = ExplanationSet.of([("a", "x"), ("b", "y")])
    b = ExplanationSet.of([("b", "y"), ("a", "x")])
    assert a == b and hash(a) == hash(b)
