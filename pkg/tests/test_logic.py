from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from abforget.logic import (
    FALSE,
    TRUE,
    And,
    Formula,
    FormulaSyntaxError,
    Implies,
    Not,
    Or,
    Var,
    consequential_forget,
    entails,
    format_formula,
    format_node,
    is_consistent,
    parse_expr,
    parse_formula,
    parse_sentences,
    to_cnf,
)
from abforget.logic.sat import satisfiable

NAMES = ["a", "b", "c", "d", "x", "y"]


def formulas(max_leaves: int = 8):
    atoms = st.one_of(st.sampled_from(NAMES).map(Var), st.sampled_from([TRUE, FALSE]))

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.lists(children, min_size=1, max_size=3).map(lambda xs: And(tuple(xs))),
            st.lists(children, min_size=1, max_size=3).map(lambda xs: Or(tuple(xs))),
            st.tuples(children, children).map(lambda p: Implies(*p)),
        )

    return st.recursive(atoms, extend, max_leaves=max_leaves)


class TestParser:
    def test_implication(self):
        assert parse_expr("a & b -> x") == Implies(And((Var("a"), Var("b"))), Var("x"))

    def test_false_head(self):
        assert parse_expr("b & c -> false") == Implies(And((Var("b"), Var("c"))), FALSE)

    def test_error_offset(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_expr("a & (")
        assert info.value.offset == 5
        assert (info.value.line, info.value.column) == (1, 6)

    def test_line_and_column(self):
        with pytest.raises(FormulaSyntaxError) as info:
            parse_expr("a &\n  | b")
        assert (info.value.line, info.value.column) == (2, 3)

    def test_right_associative_implication(self):
        assert parse_expr("a -> b -> c") == Implies(Var("a"), Implies(Var("b"), Var("c")))

    def test_precedence(self):
        assert parse_expr("!a & b | c") == Or((And((Not(Var("a")), Var("b"))), Var("c")))

    @pytest.mark.parametrize("bad", ["a | ", "a -> ", "a b", "()", "a & 1b"])
    def test_rejects(self, bad):
        with pytest.raises(FormulaSyntaxError):
            parse_expr(bad)

    def test_reserved_word_as_variable(self):
        with pytest.raises(ValueError):
            Var("true")

    def test_primed_names(self):
        assert parse_expr("a'' -> x") == Implies(Var("a''"), Var("x"))

    def test_parse_sentences_skips_blank(self):
        f = parse_sentences(["a", "", "  ", "b -> a"])
        assert len(f) == 2
        assert f.alphabet == {"a", "b"}

    @settings(max_examples=200, deadline=None)
    @given(formulas())
    def test_printer_round_trip(self, node):
        text = format_node(node)
        again = parse_expr(text)
        assert format_node(again) == text
        for w in oracles.worlds(NAMES):
            assert oracles.truth(again, w) == oracles.truth(node, w)


class TestFormula:
    def test_alphabet_is_exact(self):
        f = parse_sentences(["a & b -> x", "!c | true"])
        assert f.alphabet == {"a", "b", "c", "x"}

    def test_canonical_lines_sorted(self):
        f = parse_sentences(["b & a -> y", "a -> x"])
        assert format_formula(f) == ["a & b -> y", "a -> x"]


class TestReasoning:
    def test_direct_contradiction(self):
        assert not is_consistent(parse_sentences(["a", "!a"]), set())

    def test_blocked_pair(self):
        f = parse_sentences(["a & b -> x", "a & c -> y", "b & c -> false"])
        assert not is_consistent(f, {"a", "b", "c"})
        assert entails(f, {"a", "b"}, {"x"})

    def test_consistent_body(self):
        assert is_consistent(parse_sentences(["a & b -> x"]), {"a", "b"})

    def test_modus_ponens(self):
        assert entails(parse_sentences(["a -> b"]), {"a"}, {"b"})

    def test_empty_theory_entails_nothing(self):
        assert not entails(Formula(), set(), {"a"})

    @settings(max_examples=150, deadline=None)
    @given(st.lists(formulas(6), min_size=1, max_size=3), st.sets(st.sampled_from(NAMES), max_size=3))
    def test_consistency_matches_truth_table(self, nodes, assumptions):
        f = Formula(tuple(nodes))
        names = set(NAMES)
        expected = any(all(w[a] for a in assumptions) for w in oracles.models(nodes, names))
        assert is_consistent(f, assumptions) == expected

    @settings(max_examples=150, deadline=None)
    @given(st.lists(formulas(6), min_size=1, max_size=3), st.sets(st.sampled_from(NAMES), max_size=2),
           st.sampled_from(NAMES))
    def test_entailment_matches_truth_table(self, nodes, assumptions, goal):
        f = Formula(tuple(nodes))
        rel = [w for w in oracles.models(nodes, NAMES) if all(w[a] for a in assumptions)]
        assert entails(f, assumptions, {goal}) == all(w[goal] for w in rel)

    @settings(max_examples=100, deadline=None)
    @given(st.lists(formulas(6), min_size=1, max_size=3), st.sets(st.sampled_from(NAMES), max_size=2),
           st.sets(st.sampled_from(NAMES), max_size=2), st.sampled_from(NAMES))
    def test_entailment_monotone(self, nodes, a1, a2, goal):
        f = Formula(tuple(nodes))
        if entails(f, a1, {goal}):
            assert entails(f, a1 | a2, {goal})
            assert entails(Formula(tuple(nodes) + (Var("d"),)), a1, {goal})


class TestCnf:
    def test_true_gives_no_clauses(self):
        assert to_cnf(Formula((TRUE,))).clauses == ()

    def test_disjunction_with_conjunction(self):
        prog = to_cnf(parse_sentences(["a | (b & c)"]))
        assert prog.auxiliary_vars.isdisjoint(prog.original_vars)
        count = 0
        for w in oracles.worlds("abc"):
            assumptions = [prog.index(v) if w[v] else -prog.index(v) for v in "abc"]
            count += satisfiable(prog.clauses, assumptions)
        assert count == 5

    def test_contradiction_preserved(self):
        assert not satisfiable(to_cnf(parse_sentences(["a", "!a"])).clauses)

    def test_clause_shaped_bypass(self):
        prog = to_cnf(parse_sentences(["a & b -> x", "b & c -> false"]))
        assert not prog.auxiliary_vars
        assert len(prog.clauses) == 2

    @settings(max_examples=200, deadline=None)
    @given(st.lists(formulas(), min_size=1, max_size=3))
    def test_satisfiability_preserved(self, nodes):
        expected = bool(oracles.models(nodes, NAMES))
        assert satisfiable(to_cnf(Formula(tuple(nodes))).clauses) == expected


def _equivalent_over(f: Formula, g: Formula, names) -> bool:
    return all(
        all(oracles.truth(s, w) for s in f) == all(oracles.truth(s, w) for s in g)
        for w in oracles.worlds(names)
    )


class TestConsequentialForget:
    def test_single_clause_becomes_tautology(self):
        out = consequential_forget(parse_sentences(["a & b -> x"]), {"b"})
        assert _equivalent_over(out, Formula(), "ax")
        assert "b" not in out.alphabet

    def test_forgotten_unit(self):
        out = consequential_forget(parse_sentences(["x"]), {"x"})
        assert _equivalent_over(out, Formula(), "")

    def test_shared_head(self):
        out = consequential_forget(parse_sentences(["a -> x", "b -> x"]), {"b"})
        assert _equivalent_over(out, parse_sentences(["a -> x"]), "ax")

    @settings(max_examples=150, deadline=None)
    @given(st.lists(formulas(6), min_size=1, max_size=3), st.sets(st.sampled_from(NAMES), max_size=3))
    def test_preserves_projected_models(self, nodes, drop):
        f = Formula(tuple(nodes))
        out = consequential_forget(f, drop)
        assert not (out.alphabet & drop)
        keep = sorted(set(NAMES) - drop)
        expected = oracles.projected_models(nodes, NAMES, keep)
        got = oracles.projected_models(tuple(out), keep, keep)
        assert got == expected
