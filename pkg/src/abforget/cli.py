"""Command-line front end.  Every command prints one canonical JSON report.

Exit codes: 0 success or condition holds, 1 violated condition or failed
verification, 2 parse error, 3 budget exceeded, 4 invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .abduction import (
    AbductionFrame,
    Explanation,
    ExplanationSet,
    FrameError,
    Ordering,
    enumerate_explanations,
    select_minimal,
)
from .defaults import emit_default_theory, format_theory, verify_default_roundtrip
from .expressibility import (
    check_conjunctive,
    check_consequential_monotony,
    check_inconsistency_condition,
    check_minority,
    check_overreaching_monotony,
)
from .forgetting import FOCUS, SUMMARIZE, project_focus, project_summarize
from .logic import Formula, FormulaSyntaxError, format_node, parse_sentences
from .reductions import QbfError, eval_qbf, parse_qbf, reduce_to_conjunctive, reduce_to_monotony
from .sets import BudgetExceeded
from .synthesis import build_gs_all, build_gs_minimal, verify_min_supports_exactly, verify_supports_exactly

EXIT_OK, EXIT_NEGATIVE, EXIT_PARSE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4

CONDITIONS = ("conjunctive", "monotony", "minority", "inconsistency", "consequential")


class ParseError(ValueError):
    pass


class Document:
    """A frame document, optionally carrying an explicit explanation set."""

    def __init__(self, hypotheses, manifestations, formula: Formula, explanations: ExplanationSet | None):
        self.hypotheses = frozenset(hypotheses)
        self.manifestations = frozenset(manifestations)
        self.formula = formula
        self.explanations = explanations

    def frame(self) -> AbductionFrame:
        return AbductionFrame(self.formula, self.hypotheses, self.manifestations)


def _string_list(doc: dict, key: str, required: bool = True) -> list[str]:
    if key not in doc:
        if required:
            raise ParseError(f"missing field {key!r}")
        return []
    value = doc[key]
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"field {key!r} must be a list of strings")
    return value


def load_document(path: str) -> Document:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a JSON object")
    try:
        hyps = _string_list(doc, "hypotheses")
        mans = _string_list(doc, "manifestations")
        formula = parse_sentences(_string_list(doc, "formula", required=False))
        expl = None
        if "explanations" in doc:
            items = doc["explanations"]
            if not isinstance(items, list):
                raise ParseError("field 'explanations' must be a list")
            members = []
            for item in items:
                if not isinstance(item, dict) or set(item) != {"E", "M"}:
                    raise ParseError(f"malformed explanation entry: {item!r}")
                members.append(Explanation(frozenset(_string_list(item, "E")), frozenset(_string_list(item, "M"))))
            expl = ExplanationSet(members)
    except FrameError:
        raise
    except FormulaSyntaxError as exc:
        raise ParseError(f"{path}: line {exc.line}, column {exc.column}: {exc}") from None
    except ValueError as exc:
        raise ParseError(f"{path}: {exc}") from None
    out = Document(hyps, mans, formula, expl)
    if expl is not None:
        expl.check_over(out.hypotheses, out.manifestations)
    return out


def _ordering(args: argparse.Namespace) -> Ordering | None:
    if getattr(args, "weights", None):
        try:
            table = json.loads(Path(args.weights).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"{args.weights}: {exc}") from None
        if not isinstance(table, dict) or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in table.values()):
            raise ParseError(f"{args.weights}: expected an object mapping names to numbers")
        return Ordering.weighted(table)
    if args.minimal is None:
        return None
    return Ordering(args.minimal)


def _explanations(doc: Document, ordering: Ordering | None) -> ExplanationSet:
    """The document's explicit set if present, otherwise computed from its frame."""
    if doc.explanations is not None:
        return doc.explanations
    base = enumerate_explanations(doc.frame())
    return base if ordering is None else select_minimal(base, ordering)


def _comma_list(text: str) -> frozenset[str]:
    return frozenset(x.strip() for x in text.split(",") if x.strip())


def cmd_explain(args: argparse.Namespace) -> tuple[dict, int]:
    doc = load_document(args.frame)
    ordering = _ordering(args)
    base = enumerate_explanations(doc.frame())
    s = base if ordering is None else select_minimal(base, ordering)
    return {"explanations": s.to_json()}, EXIT_OK


def cmd_forget(args: argparse.Namespace) -> tuple[dict, int]:
    doc = load_document(args.frame)
    frame = doc.frame()
    ordering = _ordering(args)
    alphabet = frame.hypotheses | frame.manifestations
    if args.remember is not None:
        remember = _comma_list(args.remember)
    else:
        remember = alphabet - _comma_list(args.forget)
    base = enumerate_explanations(frame)
    if ordering is not None:
        base = select_minimal(base, ordering)
    project = project_focus if args.op == FOCUS else project_summarize
    s = project(base, remember)
    return {
        "operator": args.op,
        "remembered": sorted(remember & alphabet),
        "explanations": s.to_json(),
    }, EXIT_OK


def cmd_check(args: argparse.Namespace) -> tuple[dict, int]:
    doc = load_document(args.file)
    ordering = _ordering(args)
    s = _explanations(doc, ordering)
    order = ordering or Ordering.subset()
    if args.condition == "conjunctive":
        verdict = check_conjunctive(s)
    elif args.condition == "monotony":
        verdict = check_overreaching_monotony(s, doc.hypotheses)
    elif args.condition == "minority":
        verdict = check_minority(s, order)
    elif args.condition == "inconsistency":
        verdict = check_inconsistency_condition(s, doc.hypotheses, doc.manifestations, order)
    else:
        verdict = check_consequential_monotony(s)
    report = {"condition": args.condition, **verdict.to_json()}
    return report, EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_synthesize(args: argparse.Namespace) -> tuple[dict, int]:
    doc = load_document(args.file)
    ordering = _ordering(args)
    s = _explanations(doc, ordering)
    if ordering is None:
        f = build_gs_all(s, doc.hypotheses, doc.manifestations)
        report = verify_supports_exactly(f, s, doc.hypotheses, doc.manifestations)
    else:
        f = build_gs_minimal(s, doc.hypotheses, doc.manifestations, ordering)
        report = verify_min_supports_exactly(f, s, doc.hypotheses, doc.manifestations, ordering)
    out = {"formula": [format_node(x) for x in f], **report.to_json()}
    return out, EXIT_OK if report.verified else EXIT_NEGATIVE


def cmd_emit_defaults(args: argparse.Namespace) -> tuple[dict, int]:
    doc = load_document(args.file)
    s = _explanations(doc, None)
    theory = emit_default_theory(s, doc.hypotheses, doc.manifestations)
    verdict = verify_default_roundtrip(s, doc.hypotheses, doc.manifestations)
    out = {"theory": format_theory(theory), "roundtrip": verdict.holds,
           "witness": None if verdict.witness is None else verdict.witness.to_json()}
    return out, EXIT_OK if verdict.holds else EXIT_NEGATIVE


def cmd_qbf(args: argparse.Namespace) -> tuple[dict, int]:
    try:
        q = parse_qbf(Path(args.file).read_text())
    except OSError as exc:
        raise ParseError(f"{args.file}: {exc}") from None
    except (QbfError, FormulaSyntaxError) as exc:
        raise ParseError(f"{args.file}: {exc}") from None
    reduce = reduce_to_conjunctive if args.target == "conjunctive" else reduce_to_monotony
    red = reduce(q)
    frame = red.frame
    out: dict = {
        "target": args.target,
        "hypotheses": sorted(frame.hypotheses),
        "manifestations": sorted(frame.manifestations),
        "formula": [format_node(x) for x in frame.formula],
        "remember": sorted(red.remember),
        "fresh_map": dict(red.fresh_map),
    }
    code = EXIT_OK
    if args.verify:
        truth = eval_qbf(q)
        s = project_summarize(enumerate_explanations(frame), red.remember)
        if args.target == "conjunctive":
            verdict = check_conjunctive(s)
        else:
            verdict = check_overreaching_monotony(s, frame.hypotheses)
        correspondence = truth == (not verdict.holds)
        out["verify"] = {"qbf_true": truth, "condition": verdict.to_json(), "correspondence": correspondence}
        code = EXIT_OK if correspondence else EXIT_NEGATIVE
    return out, code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abforget", description="Abductive forgetting toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def minimal_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--minimal", choices=("subset", "cardinality"), default=None,
                       help="restrict to minimal explanations under this ordering")
        p.add_argument("--weights", metavar="FILE", default=None,
                       help="JSON map of positive hypothesis weights; selects the weighted ordering")

    p = sub.add_parser("explain", help="list the explanations of a frame")
    p.add_argument("frame")
    minimal_flags(p)
    p.set_defaults(func=cmd_explain)

    p = sub.add_parser("forget", help="focus or summarize a frame")
    p.add_argument("frame")
    p.add_argument("--op", choices=(FOCUS, SUMMARIZE), default=FOCUS)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--remember", metavar="LIST")
    group.add_argument("--forget", metavar="LIST")
    minimal_flags(p)
    p.set_defaults(func=cmd_forget)

    p = sub.add_parser("check", help="test a condition on an explanation set")
    p.add_argument("file")
    p.add_argument("--condition", choices=CONDITIONS, required=True)
    minimal_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synthesize", help="build and verify the tentative-supporting formula")
    p.add_argument("file")
    minimal_flags(p)
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("emit-defaults", help="emit a default theory for an explanation set")
    p.add_argument("file")
    p.set_defaults(func=cmd_emit_defaults)

    p = sub.add_parser("qbf", help="reduce a QBF to a forgetting instance")
    p.add_argument("file")
    p.add_argument("--target", choices=("conjunctive", "monotony"), required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_qbf)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_PARSE
    try:
        report, code = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except FrameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    print(json.dumps(report, sort_keys=True, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
