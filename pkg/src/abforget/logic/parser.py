"""Recursive-descent parser for the formula grammar.

    expr := imp
    imp  := or ("->" imp)?
    or   := and ("|" and)*
    and  := not ("&" not)*
    not  := "!" not | atom
    atom := ident | "true" | "false" | "(" expr ")"
"""

from __future__ import annotations

import re
from typing import Iterable

from .formula import FALSE, TRUE, And, Formula, Implies, Node, Not, Or, Var

_TOKEN_RE = re.compile(r"\s*(?:(->)|([&|!()])|([A-Za-z_][A-Za-z0-9_']*))")


class FormulaSyntaxError(ValueError):
    """Malformed formula text; ``offset`` is 0-based, ``line``/``column`` 1-based."""

    def __init__(self, message: str, text: str, offset: int):
        self.offset = offset
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.message = message
        super().__init__(f"{message} at line {self.line}, column {self.column} (offset {offset})")


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        tok = m.group(1) or m.group(2) or m.group(3)
        tokens.append((tok, m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self) -> tuple[str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, what: str) -> FormulaSyntaxError:
        tok, off = self.tokens[self.i]
        found = repr(tok) if tok else "end of input"
        return FormulaSyntaxError(f"expected {what}, found {found}", self.text, off)

    def parse(self) -> Node:
        node = self.imp()
        if self.peek() != "":
            raise self.error("end of input")
        return node

    def imp(self) -> Node:
        left = self.or_()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.imp())
        return left

    def or_(self) -> Node:
        items = [self.and_()]
        while self.peek() == "|":
            self.take()
            items.append(self.and_())
        return items[0] if len(items) == 1 else Or(tuple(items))

    def and_(self) -> Node:
        items = [self.not_()]
        while self.peek() == "&":
            self.take()
            items.append(self.not_())
        return items[0] if len(items) == 1 else And(tuple(items))

    def not_(self) -> Node:
        if self.peek() == "!":
            self.take()
            return Not(self.not_())
        return self.atom()

    def atom(self) -> Node:
        tok = self.peek()
        if tok == "(":
            self.take()
            node = self.imp()
            if self.peek() != ")":
                raise self.error("')'")
            self.take()
            return node
        if tok == "true":
            self.take()
            return TRUE
        if tok == "false":
            self.take()
            return FALSE
        if tok and (tok[0].isalpha() or tok[0] == "_"):
            self.take()
            return Var(tok)
        raise self.error("variable, constant or '('")


def parse_expr(text: str) -> Node:
    return _Parser(text).parse()


def parse_formula(text: str) -> Formula:
    """Parse one expression into a single-sentence formula."""
    return Formula((parse_expr(text),))


def parse_sentences(lines: Iterable[str]) -> Formula:
    """Parse each string as one sentence; blank strings are skipped."""
    return Formula(tuple(parse_expr(s) for s in lines if s.strip()))
