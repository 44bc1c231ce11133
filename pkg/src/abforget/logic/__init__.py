"""Propositional representation, parsing and decision procedures."""

from .cnf import CnfProgram, to_cnf
from .formula import (
    FALSE,
    TRUE,
    And,
    Const,
    Formula,
    Implies,
    Node,
    Not,
    Or,
    Var,
    canonical,
    clause,
    conj,
    disj,
    evaluate,
    format_formula,
    format_node,
    variable_name,
    variables,
)
from .parser import FormulaSyntaxError, parse_expr, parse_formula, parse_sentences
from .reasoning import Reasoner, consequential_forget, entails, is_consistent, substitute

__all__ = [
    "And", "CnfProgram", "Const", "FALSE", "Formula", "FormulaSyntaxError", "Implies",
    "Node", "Not", "Or", "Reasoner", "TRUE", "Var", "canonical", "clause", "conj",
    "consequential_forget", "disj", "entails", "evaluate", "format_formula",
    "format_node", "is_consistent", "parse_expr", "parse_formula", "parse_sentences",
    "substitute", "to_cnf", "variable_name", "variables",
]
