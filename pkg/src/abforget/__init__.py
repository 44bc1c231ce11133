"""Abductive explanations, abductive forgetting and its expressibility."""

__version__ = "0.1.0"
