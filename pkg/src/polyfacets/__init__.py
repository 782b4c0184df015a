"""Exhaustive small-graph corpora, exact invariant polytopes, and extremal search."""

__version__ = "0.1.0"
