"""Isomorph-free exhaustive generation by vertex augmentation.

Order n is produced from the complete order n-1 corpus: every graph is
extended by one vertex with every possible neighbor subset, and duplicates
are removed by canonical signature.  Every n-vertex graph contains an
(n-1)-vertex induced subgraph, so augmenting a complete corpus is complete.
Class filters are applied after generation.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable

from .canon import canonical_form, signature
from .graphs import Graph, add_vertex, degrees, is_connected, to_graph6

GRAPH_CLASSES = ("all", "connected", "tree", "chemical")

DEFAULT_CEILING = 9
HARD_CEILING = 10  # order 10 is opt-in; anything beyond is out of scope


def default_ceiling() -> int:
    """Enumeration ceiling; PF_MAX_ORDER may raise it to 10."""
    raw = os.environ.get("PF_MAX_ORDER")
    if raw is None:
        return DEFAULT_CEILING
    ceiling = int(raw)
    if not 1 <= ceiling <= HARD_CEILING:
        raise ValueError(f"PF_MAX_ORDER must be in [1, {HARD_CEILING}]")
    return ceiling


def class_predicate(graph_class: str) -> Callable[[Graph], bool]:
    if graph_class == "all":
        return lambda g: True
    if graph_class == "connected":
        return is_connected
    if graph_class == "tree":
        return lambda g: is_connected(g) and g.size == g.n - 1
    if graph_class == "chemical":
        return lambda g: is_connected(g) and max(degrees(g), default=0) <= 4
    raise ValueError(f"unknown graph class {graph_class!r}; expected one of {GRAPH_CLASSES}")


def augment(parents: Iterable[Graph]) -> list[Graph]:
    """All isomorphism classes one order up, as canonical forms sorted by signature."""
    found: dict[str, Graph] = {}
    for parent in parents:
        n = parent.n
        for subset in range(1 << n):
            neighbors = [v for v in range(n) if subset >> v & 1]
            child = add_vertex(parent, neighbors)
            canon = canonical_form(child).canonical_graph
            found.setdefault(to_graph6(canon), canon)
    return [found[s] for s in sorted(found)]


def enumerate_order(n: int, graph_class: str = "all", ceiling: int | None = None) -> list[Graph]:
    """Canonical representatives of the requested order and class, sorted by signature."""
    if ceiling is None:
        ceiling = default_ceiling()
    if not 1 <= ceiling <= HARD_CEILING:
        raise ValueError(f"ceiling must be in [1, {HARD_CEILING}]")
    if not 1 <= n <= ceiling:
        raise ValueError(f"order must be in [1, {ceiling}] (raise PF_MAX_ORDER for 10)")
    keep = class_predicate(graph_class)
    level = [Graph(1, 0)]
    for _ in range(n - 1):
        level = augment(level)
    return [g for g in level if keep(g)]


def corpus_filename(n: int, graph_class: str = "all") -> str:
    if graph_class == "all":
        return f"order_{n}.g6"
    return f"order_{n}_{graph_class}.g6"


def write_corpus(path, graphs: Iterable[Graph]) -> None:
    """One signature per line, LF, sorted order expected from the generator."""
    with open(path, "w", newline="\n") as fh:
        for g in graphs:
            fh.write(to_graph6(g))
            fh.write("\n")
