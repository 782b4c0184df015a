"""Extremal constructions and an exhaustive optimum search over a store.

The constructions here are families known or conjectured to attain extreme
invariant values at a fixed order (and, for some, a fixed size or independence
number).  extremal_search finds the true optimum by scanning a corpus, so a
construction can be checked against every graph rather than sampled ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Sequence

from .graphs import Graph, graph_from_edges
from .invariants import BOOLEAN
from .store import Constraint, SpecError, Store, _descriptor


def max_eci_diameter(n: int, m: int) -> int:
    """Diameter of the conjectured maximizer of eccentric_connectivity_index
    among connected graphs with n vertices and m edges.

    This is floor((2n + 1 - sqrt(17 + 8(m - n))) / 2), computed exactly with
    integer square roots so no float rounding can shift the floor.
    """
    radicand = 17 + 8 * (m - n)
    if radicand < 0:
        raise ValueError(f"size {m} is too small for order {n}")
    s = isqrt(radicand)
    if s * s == radicand:
        return (2 * n + 1 - s) // 2
    return (2 * n - s) // 2


def max_eci_graph(n: int, m: int) -> Graph:
    """Clique with a pendent path, the conjectured eccentric_connectivity_index
    maximizer for connected graphs with n vertices and m edges.

    Vertices 0..k-1 form a clique (k = n - d - 1, d = max_eci_diameter(n, m)),
    vertices k..k+d form a path.  Every clique vertex is joined to the last two
    path vertices, and the q lowest clique vertices to the third-from-last,
    where q makes the size come out to exactly m.
    """
    d = max_eci_diameter(n, m)
    if d < 3:
        raise ValueError(f"order {n}, size {m} gives diameter {d}; need at least 3")
    k = n - d - 1
    q = m - n + 1 - comb(n - d, 2)
    if not 0 <= q <= k:
        raise ValueError(f"order {n}, size {m} needs {q} surplus edges; 0..{k} available")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + i + 1) for i in range(d)]
    edges += [(i, k + d) for i in range(k)]
    edges += [(i, k + d - 1) for i in range(k)]
    edges += [(i, k + d - 2) for i in range(q)]
    g = graph_from_edges(n, edges)
    assert g.size == m
    return g


def balanced_clique_union(n: int, k: int) -> Graph:
    """Disjoint union of k cliques with sizes as equal as possible.

    Its independence number is exactly k, and no graph of order n with
    independence number at most k has fewer edges.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    edges = []
    base, extra = divmod(n, k)
    start = 0
    for part in range(k):
        size = base + (1 if part < extra else 0)
        edges += [(i, j) for i in range(start, start + size) for j in range(i + 1, start + size)]
        start += size
    return graph_from_edges(n, edges)


def complete_split_graph(n: int, k: int) -> Graph:
    """Independent set of k vertices fully joined to a clique on the rest.

    Vertices 0..k-1 are the independent set.  For k >= 2 the independence
    number is exactly k, and the size (n^2 - n - k^2 + k)/2 is the largest
    possible at that independence number.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= {n}, got {k}")
    edges = [(i, j) for i in range(k, n) for j in range(i + 1, n)]
    edges += [(i, j) for i in range(k) for j in range(k, n)]
    return graph_from_edges(n, edges)


@dataclass(frozen=True)
class ExtremalReport:
    invariant: str
    direction: str
    order: int
    graph_class: str
    optimum: Fraction | None  # None when no graph qualifies
    witnesses: tuple[str, ...] = ()  # signatures, in corpus order
    candidates: int = 0  # graphs passing the constraints with a defined value
    constraints: tuple[Constraint, ...] = field(default=())


def extremal_search(
    store: Store,
    order: int,
    invariant: str,
    direction: str,
    graph_class: str = "connected",
    constraints: Sequence[Constraint] = (),
    build: bool = True,
) -> ExtremalReport:
    """Scan every graph of the given order and class for the extreme value of
    a numeric invariant, subject to constraints.

    Rows where the objective is undefined are skipped.  With build=True any
    missing corpus or column is computed first; with build=False a missing
    one raises StoreMissingError, leaving the store untouched.
    """
    if direction not in ("min", "max"):
        raise SpecError(f"direction must be 'min' or 'max', got {direction!r}")
    if _descriptor(invariant).kind == BOOLEAN:
        raise SpecError(f"objective invariant {invariant!r} must be numeric")
    for con in constraints:
        d = _descriptor(con.invariant)
        ok_ops = ("is_true", "is_false") if d.kind == BOOLEAN else ("le", "ge", "eq", "lt", "gt")
        if con.op not in ok_ops:
            raise SpecError(f"op {con.op!r} does not fit {d.kind} invariant {con.invariant!r}")
    needed = [invariant] + [c.invariant for c in constraints]
    if build:
        handle = store.build(order, graph_class, needed)
    else:
        handle = store.handle(order, graph_class)
    objective = handle.column(invariant)
    concols = [(c, handle.column(c.invariant)) for c in constraints]
    best: Fraction | None = None
    witness_idx: list[int] = []
    candidates = 0
    for i, value in enumerate(objective):
        if any(not c.matches(col[i]) for c, col in concols):
            continue
        if value is None:
            continue
        candidates += 1
        if best is None or (value > best if direction == "max" else value < best):
            best = value
            witness_idx = [i]
        elif value == best:
            witness_idx.append(i)
    sigs = handle.signatures()
    return ExtremalReport(
        invariant=invariant,
        direction=direction,
        order=order,
        graph_class=graph_class,
        optimum=best,
        witnesses=tuple(sigs[i] for i in witness_idx),
        candidates=candidates,
        constraints=tuple(constraints),
    )
