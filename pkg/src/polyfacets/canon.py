"""Canonical labeling via equitable partition refinement plus individualization.

The search tree branches on vertices of the first smallest non-singleton cell
(children in vertex-index order); every discrete partition reached yields a
labeling, and the canonical one is the labeling whose adjacency bit string is
lexicographically least (bit for pair (0,1) compared first).  Discovered
automorphisms prune sibling branches; correctness does not depend on that
pruning, only speed does.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, neighbor_masks, relabel, to_graph6


@dataclass(frozen=True)
class CanonicalResult:
    canonical_graph: Graph
    labeling: tuple[int, ...]  # input vertex -> canonical position


def _refine(nbr: list[int], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Equitable refinement: split cells by neighbor counts into every cell.

    Subcells are ordered by ascending count signature, which keeps the
    procedure equivariant under relabeling.
    """
    while True:
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                nv = nbr[v]
                key = tuple((nv & m).bit_count() for m in masks)
                buckets.setdefault(key, []).append(v)
            if len(buckets) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for key in sorted(buckets):
                    new_cells.append(tuple(buckets[key]))
        if not changed:
            return new_cells
        cells = new_cells


class _Orbits:
    """Union-find over vertices, built from a fixed list of permutations."""

    def __init__(self, n: int, gens: list[tuple[int, ...]]):
        self.parent = list(range(n))
        for p in gens:
            for a in range(n):
                self._union(a, p[a])

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def _union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def same(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)


def canonical_form(g: Graph) -> CanonicalResult:
    n = g.n
    if n <= 1:
        return CanonicalResult(g, tuple(range(n)))
    nbr = neighbor_masks(g)

    best_key: int | None = None
    best_order: list[int] | None = None
    leaf_orders: dict[int, list[int]] = {}
    gens: list[tuple[int, ...]] = []

    def leaf(order: list[int]) -> None:
        nonlocal best_key, best_order
        key = 0
        for j in range(1, n):
            bj = 1 << order[j]
            for i in range(j):
                key <<= 1
                if nbr[order[i]] & bj:
                    key |= 1
        prev = leaf_orders.get(key)
        if prev is None:
            leaf_orders[key] = list(order)
        else:
            perm = [0] * n
            for a, b in zip(prev, order):
                perm[a] = b
            gens.append(tuple(perm))
        if best_key is None or key < best_key:
            best_key = key
            best_order = list(order)

    def search(cells: list[tuple[int, ...]], prefix: list[int]) -> None:
        cells = _refine(nbr, cells)
        target = -1
        target_size = n + 1
        for idx, cell in enumerate(cells):
            if 1 < len(cell) < target_size:
                target = idx
                target_size = len(cell)
        if target < 0:
            leaf([cell[0] for cell in cells])
            return
        tried: list[int] = []
        orbits: _Orbits | None = None
        gen_mark = -1
        rest = cells[target]
        for v in sorted(rest):
            if tried:
                if gen_mark != len(gens):
                    fixing = [p for p in gens if all(p[w] == w for w in prefix)]
                    orbits = _Orbits(n, fixing)
                    gen_mark = len(gens)
                if orbits is not None and any(orbits.same(v, u) for u in tried):
                    continue
            tried.append(v)
            child = list(cells)
            child[target : target + 1] = [(v,), tuple(w for w in rest if w != v)]
            prefix.append(v)
            search(child, prefix)
            prefix.pop()

    search([tuple(range(n))], [])
    assert best_order is not None
    labeling = [0] * n
    for pos, v in enumerate(best_order):
        labeling[v] = pos
    return CanonicalResult(relabel(g, labeling), tuple(labeling))


def signature(g: Graph) -> str:
    """graph6 encoding of the canonical form; equal iff isomorphic."""
    return to_graph6(canonical_form(g).canonical_graph)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    return signature(g) == signature(h)
