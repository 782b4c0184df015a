"""Exact graph invariants and the registry that names them.

Numeric invariants return fractions.Fraction (None when undefined, e.g.
distance invariants on disconnected graphs); boolean invariants return bool.
Everything is exact: the counting invariants use exponential-time recursions
that are comfortable at desk scale (orders up to 10) and remain correct,
if slow, beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .graphs import Graph, complement, components, neighbor_masks

Value = Union[Fraction, bool, None]

NUMERIC = "numeric"
BOOLEAN = "boolean"
DOMAIN_ALL = "all"
DOMAIN_CONNECTED = "connected-only"


class UnknownInvariantError(KeyError):
    def __init__(self, inv_id: str):
        super().__init__(inv_id)
        self.inv_id = inv_id

    def __str__(self) -> str:
        return f"unknown invariant {self.inv_id!r}"


@dataclass(frozen=True)
class InvariantDescriptor:
    id: str
    display_name: str
    kind: str  # numeric | boolean
    domain: str  # all | connected-only


REGISTRY: tuple[InvariantDescriptor, ...] = (
    InvariantDescriptor("order", "Number of vertices", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("size", "Number of edges", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("min_degree", "Minimum degree", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("max_degree", "Maximum degree", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("num_components", "Number of connected components", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("diameter", "Diameter", NUMERIC, DOMAIN_CONNECTED),
    InvariantDescriptor("radius", "Radius", NUMERIC, DOMAIN_CONNECTED),
    InvariantDescriptor(
        "eccentric_connectivity_index",
        "Eccentric connectivity index",
        NUMERIC,
        DOMAIN_CONNECTED,
    ),
    InvariantDescriptor("chromatic_number", "Chromatic number", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("clique_number", "Clique number", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("independence_number", "Independence number", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("matching_number", "Matching number", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("stable_set_count", "Number of stable sets", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor("matching_count", "Number of matchings", NUMERIC, DOMAIN_ALL),
    InvariantDescriptor(
        "nonequiv_colorings",
        "Number of non-equivalent proper colorings",
        NUMERIC,
        DOMAIN_ALL,
    ),
    InvariantDescriptor(
        # Counts partitions into stable sets, weighted by block count; the id
        # follows the established naming even though it averages over
        # partitions, not colorings.
        "avg_colors",
        "Average number of colors over non-equivalent colorings",
        NUMERIC,
        DOMAIN_ALL,
    ),
    InvariantDescriptor("connected", "Connected", BOOLEAN, DOMAIN_ALL),
    InvariantDescriptor("bipartite", "Bipartite", BOOLEAN, DOMAIN_ALL),
    InvariantDescriptor("tree", "Tree", BOOLEAN, DOMAIN_ALL),
    InvariantDescriptor("forest", "Forest", BOOLEAN, DOMAIN_ALL),
    InvariantDescriptor("regular", "Regular", BOOLEAN, DOMAIN_ALL),
    InvariantDescriptor("chemical", "Chemical (connected, max degree 4)", BOOLEAN, DOMAIN_ALL),
    InvariantDescriptor("has_isolated_vertex", "Has an isolated vertex", BOOLEAN, DOMAIN_ALL),
)

_BY_ID = {d.id: d for d in REGISTRY}


def registry() -> list[InvariantDescriptor]:
    return list(REGISTRY)


def descriptor(inv_id: str) -> InvariantDescriptor:
    try:
        return _BY_ID[inv_id]
    except KeyError:
        raise UnknownInvariantError(inv_id) from None


def _bits(mask: int):
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


# ---------------------------------------------------------------------------
# distance invariants


def eccentricities(g: Graph) -> list[int] | None:
    """Per-vertex eccentricity by BFS; None when the graph is disconnected.

    The 0-vertex graph has no component, hence counts as disconnected."""
    n = g.n
    if n == 0:
        return None
    nbr = neighbor_masks(g)
    full = (1 << n) - 1
    out = []
    for v in range(n):
        seen = 1 << v
        frontier = seen
        dist = 0
        while seen != full:
            grow = 0
            f = frontier
            while f:
                lsb = f & -f
                grow |= nbr[lsb.bit_length() - 1]
                f ^= lsb
            frontier = grow & ~seen
            if not frontier:
                return None  # unreachable vertices
            seen |= frontier
            dist += 1
        out.append(dist)
    return out


def diameter(g: Graph) -> Fraction | None:
    ecc = eccentricities(g)
    return None if ecc is None else Fraction(max(ecc))


def radius(g: Graph) -> Fraction | None:
    ecc = eccentricities(g)
    return None if ecc is None else Fraction(min(ecc))


def eccentric_connectivity_index(g: Graph) -> Fraction | None:
    """Sum over vertices of degree times eccentricity; connected graphs only."""
    ecc = eccentricities(g)
    if ecc is None:
        return None
    nbr = neighbor_masks(g)
    return Fraction(sum(nbr[v].bit_count() * ecc[v] for v in range(g.n)))


# ---------------------------------------------------------------------------
# clique, independence, coloring


def _max_clique_size(nbr: list[int], n: int) -> int:
    if n == 0:
        return 0
    # order vertices by descending degree for better early bounds
    order = sorted(range(n), key=lambda v: nbr[v].bit_count(), reverse=True)
    rank = [0] * n
    for idx, v in enumerate(order):
        rank[v] = idx
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            # take the candidate of best rank
            v = min(_bits(cand), key=rank.__getitem__)
            cand ^= 1 << v
            nxt = cand & nbr[v]
            if size + 1 > best:
                best = size + 1
            if nxt:
                expand(size + 1, nxt)

    expand(0, (1 << n) - 1)
    return best


def clique_number(g: Graph) -> Fraction:
    return Fraction(_max_clique_size(neighbor_masks(g), g.n))


def independence_number(g: Graph) -> Fraction:
    """Largest stable set; equals the clique number of the complement."""
    h = complement(g)
    return Fraction(_max_clique_size(neighbor_masks(h), h.n))


def _greedy_upper_bound(nbr: list[int], n: int) -> int:
    # DSATUR-flavored greedy: color the vertex seeing the most distinct colors
    color = [-1] * n
    used = 0
    for _ in range(n):
        pick, pick_key = -1, (-1, -1)
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = len({color[u] for u in _bits(nbr[v]) if color[u] >= 0})
            key = (sat, nbr[v].bit_count())
            if key > pick_key:
                pick, pick_key = v, key
        taken = {color[u] for u in _bits(nbr[pick]) if color[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        color[pick] = c
        used = max(used, c + 1)
    return used


def _colorable(nbr: list[int], n: int, k: int) -> bool:
    """Backtracking k-colorability, vertices in saturation order, symmetric colors broken."""
    if k >= n:
        return True
    order = sorted(range(n), key=lambda v: nbr[v].bit_count(), reverse=True)
    color = [-1] * n

    def assign(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        taken = 0
        for u in _bits(nbr[v]):
            if color[u] >= 0:
                taken |= 1 << color[u]
        limit = min(k, used + 1)  # first use of a new color is canonical
        for c in range(limit):
            if taken >> c & 1:
                continue
            color[v] = c
            if assign(idx + 1, max(used, c + 1)):
                return True
            color[v] = -1
        return False

    return assign(0, 0)


def chromatic_number(g: Graph) -> Fraction:
    n = g.n
    if n == 0:
        return Fraction(0)
    if g.size == 0:
        return Fraction(1)
    nbr = neighbor_masks(g)
    lower = _max_clique_size(nbr, n)
    upper = _greedy_upper_bound(nbr, n)
    k = lower
    while k < upper and not _colorable(nbr, n, k):
        k += 1
    return Fraction(k)


# ---------------------------------------------------------------------------
# counting invariants


def stable_set_count(g: Graph) -> Fraction:
    """Number of stable sets, empty set included.

    Recursion on a maximum-degree vertex v: count(G) = count(G - v)
    + count(G - N[v]); an edgeless remainder on k vertices contributes 2^k.
    """
    nbr = neighbor_masks(g)

    def rec(mask: int) -> int:
        best_v, best_d = -1, 0
        m = mask
        while m:
            lsb = m & -m
            v = lsb.bit_length() - 1
            m ^= lsb
            d = (nbr[v] & mask).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d == 0:
            return 1 << mask.bit_count()
        v = best_v
        return rec(mask & ~(1 << v)) + rec(mask & ~(nbr[v] | 1 << v))

    return Fraction(rec((1 << g.n) - 1))


def matching_count(g: Graph) -> Fraction:
    """Number of matchings, empty matching included.

    Equivalent to the edge recursion count(G) = count(G - e) + count(G - {u, v});
    implemented over the lowest non-isolated vertex with memoization on the
    remaining vertex set.
    """
    nbr = neighbor_masks(g)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        # skip vertices with no neighbors inside the mask
        m = mask
        v = -1
        while m:
            lsb = m & -m
            cand = lsb.bit_length() - 1
            if nbr[cand] & mask:
                v = cand
                break
            m ^= lsb
        if v < 0:
            return 1
        got = memo.get(mask)
        if got is not None:
            return got
        total = rec(mask & ~(1 << v))  # v unmatched
        for u in _bits(nbr[v] & mask):
            total += rec(mask & ~(1 << v | 1 << u))
        memo[mask] = total
        return total

    return Fraction(rec((1 << g.n) - 1))


def matching_number(g: Graph) -> Fraction:
    nbr = neighbor_masks(g)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        m = mask
        v = -1
        while m:
            lsb = m & -m
            cand = lsb.bit_length() - 1
            if nbr[cand] & mask:
                v = cand
                break
            m ^= lsb
        if v < 0:
            return 0
        got = memo.get(mask)
        if got is not None:
            return got
        best = rec(mask & ~(1 << v))
        for u in _bits(nbr[v] & mask):
            best = max(best, 1 + rec(mask & ~(1 << v | 1 << u)))
        memo[mask] = best
        return best

    return Fraction(rec((1 << g.n) - 1))


def _stable_sets_by_lowest(nbr: list[int], n: int) -> list[list[int]]:
    """All nonempty stable sets as masks, grouped by their lowest vertex."""
    by_low: list[list[int]] = [[] for _ in range(n)]

    def rec(cur: int, low: int, cand: int) -> None:
        by_low[low].append(cur)
        rest = cand
        while rest:
            lsb = rest & -rest
            rest ^= lsb
            rec(cur | lsb, low, rest & ~nbr[lsb.bit_length() - 1])

    full = (1 << n) - 1
    for v in range(n):
        higher = full & ~((1 << (v + 1)) - 1)
        rec(1 << v, v, higher & ~nbr[v])
    return by_low


def color_partition_profile(g: Graph) -> dict[int, int]:
    """Map k -> number of partitions of V into exactly k nonempty stable sets.

    Satisfies the contraction identity profile(G) = profile(G + uv)
    + shift(profile(G / uv)) for any non-adjacent pair (u, v); computed here
    by placing the lowest unplaced vertex into each stable set that contains
    it, with memoization over the remaining vertex set.
    """
    n = g.n
    if n == 0:
        return {0: 1}
    nbr = neighbor_masks(g)
    by_low = _stable_sets_by_lowest(nbr, n)
    memo: dict[int, dict[int, int]] = {0: {0: 1}}

    def rec(mask: int) -> dict[int, int]:
        got = memo.get(mask)
        if got is not None:
            return got
        low = (mask & -mask).bit_length() - 1
        acc: dict[int, int] = {}
        for block in by_low[low]:
            if block & ~mask:
                continue
            for k, cnt in rec(mask ^ block).items():
                acc[k + 1] = acc.get(k + 1, 0) + cnt
        memo[mask] = acc
        return acc

    return rec((1 << n) - 1)


def nonequiv_colorings(g: Graph) -> Fraction:
    """Total number of partitions into nonempty stable sets (any block count)."""
    return Fraction(sum(color_partition_profile(g).values()))


def avg_colors(g: Graph) -> Fraction:
    """Mean block count over all partitions into nonempty stable sets."""
    profile = color_partition_profile(g)
    total = sum(profile.values())
    weighted = sum(k * cnt for k, cnt in profile.items())
    return Fraction(weighted, total)


# ---------------------------------------------------------------------------
# boolean invariants


def is_bipartite(g: Graph) -> bool:
    nbr = neighbor_masks(g)
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in _bits(nbr[v]):
                if color[u] < 0:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# evaluation


class _Evaluator:
    """Computes invariants for one graph, sharing intermediate results."""

    def __init__(self, g: Graph):
        self.g = g
        self._cache: dict[str, object] = {}

    def _shared(self, key: str):
        got = self._cache.get(key)
        if got is not None:
            return got
        g = self.g
        if key == "degrees":
            val = [m.bit_count() for m in neighbor_masks(g)]
        elif key == "components":
            val = components(g)
        elif key == "ecc":
            val = (eccentricities(g),)  # wrapped: None is a meaningful result
        elif key == "profile":
            val = color_partition_profile(g)
        elif key == "clique":
            val = _max_clique_size(neighbor_masks(g), g.n)
        else:
            raise KeyError(key)
        self._cache[key] = val
        return val

    def value(self, inv_id: str) -> Value:
        g = self.g
        if inv_id == "order":
            return Fraction(g.n)
        if inv_id == "size":
            return Fraction(g.size)
        if inv_id == "min_degree":
            deg = self._shared("degrees")
            return Fraction(min(deg)) if deg else None
        if inv_id == "max_degree":
            deg = self._shared("degrees")
            return Fraction(max(deg)) if deg else None
        if inv_id == "num_components":
            return Fraction(len(self._shared("components")))
        if inv_id == "diameter":
            (ecc,) = self._shared("ecc")
            return None if ecc is None else Fraction(max(ecc))
        if inv_id == "radius":
            (ecc,) = self._shared("ecc")
            return None if ecc is None else Fraction(min(ecc))
        if inv_id == "eccentric_connectivity_index":
            (ecc,) = self._shared("ecc")
            if ecc is None:
                return None
            deg = self._shared("degrees")
            return Fraction(sum(d * e for d, e in zip(deg, ecc)))
        if inv_id == "chromatic_number":
            return chromatic_number(g)
        if inv_id == "clique_number":
            return Fraction(self._shared("clique"))
        if inv_id == "independence_number":
            return independence_number(g)
        if inv_id == "matching_number":
            return matching_number(g)
        if inv_id == "stable_set_count":
            return stable_set_count(g)
        if inv_id == "matching_count":
            return matching_count(g)
        if inv_id == "nonequiv_colorings":
            return Fraction(sum(self._shared("profile").values()))
        if inv_id == "avg_colors":
            profile = self._shared("profile")
            total = sum(profile.values())
            return Fraction(sum(k * c for k, c in profile.items()), total)
        if inv_id == "connected":
            return len(self._shared("components")) == 1
        if inv_id == "bipartite":
            return is_bipartite(g)
        if inv_id == "tree":
            return len(self._shared("components")) == 1 and g.size == g.n - 1
        if inv_id == "forest":
            return g.size == g.n - len(self._shared("components"))
        if inv_id == "regular":
            deg = self._shared("degrees")
            return min(deg) == max(deg) if deg else True
        if inv_id == "chemical":
            deg = self._shared("degrees")
            return len(self._shared("components")) == 1 and (max(deg) if deg else 0) <= 4
        if inv_id == "has_isolated_vertex":
            return 0 in self._shared("degrees")
        raise UnknownInvariantError(inv_id)


def eval_invariant(inv_id: str, g: Graph) -> Value:
    descriptor(inv_id)  # raises on unknown id
    return _Evaluator(g).value(inv_id)


def evaluate_many(g: Graph, ids: list[str]) -> dict[str, Value]:
    for inv_id in ids:
        descriptor(inv_id)
    ev = _Evaluator(g)
    return {inv_id: ev.value(inv_id) for inv_id in ids}
