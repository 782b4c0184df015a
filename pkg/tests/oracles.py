"""Brute-force reference implementations used only by the test suite.

Everything here favors directness over speed: permutation exhaustion for
isomorphism, subset exhaustion for cliques and stable sets, set-partition
enumeration for coloring counts, and triangle exhaustion for hull extremes.
These are the independent oracles the production algorithms are judged
against, so they deliberately share no code with the package internals
beyond the Graph container itself.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from polyfacets.graphs import Graph, pair_index


def _apply_perm_bits(bits: int, n: int, perm) -> int:
    out = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                out |= 1 << pair_index(perm[i], perm[j])
            k += 1
    return out


def brute_canonical_bits(g: Graph) -> int:
    """Minimum adjacency bit int over all vertex permutations (lex on bit string).

    Lexicographic comparison with pair (0,1) first equals integer comparison
    after reversing bit significance, so we compare reversed-bit keys.
    """
    nb = g.n * (g.n - 1) // 2

    def rev_key(bits: int) -> int:
        key = 0
        for k in range(nb):
            key = (key << 1) | (bits >> k & 1)
        return key

    best_bits = None
    best_key = None
    for perm in permutations(range(g.n)):
        b = _apply_perm_bits(g.bits, g.n, perm)
        k = rev_key(b)
        if best_key is None or k < best_key:
            best_key, best_bits = k, b
    return best_bits if best_bits is not None else 0


def labeled_isomorphism_classes(n: int) -> list[set[int]]:
    """Orbits of all 2^(n(n-1)/2) labeled graphs under vertex permutations."""
    nb = n * (n - 1) // 2
    perms = list(permutations(range(n)))
    seen = bytearray(1 << nb)
    classes: list[set[int]] = []
    for bits in range(1 << nb):
        if seen[bits]:
            continue
        orbit = {_apply_perm_bits(bits, n, p) for p in perms}
        for b in orbit:
            seen[b] = 1
        classes.append(orbit)
    return classes


def brute_are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    return any(_apply_perm_bits(g.bits, g.n, p) == h.bits for p in permutations(range(g.n)))


# ---------------------------------------------------------------------------
# invariant oracles (small n only)


def _adj_matrix(g: Graph) -> list[list[bool]]:
    a = [[False] * g.n for _ in range(g.n)]
    for i, j in g.edges():
        a[i][j] = a[j][i] = True
    return a


def brute_components(g: Graph) -> list[set[int]]:
    """Components via boolean reachability closure."""
    n = g.n
    reach = [[i == j or g.has_edge(i, j) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    comps: list[set[int]] = []
    placed: set[int] = set()
    for v in range(n):
        if v in placed:
            continue
        comp = {u for u in range(n) if reach[v][u]}
        comps.append(comp)
        placed |= comp
    return comps


def brute_distances(g: Graph) -> list[list[float]]:
    """All-pairs distances by Floyd-Warshall; math.inf when unreachable."""
    import math

    n = g.n
    d = [[0 if i == j else (1 if g.has_edge(i, j) else math.inf) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def brute_eccentricities(g: Graph) -> list[int] | None:
    import math

    d = brute_distances(g)
    ecc = [max(row) for row in d] if g.n else []
    if any(e == math.inf for e in ecc):
        return None
    return [int(e) for e in ecc]


def brute_stable_sets(g: Graph) -> list[frozenset[int]]:
    out = []
    for r in range(g.n + 1):
        for sub in combinations(range(g.n), r):
            if all(not g.has_edge(i, j) for i, j in combinations(sub, 2)):
                out.append(frozenset(sub))
    return out


def brute_clique_number(g: Graph) -> int:
    best = 0
    for r in range(g.n + 1):
        for sub in combinations(range(g.n), r):
            if all(g.has_edge(i, j) for i, j in combinations(sub, 2)):
                best = max(best, r)
    return best


def brute_independence_number(g: Graph) -> int:
    return max((len(s) for s in brute_stable_sets(g)), default=0)


def brute_matchings(g: Graph) -> list[frozenset[tuple[int, int]]]:
    edges = list(g.edges())
    out: list[frozenset[tuple[int, int]]] = []

    def extend(idx: int, used: set[int], acc: list[tuple[int, int]]) -> None:
        out.append(frozenset(acc))
        for k in range(idx, len(edges)):
            i, j = edges[k]
            if i not in used and j not in used:
                extend(k + 1, used | {i, j}, acc + [(i, j)])

    extend(0, set(), [])
    return out


def brute_matching_number(g: Graph) -> int:
    return max((len(m) for m in brute_matchings(g)), default=0)


def set_partitions(items: list[int]):
    """All partitions of a list into nonempty blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [part[k] + [first]] + part[k + 1 :]
        yield [[first]] + part


def brute_color_profile(g: Graph) -> dict[int, int]:
    """Partitions of V into exactly k nonempty stable sets, via full enumeration."""
    profile: dict[int, int] = {}
    for part in set_partitions(list(range(g.n))):
        if all(
            all(not g.has_edge(i, j) for i, j in combinations(block, 2))
            for block in part
        ):
            k = len(part)
            profile[k] = profile.get(k, 0) + 1
    return profile


def brute_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    return min(k for k in brute_color_profile(g))


def brute_bipartite(g: Graph) -> bool:
    """Try every 2-coloring."""
    if g.n == 0:
        return True
    for assign in range(1 << g.n):
        if all((assign >> i & 1) != (assign >> j & 1) for i, j in g.edges()):
            return True
    return False


# ---------------------------------------------------------------------------
# hull oracle


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p, a, b) -> bool:
    """p strictly inside or at an endpoint of segment ab (a != b)."""
    if _cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def _in_triangle(p, a, b, c) -> bool:
    d1 = _cross(a, b, p)
    d2 = _cross(b, c, p)
    d3 = _cross(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def brute_extreme_points(points: list[tuple[Fraction, Fraction]]) -> set[tuple[Fraction, Fraction]]:
    """A point is extreme iff it is not a convex combination of the others.

    In the plane that means: not equal to another point, not interior to a
    segment between two others, not inside (or on) a triangle of three others.
    """
    distinct = sorted(set(points))
    extremes: set[tuple[Fraction, Fraction]] = set()
    for p in distinct:
        others = [q for q in distinct if q != p]
        covered = False
        for a, b in combinations(others, 2):
            if _on_segment(p, a, b):
                covered = True
                break
        if not covered:
            for a, b, c in combinations(others, 3):
                if _cross(a, b, c) != 0 and _in_triangle(p, a, b, c):
                    covered = True
                    break
        if not covered:
            extremes.add(p)
    return extremes
