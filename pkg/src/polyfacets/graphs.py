"""Undirected simple graphs on up to 62 vertices, stored as upper-triangular bit arrays.

The adjacency bits are kept in one Python int, column-major over the upper
triangle: pair (i, j) with i < j sits at bit j*(j-1)//2 + i, i.e. the order
(0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...  This is the graph6 bit order,
so the codec is a straight repack, and adding a vertex appends bits without
disturbing existing ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62  # single-byte graph6 length


class Graph6Error(ValueError):
    """Malformed graph6 input; offset is the byte position of the problem."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte {offset})"
        super().__init__(message)


def pair_index(i: int, j: int) -> int:
    """Bit position of the unordered pair (i, j), i < j."""
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@dataclass(frozen=True)
class Graph:
    """Immutable graph; n vertices labeled 0..n-1, edges packed into `bits`."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise ValueError(f"order must be in [0, {MAX_ORDER}], got {self.n}")
        if self.bits < 0 or self.bits >> (self.n * (self.n - 1) // 2):
            raise ValueError("adjacency bits out of range for order")

    @property
    def size(self) -> int:
        """Number of edges."""
        return self.bits.bit_count()

    def has_edge(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return self.bits >> pair_index(i, j) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (i, j) with i < j, in bit order."""
        k = 0
        for j in range(1, self.n):
            for i in range(j):
                if self.bits >> k & 1:
                    yield (i, j)
                k += 1


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    bits = 0
    for i, j in edges:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"bad edge ({i}, {j}) for order {n}")
        bits |= 1 << pair_index(i, j)
    return Graph(n, bits)


def empty_graph(n: int) -> Graph:
    return Graph(n, 0)


def complete_graph(n: int) -> Graph:
    return Graph(n, (1 << (n * (n - 1) // 2)) - 1)


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((0, n - 1))
    return graph_from_edges(n, edges)


def complement(g: Graph) -> Graph:
    full = (1 << (g.n * (g.n - 1) // 2)) - 1
    return Graph(g.n, g.bits ^ full)


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """New graph with vertex g.n appended, adjacent to the given vertices."""
    if g.n + 1 > MAX_ORDER:
        raise ValueError("resulting order would exceed 62")
    base = g.n * (g.n - 1) // 2
    bits = g.bits
    for v in set(neighbors):
        if not 0 <= v < g.n:
            raise ValueError(f"neighbor {v} out of range")
        bits |= 1 << (base + v)
    return Graph(g.n + 1, bits)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a permutation: vertex v of g becomes vertex perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex set")
    bits = 0
    for i, j in g.edges():
        bits |= 1 << pair_index(perm[i], perm[j])
    return Graph(g.n, bits)


def neighbor_masks(g: Graph) -> list[int]:
    """Per-vertex neighborhoods as bitmasks."""
    nbr = [0] * g.n
    bits = g.bits
    k = 0
    for j in range(1, g.n):
        jb = 1 << j
        for i in range(j):
            if bits >> k & 1:
                nbr[i] |= jb
                nbr[j] |= 1 << i
            k += 1
    return nbr


def degrees(g: Graph) -> list[int]:
    return [m.bit_count() for m in neighbor_masks(g)]


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees in non-decreasing order."""
    return tuple(sorted(degrees(g)))


def components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex partition into connected components, ordered by smallest member."""
    nbr = neighbor_masks(g)
    out: list[tuple[int, ...]] = []
    remaining = (1 << g.n) - 1
    while remaining:
        start = remaining & -remaining
        comp = start
        frontier = start
        while frontier:
            grow = 0
            f = frontier
            while f:
                lsb = f & -f
                grow |= nbr[lsb.bit_length() - 1]
                f ^= lsb
            frontier = grow & ~comp
            comp |= frontier
        out.append(tuple(v for v in range(g.n) if comp >> v & 1))
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def to_graph6(g: Graph) -> str:
    """Encode in graph6: length byte n+63, then 6-bit groups of adjacency bits."""
    if g.n > MAX_ORDER:
        raise Graph6Error("order above 62 unsupported")
    nb = g.n * (g.n - 1) // 2
    out = [chr(63 + g.n)]
    bits = g.bits
    for k in range(0, nb, 6):
        group = 0
        for t in range(6):
            group <<= 1
            pos = k + t
            if pos < nb and bits >> pos & 1:
                group |= 1
        out.append(chr(63 + group))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    """Decode a single graph6 line; strict about padding and byte range."""
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII input", offset=exc.start) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if not data:
        raise Graph6Error("empty input", offset=0)
    if not 63 <= data[0] <= 126:
        raise Graph6Error(f"character {data[0]} out of range [63, 126]", offset=0)
    n = data[0] - 63
    if n > MAX_ORDER:
        raise Graph6Error("multi-byte length encoding unsupported (order above 62)", offset=0)
    nb = n * (n - 1) // 2
    need = (nb + 5) // 6
    if len(data) - 1 != need:
        raise Graph6Error(
            f"body length {len(data) - 1} does not match order {n} (expected {need})",
            offset=min(len(data), 1 + need),
        )
    bits = 0
    for idx in range(1, len(data)):
        byte = data[idx]
        if not 63 <= byte <= 126:
            raise Graph6Error(f"character {byte} out of range [63, 126]", offset=idx)
        group = byte - 63
        base = (idx - 1) * 6
        for t in range(6):
            if group >> (5 - t) & 1:
                pos = base + t
                if pos >= nb:
                    raise Graph6Error("non-zero padding bits", offset=idx)
                bits |= 1 << pos
    return Graph(n, bits)
