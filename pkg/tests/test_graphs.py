import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyfacets.graphs import (
    Graph,
    Graph6Error,
    add_vertex,
    complement,
    complete_graph,
    components,
    cycle_graph,
    degree_sequence,
    empty_graph,
    from_graph6,
    graph_from_edges,
    neighbor_masks,
    pair_index,
    path_graph,
    relabel,
    to_graph6,
)


def random_graph(n: int, rng: random.Random) -> Graph:
    nb = n * (n - 1) // 2
    return Graph(n, rng.getrandbits(nb) if nb else 0)


def test_pair_index_column_major():
    order = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    assert [pair_index(i, j) for i, j in order] == list(range(6))


def test_known_encodings():
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(graph_from_edges(2, [(0, 1)])) == "A_"
    assert to_graph6(empty_graph(5)) == "D??"
    assert from_graph6("Bw") == complete_graph(3)
    assert from_graph6("A_") == graph_from_edges(2, [(0, 1)])
    assert from_graph6("D??") == empty_graph(5)


def test_zero_and_one_vertex():
    assert to_graph6(empty_graph(0)) == "?"
    assert from_graph6("?") == empty_graph(0)
    assert to_graph6(empty_graph(1)) == "@"
    assert from_graph6("@") == empty_graph(1)


def test_round_trip_random():
    rng = random.Random(20260819)
    for _ in range(10_000):
        n = rng.randint(0, 13)
        g = random_graph(n, rng)
        assert from_graph6(to_graph6(g)) == g


def test_encoding_charset_and_newline_tolerance():
    rng = random.Random(7)
    for _ in range(200):
        g = random_graph(rng.randint(0, 20), rng)
        enc = to_graph6(g)
        assert all(63 <= ord(c) <= 126 for c in enc)
        assert from_graph6(enc + "\n") == g


def test_decode_rejects_bad_padding():
    # K2 plus a vertex: n=3 means 3 adjacency bits; set a padding bit.
    good = from_graph6("Bw")
    assert good.size == 3
    with pytest.raises(Graph6Error) as exc:
        from_graph6("B" + chr(63 + 0b000100))
    assert exc.value.offset == 1


def test_decode_rejects_out_of_range_and_length():
    with pytest.raises(Graph6Error):
        from_graph6("")
    with pytest.raises(Graph6Error):
        from_graph6(chr(62) + "w")
    with pytest.raises(Graph6Error):
        from_graph6("B")  # truncated body
    with pytest.raises(Graph6Error):
        from_graph6("Bww")  # overlong body
    with pytest.raises(Graph6Error):
        from_graph6("~~~")  # multi-byte length marker unsupported
    with pytest.raises(Graph6Error) as exc:
        from_graph6("B" + chr(20))
    assert exc.value.offset == 1


@given(st.integers(min_value=0, max_value=10), st.randoms(use_true_random=False))
@settings(max_examples=200, deadline=None)
def test_round_trip_property(n, rng):
    nb = n * (n - 1) // 2
    g = Graph(n, rng.getrandbits(nb) if nb else 0)
    assert from_graph6(to_graph6(g)) == g


def test_complement():
    p3 = path_graph(3)
    c = complement(p3)
    assert sorted(c.edges()) == [(0, 2)]
    assert complement(c) == p3
    assert complement(empty_graph(6)) == complete_graph(6)


def test_add_vertex_preserves_existing_bits():
    rng = random.Random(3)
    for _ in range(300):
        g = random_graph(rng.randint(1, 9), rng)
        nbrs = [v for v in range(g.n) if rng.random() < 0.5]
        h = add_vertex(g, nbrs)
        assert h.n == g.n + 1
        assert h.bits & ((1 << (g.n * (g.n - 1) // 2)) - 1) == g.bits
        assert sorted(v for v in range(g.n) if h.has_edge(v, g.n)) == sorted(nbrs)


def test_degree_sequence_and_masks():
    g = graph_from_edges(4, [(0, 1), (1, 2), (1, 3)])
    assert degree_sequence(g) == (1, 1, 1, 3)
    masks = neighbor_masks(g)
    assert masks[1] == 0b1101
    assert masks[0] == 0b0010


def test_components():
    g = graph_from_edges(6, [(0, 1), (1, 2), (4, 5)])
    assert components(g) == [(0, 1, 2), (3,), (4, 5)]
    assert components(empty_graph(0)) == []
    assert len(components(cycle_graph(5))) == 1


def test_relabel_round_trip():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng.randint(1, 8), rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = relabel(g, perm)
        inverse = [0] * g.n
        for v, p in enumerate(perm):
            inverse[p] = v
        assert relabel(h, inverse) == g
        assert sorted(degree_sequence(h)) == sorted(degree_sequence(g))


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(63)
    with pytest.raises(ValueError):
        Graph(2, 4)  # only one pair bit available
    with pytest.raises(ValueError):
        graph_from_edges(3, [(0, 0)])
    with pytest.raises(ValueError):
        add_vertex(empty_graph(2), [5])
