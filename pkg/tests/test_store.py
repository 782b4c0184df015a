import random
from fractions import Fraction

import pytest

from polyfacets.canon import signature
from polyfacets.generate import enumerate_order
from polyfacets.graphs import from_graph6, to_graph6
from polyfacets.invariants import REGISTRY, evaluate_many
from polyfacets.polytope import ABSENT
from polyfacets.store import (
    Constraint,
    ProblemSpec,
    SpecError,
    Store,
    StoreMissingError,
    graphs_with_degree_sequence,
    read_column,
    validate_spec,
    write_column,
)

F = Fraction


@pytest.fixture(scope="module")
def small_store(tmp_path_factory):
    root = tmp_path_factory.mktemp("store")
    store = Store(root)
    for n in range(1, 7):
        store.build(n)
    return store


def test_column_codec_round_trip(tmp_path):
    values = [F(3), None, F(-7, 2), F(0), F(2) ** 80, -(F(10) ** 30) / 7, F(1, 10**25)]
    path = tmp_path / "probe.col"
    write_column(path, "numeric", values)
    kind, back = read_column(path)
    assert kind == "numeric" and back == values

    bools = [True, False, None, True]
    bpath = tmp_path / "probe_bool.col"
    write_column(bpath, "boolean", bools)
    kind, back = read_column(bpath)
    assert kind == "boolean" and back == bools


def test_column_header_layout(tmp_path):
    path = tmp_path / "x.col"
    write_column(path, "boolean", [True, None])
    raw = path.read_bytes()
    assert raw[:5] == b"PHGC1"
    assert raw[5] == 1  # boolean kind
    assert int.from_bytes(raw[6:10], "little") == 2
    assert raw[10:] == b"\x01\x02"

    npath = tmp_path / "y.col"
    write_column(npath, "numeric", [F(-3, 4)])
    nraw = npath.read_bytes()
    assert nraw[5] == 0
    assert int.from_bytes(nraw[10:18], "little", signed=True) == -3
    assert int.from_bytes(nraw[18:26], "little") == 4


def test_build_layout_and_idempotence(tmp_path):
    store = Store(tmp_path)
    handle = store.build(4, invariants=["size", "connected"])
    assert (tmp_path / "all" / "order_4" / "graphs.g6").exists()
    assert (tmp_path / "all" / "order_4" / "size.col").exists()
    first = {p.name: p.read_bytes() for p in handle.directory.iterdir()}

    fresh = Store(tmp_path)
    fresh.build(4, invariants=["size", "connected"])
    second = {p.name: p.read_bytes() for p in fresh.handle(4).directory.iterdir()}
    assert first == second

    # a rebuilt-from-scratch store is byte-identical too
    other = Store(tmp_path / "other")
    other.build(4, invariants=["size", "connected"])
    rebuilt = {p.name: p.read_bytes() for p in other.handle(4).directory.iterdir()}
    assert first == rebuilt


def test_corpus_matches_generator(small_store):
    for n in (3, 5, 6):
        assert small_store.handle(n).signatures() == [to_graph6(g) for g in enumerate_order(n)]


def test_class_corpus_is_filtered(tmp_path):
    store = Store(tmp_path)
    store.build(5, "tree", invariants=["size"])
    tree_sigs = store.handle(5, "tree").signatures()
    assert tree_sigs == [to_graph6(g) for g in enumerate_order(5, "tree")]
    assert len(tree_sigs) == 3


def test_columns_match_fresh_evaluation(small_store):
    rng = random.Random(77)
    ids = [d.id for d in REGISTRY]
    for n in (4, 5, 6):
        handle = small_store.handle(n)
        sigs = handle.signatures()
        for _ in range(25):
            i = rng.randrange(len(sigs))
            g = from_graph6(sigs[i])
            fresh = evaluate_many(g, ids)
            for inv_id in ids:
                assert handle.column(inv_id)[i] == fresh[inv_id]


def test_query_constraints_and_drops(small_store):
    spec = ProblemSpec(
        x_invariant="size",
        y_invariant="diameter",
        order=5,
        constraints=(Constraint("connected", "is_false"),),
    )
    rows, dropped = small_store.query(spec)
    # disconnected graphs have undefined diameter, so every row drops
    assert rows == [] and dropped > 0

    spec2 = ProblemSpec(
        x_invariant="order",
        y_invariant="size",
        order=5,
        constraints=(Constraint("size", "le", F(2)), Constraint("size", "gt", F(0))),
    )
    rows2, dropped2 = small_store.query(spec2)
    assert dropped2 == 0
    assert {r.x for r in rows2} == {F(5)}
    assert all(0 < r.y <= 2 for r in rows2)
    handle = small_store.handle(5)
    expected = sum(1 for v in handle.column("size") if v is not None and 0 < v <= 2)
    assert len(rows2) == expected


def test_query_exact_rational_comparison(small_store):
    # avg_colors is non-integer; eq must hit exactly
    spec = ProblemSpec(
        x_invariant="order",
        y_invariant="avg_colors",
        order=3,
        constraints=(Constraint("avg_colors", "eq", F(5, 2)),),
    )
    rows, _ = small_store.query(spec)
    assert len(rows) == 1
    assert rows[0].signature == signature(from_graph6("Bo"))  # the 3-path


def test_query_color_and_highlight(small_store):
    spec = ProblemSpec(
        x_invariant="size",
        y_invariant="order",
        order=4,
        coloration="connected",
        highlight=("size", F(3)),
    )
    rows, _ = small_store.query(spec)
    handle = small_store.handle(4)
    assert len(rows) == handle.row_count
    for row in rows:
        assert row.color in (True, False)
        assert row.highlight == (row.x == 3)

    plain, _ = small_store.query(
        ProblemSpec(x_invariant="size", y_invariant="order", order=4)
    )
    assert all(r.color is ABSENT and r.highlight is None for r in plain)


def test_graphs_at(small_store):
    spec = ProblemSpec(
        x_invariant="size",
        y_invariant="max_degree",
        order=5,
        extra_invariants=("connected",),
    )
    hits = small_store.graphs_at(spec, [(F(4), F(2))])
    assert hits
    for sig, values in hits:
        g = from_graph6(sig)
        assert g.size == 4
        assert values["size"] == 4 and values["max_degree"] == 2
        assert values["connected"] in (True, False)
    all_rows, _ = small_store.query(spec)
    expected = [r.signature for r in all_rows if (r.x, r.y) == (F(4), F(2))]
    assert [s for s, _ in hits] == expected


def test_invariants_of_corpus_and_fresh(small_store):
    sig = small_store.handle(6).signatures()[100]
    from_cols = small_store.invariants_of(sig, ["size", "chromatic_number", "connected"])
    g = from_graph6(sig)
    fresh = evaluate_many(g, ["size", "chromatic_number", "connected"])
    assert from_cols == fresh

    # outside any built corpus: full on-demand evaluation
    from polyfacets.graphs import complete_graph

    out = small_store.invariants_of(
        to_graph6(complete_graph(9)), ["order", "size", "clique_number"]
    )
    assert out == {"order": F(9), "size": F(36), "clique_number": F(9)}

    # non-canonical input resolves to the same corpus row
    relabeled = to_graph6(from_graph6(sig))
    assert small_store.invariants_of(relabeled, ["size"]) == {"size": fresh["size"]}


def test_missing_store_and_column_errors(tmp_path, small_store):
    empty = Store(tmp_path / "nothing")
    spec = ProblemSpec(x_invariant="size", y_invariant="order", order=4)
    with pytest.raises(StoreMissingError):
        empty.query(spec)

    # corpus present but a required column missing
    partial = Store(tmp_path / "partial")
    partial.build(3, invariants=["size"])
    with pytest.raises(StoreMissingError):
        partial.query(ProblemSpec(x_invariant="size", y_invariant="diameter", order=3))


def test_spec_validation():
    with pytest.raises(SpecError):
        validate_spec(ProblemSpec(x_invariant="connected", y_invariant="size", order=4))
    with pytest.raises(SpecError):
        validate_spec(ProblemSpec(x_invariant="size", y_invariant="size", order=4, graph_class="planar"))
    with pytest.raises(SpecError):
        validate_spec(
            ProblemSpec(
                x_invariant="size",
                y_invariant="order",
                order=4,
                constraints=(Constraint("connected", "le", F(1)),),
            )
        )
    with pytest.raises(SpecError):
        validate_spec(
            ProblemSpec(
                x_invariant="size",
                y_invariant="order",
                order=4,
                constraints=(Constraint("size", "is_true"),),
            )
        )
    with pytest.raises(SpecError):
        validate_spec(
            ProblemSpec(
                x_invariant="size",
                y_invariant="order",
                order=4,
                highlight=("connected", F(1)),
            )
        )
    validate_spec(
        ProblemSpec(
            x_invariant="size",
            y_invariant="order",
            order=4,
            constraints=(Constraint("connected", "is_true"),),
            highlight=("connected", True),
            coloration="chromatic_number",
            extra_invariants=("radius",),
        )
    )


def test_degree_sequence_filter(small_store):
    spec = ProblemSpec(x_invariant="size", y_invariant="order", order=6)
    rows, _ = small_store.query(spec)
    seq = (1, 1, 1, 1, 1, 5)  # the 6-star
    picked = graphs_with_degree_sequence(rows, seq)
    # brute-force scan over the corpus
    expected = [
        r for r in rows
        if tuple(sorted(
            sum(1 for u in range(6) if from_graph6(r.signature).has_edge(v, u))
            for v in range(6)
        )) == seq
    ]
    assert picked == expected
    assert len(picked) == 1
