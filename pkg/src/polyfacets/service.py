"""Query payloads shared by the HTTP API and the CLI.

Both front ends serialize these dicts with dump_canonical, so a CLI
--format json response is byte-identical to the API response for the
same problem.  Counts travel as JSON numbers; every exact value
(coordinates, invariant values, facet coefficients) travels as a string.
"""

from __future__ import annotations

import os
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .curve import check_envelope, parse_expression
from .conjectures import extremal_search
from .invariants import REGISTRY
from .polytope import ABSENT, collect_points, convex_hull, facets
from .serialize import rational_from_str, rational_to_str, value_to_wire
from .store import Constraint, ProblemSpec, Store, validate_spec

DEFAULT_PORT = 8711
KIND_EMPTY = "empty"


def data_root(override: str | os.PathLike | None = None) -> Path:
    return Path(override if override is not None else os.environ.get("PF_DATA_DIR", "data"))


def open_store(root: str | os.PathLike | None = None) -> Store:
    return Store(data_root(root))


# ---------------------------------------------------------------------------
# flag/parameter parsing shared by CLI flags and API query parameters

_CONSTRAINT_OPS = (("<=", "le"), (">=", "ge"), ("<", "lt"), (">", "gt"), ("=", "eq"))


def parse_constraint(text: str) -> Constraint:
    """ID<=V, ID>=V, ID<V, ID>V, ID=V, ID=true, ID=false."""
    for symbol, op in _CONSTRAINT_OPS:
        if symbol in text:
            inv_id, _, raw = text.partition(symbol)
            inv_id, raw = inv_id.strip(), raw.strip()
            if not inv_id or not raw:
                break
            if op == "eq" and raw in ("true", "false"):
                return Constraint(inv_id, "is_true" if raw == "true" else "is_false")
            try:
                return Constraint(inv_id, op, rational_from_str(raw))
            except ValueError:
                raise ValueError(f"constraint value {raw!r} is not a rational") from None
    raise ValueError(f"constraint {text!r} must look like ID<=V, ID>=V, ID<V, ID>V, ID=V, or ID=true/false")


def parse_point(text: str) -> tuple[Fraction, Fraction]:
    """"X,Y" with rational components."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"point {text!r} must look like X,Y")
    try:
        return rational_from_str(parts[0].strip()), rational_from_str(parts[1].strip())
    except ValueError:
        raise ValueError(f"point {text!r} needs rational coordinates") from None


def parse_highlight(text: str) -> tuple[str, object]:
    """ID=V with a rational or true/false value."""
    inv_id, sep, raw = text.partition("=")
    inv_id, raw = inv_id.strip(), raw.strip()
    if not sep or not inv_id or not raw:
        raise ValueError(f"highlight {text!r} must look like ID=V")
    if raw in ("true", "false"):
        return inv_id, raw == "true"
    try:
        return inv_id, rational_from_str(raw)
    except ValueError:
        raise ValueError(f"highlight value {raw!r} is not a rational or true/false") from None


# ---------------------------------------------------------------------------
# payload builders


def registry_payload() -> list[dict[str, str]]:
    return [
        {"id": d.id, "display_name": d.display_name, "kind": d.kind, "domain": d.domain}
        for d in REGISTRY
    ]


def polytope_payload(store: Store, spec: ProblemSpec) -> dict[str, Any]:
    rows, dropped = store.query(spec)
    pts = collect_points((r.x, r.y, r.color, r.highlight) for r in rows)
    point_dicts = []
    for p in pts:
        entry: dict[str, Any] = {
            "x": rational_to_str(p.point[0]),
            "y": rational_to_str(p.point[1]),
            "multiplicity": p.multiplicity,
            "highlight": p.highlight,
        }
        if p.color is not ABSENT:
            entry["color"] = p.color if p.color == "mixed" else value_to_wire(p.color)
        point_dicts.append(entry)
    if pts:
        hull = convex_hull([p.point for p in pts])
        facet_dicts = []
        for f in facets(hull):
            facet_dicts.append(
                {
                    "a": str(f.a),
                    "b": str(f.b),
                    "c": str(f.c),
                    "points": [i for i, p in enumerate(pts) if f.tight(p.point)],
                }
            )
        hull_dict = {
            "kind": hull.kind,
            "vertices": [[rational_to_str(x), rational_to_str(y)] for x, y in hull.vertices],
            "facets": facet_dicts,
        }
        vertex_count = len(hull.vertices)
    else:
        hull_dict = {"kind": KIND_EMPTY, "vertices": [], "facets": []}
        vertex_count = 0
    return {
        "points": point_dicts,
        "hull": hull_dict,
        "meta": {
            "point_count": len(pts),
            "vertex_count": vertex_count,
            "graph_count": sum(p.multiplicity for p in pts),
            "dropped_undefined": dropped,
        },
    }


def graphs_payload(
    store: Store,
    spec: ProblemSpec,
    coordinates: Sequence[tuple[Fraction, Fraction]],
    extra_invariants: Sequence[str] = (),
) -> list[dict[str, Any]]:
    if extra_invariants:
        merged = tuple(dict.fromkeys((*spec.extra_invariants, *extra_invariants)))
        spec = replace(spec, extra_invariants=merged)
    matches = store.graphs_at(spec, coordinates)
    return [
        {"signature": sig, "values": {k: value_to_wire(v) for k, v in values.items()}}
        for sig, values in matches
    ]


def graph_invariants_payload(store: Store, sig: str, ids: Sequence[str] | None = None) -> dict:
    values = store.invariants_of(sig, ids)
    return {k: value_to_wire(v) for k, v in values.items()}


def export_text(store: Store, spec: ProblemSpec) -> str:
    """Constraint-filtered signatures, one per line.  Unlike polytope queries,
    rows with undefined axis values are kept; the axes play no role here."""
    validate_spec(spec)
    handle = store.handle(spec.order, spec.graph_class)
    sigs = handle.signatures()
    concols = [(c, handle.column(c.invariant)) for c in spec.constraints]
    kept = [
        sigs[i]
        for i in range(len(sigs))
        if all(c.matches(col[i]) for c, col in concols)
    ]
    return "".join(s + "\n" for s in kept)


def curve_payload(store: Store, spec: ProblemSpec, expression: str, side: str) -> dict[str, Any]:
    node = parse_expression(expression)
    rows, _ = store.query(spec)
    report = check_envelope([(r.x, r.y) for r in rows], node, spec.order, side)
    entries = []
    for e in report.entries:
        entries.append(
            {
                "x": rational_to_str(e.x),
                "y": rational_to_str(e.y),
                "value": e.value,
                "residual": e.residual,
                "aligned": e.aligned,
                "error": e.error,
            }
        )
    return {
        "expression": expression,
        "side": report.side,
        "n": spec.order,
        "aligned": report.all_aligned,
        "entries": entries,
    }


def extremal_payload(
    store: Store,
    order: int,
    objective: str,
    direction: str,
    graph_class: str = "all",
    constraints: Sequence[Constraint] = (),
    build: bool = False,
) -> dict[str, Any]:
    report = extremal_search(
        store, order, objective, direction, graph_class, constraints, build=build
    )
    return {
        "objective": report.invariant,
        "direction": report.direction,
        "order": report.order,
        "class": report.graph_class,
        "constraints": [
            {
                "invariant": c.invariant,
                "op": c.op,
                "target": None if c.target is None else rational_to_str(c.target),
            }
            for c in report.constraints
        ],
        "optimum": None if report.optimum is None else rational_to_str(report.optimum),
        "witnesses": list(report.witnesses),
        "candidates": report.candidates,
    }
