"""Operator CLI: build corpora, query polytopes, check curves, search
extremals, inspect invariants, and launch the HTTP service.

stdout carries data, stderr carries diagnostics.  --format json output is
byte-identical to the API response for the same query (no trailing newline);
table output is for humans and carries no stability guarantee.  Exit codes:
0 success, 1 domain errors (missing store, invalid spec), 2 usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Any, Sequence

from . import service
from .curve import CurveEvalError, CurveParseError
from .generate import GRAPH_CLASSES, enumerate_order, write_corpus
from .graphs import Graph6Error, to_graph6
from .invariants import REGISTRY, UnknownInvariantError
from .serialize import ProblemDecodeError, dump_canonical
from .store import Constraint, ProblemSpec, StoreError

_DOMAIN_ERRORS = (
    StoreError,
    ProblemDecodeError,
    Graph6Error,
    CurveParseError,
    CurveEvalError,
    UnknownInvariantError,
    ValueError,
)


def _constraint_flag(text: str) -> Constraint:
    try:
        return service.parse_constraint(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point_flag(text: str):
    try:
        return service.parse_point(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _highlight_flag(text: str):
    try:
        return service.parse_highlight(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _invariants_flag(text: str) -> list[str] | None:
    if text == "all":
        return None
    ids = [s for s in text.split(",") if s]
    if not ids:
        raise argparse.ArgumentTypeError("expected a comma-separated id list or 'all'")
    return ids


def _emit_json(payload: Any) -> None:
    sys.stdout.write(dump_canonical(payload))


def _spec_from_args(args: argparse.Namespace) -> ProblemSpec:
    return ProblemSpec(
        x_invariant=args.x,
        y_invariant=args.y,
        order=args.order,
        graph_class=getattr(args, "graph_class", "all"),
        constraints=tuple(getattr(args, "constraint", None) or ()),
        coloration=getattr(args, "coloration", None),
        highlight=getattr(args, "highlight", None),
    )


# ---------------------------------------------------------------------------
# subcommands


def _cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_order(args.order, args.graph_class)
    if args.out:
        write_corpus(args.out, graphs)
        print(f"wrote {len(graphs)} graphs to {args.out}", file=sys.stderr)
    else:
        for g in graphs:
            sys.stdout.write(to_graph6(g) + "\n")
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    store = service.open_store(args.data_dir)
    handle = store.build(args.order, args.graph_class, args.invariants)
    n_inv = len(args.invariants) if args.invariants is not None else len(REGISTRY)
    print(
        f"built order {args.order} class {args.graph_class}: "
        f"{handle.row_count} graphs, {n_inv} invariant columns",
        file=sys.stderr,
    )
    return 0


def _cmd_polytope(args: argparse.Namespace) -> int:
    store = service.open_store(args.data_dir)
    payload = service.polytope_payload(store, _spec_from_args(args))
    if args.format == "json":
        _emit_json(payload)
        return 0
    print(f"points ({payload['meta']['point_count']}, {payload['meta']['graph_count']} graphs):")
    for p in payload["points"]:
        extra = f"  color={p['color']}" if "color" in p else ""
        hl = f"  [{p['highlight']}]" if p["highlight"] != "none" else ""
        print(f"  ({p['x']}, {p['y']})  x{p['multiplicity']}{extra}{hl}")
    hull = payload["hull"]
    print(f"hull: {hull['kind']}, {payload['meta']['vertex_count']} vertices")
    for v in hull["vertices"]:
        print(f"  ({v[0]}, {v[1]})")
    print("facets (a*x + b*y <= c):")
    for f in hull["facets"]:
        print(f"  {f['a']}*x + {f['b']}*y <= {f['c']}  ({len(f['points'])} incident)")
    if payload["meta"]["dropped_undefined"]:
        print(f"dropped {payload['meta']['dropped_undefined']} rows with undefined axis values")
    return 0


def _cmd_graphs_at(args: argparse.Namespace) -> int:
    store = service.open_store(args.data_dir)
    payload = service.graphs_payload(store, _spec_from_args(args), args.point)
    if args.format == "json":
        _emit_json(payload)
        return 0
    for entry in payload:
        values = "  ".join(f"{k}={v}" for k, v in sorted(entry["values"].items()))
        print(f"{entry['signature']}  {values}")
    return 0


def _cmd_check_curve(args: argparse.Namespace) -> int:
    store = service.open_store(args.data_dir)
    spec = _spec_from_args(args)
    payload = service.curve_payload(store, spec, args.expr, args.side)
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"{args.side} envelope of {args.y} vs {args.x}, order {args.order}:")
        for e in payload["entries"]:
            if e["error"] is not None:
                print(f"  x={e['x']}: error: {e['error']}")
            else:
                mark = "aligned" if e["aligned"] else "off"
                print(f"  x={e['x']}  y={e['y']}  f={e['value']}  residual={e['residual']}  {mark}")
        print("all aligned" if payload["aligned"] else "misaligned")
    return 0


def _cmd_extremal(args: argparse.Namespace) -> int:
    store = service.open_store(args.data_dir)
    payload = service.extremal_payload(
        store,
        args.order,
        args.objective,
        args.direction,
        args.graph_class,
        args.constraint or (),
    )
    if args.format == "json":
        _emit_json(payload)
        return 0
    print(f"{args.direction} {args.objective}, order {args.order}, class {args.graph_class}")
    if payload["optimum"] is None:
        print("no graph satisfies the constraints")
    else:
        print(f"optimum {payload['optimum']} over {payload['candidates']} graphs")
        print(f"witnesses ({len(payload['witnesses'])}):")
        for sig in payload["witnesses"]:
            print(f"  {sig}")
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    store = service.open_store(args.data_dir)
    payload = service.graph_invariants_payload(store, args.signature, args.ids)
    if args.format == "json":
        _emit_json(payload)
        return 0
    for key in payload:
        print(f"{key} = {payload[key]}")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    host = os.environ.get("PF_HOST", "127.0.0.1")
    uvicorn.run(create_app(args.data_dir), host=host, port=args.port)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_spec_flags(p: argparse.ArgumentParser, coloration: bool = False) -> None:
    p.add_argument("--x", required=True, metavar="ID", help="x-axis invariant id")
    p.add_argument("--y", required=True, metavar="ID", help="y-axis invariant id")
    p.add_argument("--order", required=True, type=int, help="graph order")
    p.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default="all")
    p.add_argument(
        "--constraint",
        action="append",
        type=_constraint_flag,
        metavar="SPEC",
        help="ID<=V, ID>=V, ID<V, ID>V, ID=V, ID=true, ID=false; repeatable",
    )
    if coloration:
        p.add_argument("--coloration", metavar="ID", help="attach this invariant to each point")
        p.add_argument(
            "--highlight",
            type=_highlight_flag,
            metavar="ID=V",
            help="mark points whose graphs all/some have this invariant value",
        )


def _add_format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "table"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyfacets",
        description="Exhaustive graph corpora, exact invariant polytopes, and extremal searches.",
    )
    parser.add_argument(
        "--data-dir",
        default=None,
        help="store root (default: $PF_DATA_DIR or ./data)",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", help="list pairwise non-isomorphic graphs of one order")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default="all")
    p.add_argument("--out", metavar="PATH", help="write graph6 lines here instead of stdout")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("build", help="compute and cache invariant columns for a corpus")
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default="all")
    p.add_argument(
        "--invariants",
        type=_invariants_flag,
        default=None,
        metavar="LIST|all",
        help="comma-separated invariant ids (default: all)",
    )
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("polytope", help="point cloud, hull, and facets for an invariant pair")
    _add_spec_flags(p, coloration=True)
    _add_format_flag(p)
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("graphs-at", help="graphs at exact (x, y) coordinates")
    _add_spec_flags(p)
    p.add_argument(
        "--point",
        action="append",
        required=True,
        type=_point_flag,
        metavar="X,Y",
        help="rational coordinates; repeatable",
    )
    _add_format_flag(p)
    p.set_defaults(func=_cmd_graphs_at)

    p = sub.add_parser("check-curve", help="check a formula against an envelope of the cloud")
    p.add_argument("--expr", required=True, help="formula in x and n, e.g. (n^2-n-x^2+x)/2")
    _add_spec_flags(p)
    p.add_argument("--side", required=True, choices=("upper", "lower"))
    _add_format_flag(p)
    p.set_defaults(func=_cmd_check_curve)

    p = sub.add_parser("extremal", help="exact optimum of an invariant with all witnesses")
    p.add_argument("--objective", required=True, metavar="ID")
    p.add_argument("--direction", required=True, choices=("max", "min"))
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--class", dest="graph_class", choices=GRAPH_CLASSES, default="all")
    p.add_argument("--constraint", action="append", type=_constraint_flag, metavar="SPEC")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("invariants", help="invariant values for one graph6 signature")
    p.add_argument("--signature", required=True, metavar="S")
    p.add_argument("--ids", type=_invariants_flag, default=None, metavar="LIST")
    _add_format_flag(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("PF_PORT", service.DEFAULT_PORT)),
    )
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
