"""Read-only HTTP service over a prebuilt store.

Every JSON body is canonical (sorted keys, no whitespace), so responses for a
fixed query are byte-identical across calls and match the CLI's --format json
output.  Corpus building happens through the CLI; the service never writes.

Env: PF_DATA_DIR store root, PF_PORT listen port, PF_CORS_ORIGIN allowed
origin (default "*"), PF_HOST bind address.
"""

from __future__ import annotations

import os
from typing import Any

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from . import service
from .curve import CurveParseError
from .graphs import Graph6Error
from .invariants import UnknownInvariantError
from .serialize import ProblemDecodeError, decode_problem, dump_canonical, rational_from_str
from .store import SpecError, StoreError, StoreMissingError

_DOCS_HTML = """<!DOCTYPE html>
<html><head><meta charset="utf-8"><title>polyfacets API</title>
<style>body{font-family:sans-serif;max-width:60em;margin:2em auto;padding:0 1em}
code{background:#eee;padding:0 .2em}</style></head><body>
<h1>polyfacets API</h1>
<p>All endpoints are read-only.  Problems travel as one base64url parameter
encoding the canonical JSON of a problem spec: keys
<code>class, coloration, constraints, extra_invariants, highlight, order,
x_invariant, y_invariant</code>; rationals are strings like <code>"5/2"</code>
(integers bare, <code>"3"</code>).  Errors are JSON
<code>{"error": ..., "detail": ...}</code> with status 400 (malformed input),
404 (corpus or column not built), or 422 (invalid spec).</p>
<dl>
<dt><code>GET /api/invariants</code></dt>
<dd>The invariant registry: <code>[{id, display_name, kind, domain}]</code>.</dd>
<dt><code>GET /api/polytope?problem=ENC</code></dt>
<dd>Point cloud and exact convex hull:
<code>{points: [{x, y, multiplicity, highlight, color?}], hull: {kind,
vertices, facets: [{a, b, c, points}]}, meta: {point_count, vertex_count,
graph_count, dropped_undefined}}</code>.  Facet <code>points</code> are
indexes into <code>points</code> of every point on the facet line.</dd>
<dt><code>POST /api/graphs</code></dt>
<dd>Body <code>{problem: ENC, coordinates: [[x, y], ...],
extra_invariants?: [id, ...]}</code>; returns the graphs at those exact
coordinates as <code>[{signature, values}]</code>.</dd>
<dt><code>GET /api/graph/{signature}/invariants?ids=a,b,c</code></dt>
<dd>Invariant values for one graph6 signature (URL-encoded); all registry
ids when <code>ids</code> is omitted.</dd>
<dt><code>GET /api/export.g6?problem=ENC</code></dt>
<dd>Constraint-filtered corpus as text, one graph6 signature per line.</dd>
<dt><code>GET /api/curve?problem=ENC&amp;expression=EXPR&amp;side=upper|lower</code></dt>
<dd>Checks a formula in <code>x</code> and <code>n</code> against the point
cloud's upper or lower envelope; reports per-x residuals.</dd>
<dt><code>GET /api/extremal?objective=ID&amp;direction=max|min&amp;order=N&amp;class=C&amp;constraint=SPEC</code></dt>
<dd>Exact optimum of a numeric invariant over a corpus with all witness
signatures.  <code>constraint</code> repeats; grammar <code>ID&lt;=V</code>,
<code>ID&gt;=V</code>, <code>ID&lt;V</code>, <code>ID&gt;V</code>,
<code>ID=V</code>, <code>ID=true</code>, <code>ID=false</code>.</dd>
</dl></body></html>
"""


def _json(payload: Any, status: int = 200) -> Response:
    return Response(dump_canonical(payload), status_code=status, media_type="application/json")


def _error(status: int, error: str, detail: str) -> Response:
    return _json({"error": error, "detail": detail}, status)


class GraphsRequest(BaseModel):
    problem: str
    coordinates: list[tuple[str, str]]
    extra_invariants: list[str] = Field(default_factory=list)


def create_app(data_dir: str | os.PathLike | None = None) -> FastAPI:
    store = service.open_store(data_dir)
    app = FastAPI(title="polyfacets", docs_url=None, redoc_url=None, openapi_url=None)
    origin = os.environ.get("PF_CORS_ORIGIN", "*")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(ProblemDecodeError)
    async def _decode_error(request: Request, exc: ProblemDecodeError):
        return _error(400, "bad-problem", str(exc))

    @app.exception_handler(Graph6Error)
    async def _graph6_error(request: Request, exc: Graph6Error):
        return _error(400, "bad-signature", str(exc))

    @app.exception_handler(CurveParseError)
    async def _curve_error(request: Request, exc: CurveParseError):
        return _error(400, "bad-expression", str(exc))

    @app.exception_handler(StoreMissingError)
    async def _missing_error(request: Request, exc: StoreMissingError):
        return _error(404, "not-built", str(exc))

    @app.exception_handler(SpecError)
    async def _spec_error(request: Request, exc: SpecError):
        return _error(422, "bad-spec", str(exc))

    @app.exception_handler(UnknownInvariantError)
    async def _invariant_error(request: Request, exc: UnknownInvariantError):
        return _error(422, "bad-spec", f"unknown invariant {exc.inv_id!r}")

    @app.exception_handler(StoreError)
    async def _store_error(request: Request, exc: StoreError):
        return _error(500, "store-error", str(exc))

    @app.exception_handler(RequestValidationError)
    async def _validation_error(request: Request, exc: RequestValidationError):
        return _error(422, "bad-request", str(exc.errors()))

    @app.get("/api/invariants")
    def api_invariants() -> Response:
        return _json(service.registry_payload())

    @app.get("/api/polytope")
    def api_polytope(problem: str) -> Response:
        spec = decode_problem(problem)
        return _json(service.polytope_payload(store, spec))

    @app.post("/api/graphs")
    def api_graphs(body: GraphsRequest) -> Response:
        spec = decode_problem(body.problem)
        try:
            coords = [(rational_from_str(x), rational_from_str(y)) for x, y in body.coordinates]
        except ValueError as exc:
            raise ProblemDecodeError(str(exc)) from None
        return _json(service.graphs_payload(store, spec, coords, body.extra_invariants))

    @app.get("/api/graph/{signature}/invariants")
    def api_graph_invariants(signature: str, ids: str | None = None) -> Response:
        wanted = None if ids is None else [s for s in ids.split(",") if s]
        return _json(service.graph_invariants_payload(store, signature, wanted))

    @app.get("/api/export.g6")
    def api_export(problem: str) -> Response:
        spec = decode_problem(problem)
        return Response(service.export_text(store, spec), media_type="text/plain; charset=utf-8")

    @app.get("/api/curve")
    def api_curve(problem: str, expression: str, side: str) -> Response:
        if side not in ("upper", "lower"):
            return _error(400, "bad-side", "side must be 'upper' or 'lower'")
        spec = decode_problem(problem)
        return _json(service.curve_payload(store, spec, expression, side))

    @app.get("/api/extremal")
    def api_extremal(
        objective: str,
        direction: str,
        order: int,
        graph_class: str = Query("all", alias="class"),
        constraint: list[str] = Query(default=()),
    ) -> Response:
        if direction not in ("max", "min"):
            return _error(400, "bad-direction", "direction must be 'max' or 'min'")
        try:
            constraints = [service.parse_constraint(c) for c in constraint]
        except ValueError as exc:
            return _error(400, "bad-constraint", str(exc))
        return _json(
            service.extremal_payload(store, order, objective, direction, graph_class, constraints)
        )

    @app.get("/api/docs")
    def api_docs() -> Response:
        return Response(_DOCS_HTML, media_type="text/html; charset=utf-8")

    return app


app = create_app()
