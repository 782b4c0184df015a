"""Exact 2D convex hulls over rational invariant points, with facet inequalities.

All arithmetic is on fractions.Fraction; orientation tests are exact integer
cross products after Fraction normalization, so no tolerance is involved
anywhere.  Hull vertices are strictly convex (collinear boundary points are
not vertices, but facet incidence still reports them).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Point2 = tuple[Fraction, Fraction]

# coloration-not-requested marker, distinct from an undefined color value
ABSENT = object()

HIGHLIGHT_FULL = "full"
HIGHLIGHT_PARTIAL = "partial"
HIGHLIGHT_NONE = "none"

KIND_POINT = "point"
KIND_SEGMENT = "segment"
KIND_POLYGON = "polygon"


@dataclass(frozen=True)
class PolytopePoint:
    point: Point2
    multiplicity: int
    color: object = ABSENT  # Fraction | bool | None | "mixed" | ABSENT
    highlight: str = HIGHLIGHT_NONE


@dataclass(frozen=True)
class Hull:
    vertices: tuple[Point2, ...]  # counterclockwise, starting at the lex-min vertex
    kind: str  # point | segment | polygon


@dataclass(frozen=True)
class Facet:
    """Inequality a*x + b*y <= c with integer, gcd-reduced, outward coefficients."""

    a: int
    b: int
    c: int

    def holds(self, p: Point2) -> bool:
        return self.a * p[0] + self.b * p[1] <= self.c

    def tight(self, p: Point2) -> bool:
        return self.a * p[0] + self.b * p[1] == self.c


def collect_points(
    rows: Iterable[tuple[Fraction, Fraction, object, object]],
) -> list[PolytopePoint]:
    """Aggregate (x, y, color, highlight) rows by coordinate.

    color is ABSENT when no coloration was requested; highlight is None when
    no highlighting was requested, else a bool per row.  Output is sorted by
    (x, y).
    """
    acc: dict[Point2, list] = {}
    for x, y, color, flag in rows:
        key = (x, y)
        slot = acc.get(key)
        if slot is None:
            acc[key] = [1, color, False, _merge_flag(None, flag)]
        else:
            slot[0] += 1
            if slot[1] is not ABSENT and not _color_eq(slot[1], color):
                slot[2] = True  # mixed
            slot[3] = _merge_flag(slot[3], flag)
    out = []
    for key in sorted(acc):
        count, color, mixed, flags = acc[key]
        if color is ABSENT:
            final_color: object = ABSENT
        elif mixed:
            final_color = "mixed"
        else:
            final_color = color
        if flags is None:
            hl = HIGHLIGHT_NONE
        else:
            some, all_ = flags
            hl = HIGHLIGHT_FULL if all_ else (HIGHLIGHT_PARTIAL if some else HIGHLIGHT_NONE)
        out.append(PolytopePoint(key, count, final_color, hl))
    return out


def _color_eq(a: object, b: object) -> bool:
    # bools and Fractions compare across types (True == 1); keep kinds apart
    if isinstance(a, bool) != isinstance(b, bool):
        return False
    return a == b


def _merge_flag(state, flag):
    if flag is None:
        return state
    if state is None or not isinstance(state, tuple):
        return (bool(flag), bool(flag))
    some, all_ = state
    return (some or bool(flag), all_ and bool(flag))


def _cross(o: Point2, a: Point2, b: Point2) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Sequence[Point2]) -> Hull:
    """Monotone chain with strict turns; duplicates and collinear points tolerated."""
    if not points:
        raise ValueError("convex hull of an empty point set")
    pts = sorted(set(points))
    if len(pts) == 1:
        return Hull((pts[0],), KIND_POINT)
    lower: list[Point2] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point2] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    vertices = tuple(lower[:-1] + upper[:-1])
    if len(vertices) == 2:
        return Hull(vertices, KIND_SEGMENT)
    return Hull(vertices, KIND_POLYGON)


def _reduced(a: Fraction, b: Fraction, c: Fraction) -> Facet:
    scale = math.lcm(a.denominator, b.denominator, c.denominator)
    ia, ib, ic = int(a * scale), int(b * scale), int(c * scale)
    g = math.gcd(ia, ib, ic)
    if g:
        ia, ib, ic = ia // g, ib // g, ic // g
    return Facet(ia, ib, ic)


def _edge_facet(p: Point2, q: Point2) -> Facet:
    # outward normal of a counterclockwise edge p -> q
    a = q[1] - p[1]
    b = p[0] - q[0]
    c = a * p[0] + b * p[1]
    return _reduced(a, b, c)


def facets(h: Hull) -> list[Facet]:
    """Outward facet inequalities; every hull point satisfies a*x + b*y <= c.

    Polygon: one facet per edge.  Segment: the supporting line both ways plus
    the two endpoint bounds.  Point: both coordinate equalities as two
    inequality pairs.
    """
    if h.kind == KIND_POINT:
        (x, y) = h.vertices[0]
        return [
            _reduced(Fraction(1), Fraction(0), x),
            _reduced(Fraction(-1), Fraction(0), -x),
            _reduced(Fraction(0), Fraction(1), y),
            _reduced(Fraction(0), Fraction(-1), -y),
        ]
    if h.kind == KIND_SEGMENT:
        p, q = h.vertices
        line = _edge_facet(p, q)
        dx, dy = q[0] - p[0], q[1] - p[1]
        return [
            line,
            Facet(-line.a, -line.b, -line.c),
            _reduced(dx, dy, dx * q[0] + dy * q[1]),  # far endpoint bound
            _reduced(-dx, -dy, -(dx * p[0] + dy * p[1])),  # near endpoint bound
        ]
    verts = h.vertices
    return [_edge_facet(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]


def incident_points(h: Hull, f: Facet, points: Sequence[PolytopePoint]) -> list[PolytopePoint]:
    """All aggregated points lying exactly on the facet's supporting line."""
    if f not in facets(h):
        raise ValueError("facet does not belong to this hull")
    return [p for p in points if f.tight(p.point)]
