// SVG rendering for the two visual panels: polytope charts and graph cards.
// Everything here builds plain DOM; state changes come back through the
// callbacks, never by mutating shared structures.

import { FacetWire, GraphEntryWire, PolytopeWire, WireValue } from "./types.js";
import { colorScale, markerPaint, markerShape } from "./markers.js";
import { wireToNumber } from "./rational.js";
import { coordinateKey, GraphPanelOptions } from "./state.js";
import { complementEdges, decodeGraph6, DecodedGraph } from "./graph6.js";
import { degreeColor, layoutPositions } from "./layouts.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number> = {},
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

// --- chart geometry ----------------------------------------------------------

export const CHART_W = 460;
export const CHART_H = 340;
const MARGIN = 46;

export interface Extents {
  minX: number;
  maxX: number;
  minY: number;
  maxY: number;
}

function padded(e: Extents): Extents {
  const padX = e.maxX > e.minX ? (e.maxX - e.minX) * 0.08 : 1;
  const padY = e.maxY > e.minY ? (e.maxY - e.minY) * 0.08 : 1;
  return {
    minX: e.minX - padX,
    maxX: e.maxX + padX,
    minY: e.minY - padY,
    maxY: e.maxY + padY,
  };
}

export function payloadExtents(payload: PolytopeWire): Extents | null {
  if (!payload.points.length) return null;
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const p of payload.points) {
    const x = wireToNumber(p.x);
    const y = wireToNumber(p.y);
    minX = Math.min(minX, x);
    maxX = Math.max(maxX, x);
    minY = Math.min(minY, y);
    maxY = Math.max(maxY, y);
  }
  return { minX, maxX, minY, maxY };
}

export function unionExtents(list: (Extents | null)[]): Extents | null {
  let out: Extents | null = null;
  for (const e of list) {
    if (!e) continue;
    out = out
      ? {
          minX: Math.min(out.minX, e.minX),
          maxX: Math.max(out.maxX, e.maxX),
          minY: Math.min(out.minY, e.minY),
          maxY: Math.max(out.maxY, e.maxY),
        }
      : { ...e };
  }
  return out;
}

// Zoom and pan state, in chart viewBox units. Stored by the caller so that a
// re-render (selection toggle, refetch) keeps the current view.
export interface ViewBox {
  x: number;
  y: number;
  w: number;
  h: number;
}

export interface ChartOptions {
  payload: PolytopeWire;
  selected: ReadonlySet<string>;
  extents: Extents | null;
  view: ViewBox | null;
  title: string;
  xLabel: string;
  yLabel: string;
  onPointClick(key: string): void;
  onFacetClick(index: number): void;
  onViewChange(view: ViewBox | null): void;
}

function tickText(value: number): string {
  return String(Math.round(value * 1000) / 1000);
}

// A facet is drawn as the segment spanning its incident points; the segment
// runs along the direction perpendicular to the facet normal (a, b).
function facetEndpoints(
  payload: PolytopeWire,
  facet: FacetWire,
): [number, number, number, number] | null {
  if (facet.points.length < 2) return null;
  const dx = -wireToNumber(facet.b);
  const dy = wireToNumber(facet.a);
  let loT = Infinity;
  let hiT = -Infinity;
  let lo: [number, number] | null = null;
  let hi: [number, number] | null = null;
  for (const index of facet.points) {
    const p = payload.points[index];
    if (!p) continue;
    const x = wireToNumber(p.x);
    const y = wireToNumber(p.y);
    const t = dx * x + dy * y;
    if (t < loT) {
      loT = t;
      lo = [x, y];
    }
    if (t > hiT) {
      hiT = t;
      hi = [x, y];
    }
  }
  if (!lo || !hi || (lo[0] === hi[0] && lo[1] === hi[1])) return null;
  return [lo[0], lo[1], hi[0], hi[1]];
}

function markerRadius(multiplicity: number): number {
  return Math.min(10, 4.5 + 1.8 * Math.log10(Math.max(1, multiplicity)));
}

export function renderChart(host: HTMLElement, opts: ChartOptions): void {
  host.textContent = "";
  const svg = svgEl("svg", { class: "chart" });
  svg.setAttribute("preserveAspectRatio", "xMidYMid meet");
  host.append(svg);

  let vb: ViewBox = opts.view
    ? { ...opts.view }
    : { x: 0, y: 0, w: CHART_W, h: CHART_H };
  const applyView = () =>
    svg.setAttribute("viewBox", `${vb.x} ${vb.y} ${vb.w} ${vb.h}`);
  applyView();

  svg.append(
    svgEl("rect", {
      x: 0,
      y: 0,
      width: CHART_W,
      height: CHART_H,
      class: "chart-bg",
    }),
  );
  const title = svgEl("text", { x: CHART_W / 2, y: 20, class: "chart-title" });
  title.textContent = opts.title;
  svg.append(title);

  const { payload, extents } = opts;
  if (!extents || !payload.points.length) {
    const note = svgEl("text", {
      x: CHART_W / 2,
      y: CHART_H / 2,
      class: "chart-note",
    });
    note.textContent = "no points";
    svg.append(note);
    return;
  }

  const view = padded(extents);
  const plotW = CHART_W - 2 * MARGIN;
  const plotH = CHART_H - 2 * MARGIN;
  const sx = (x: number) => MARGIN + ((x - view.minX) / (view.maxX - view.minX)) * plotW;
  const sy = (y: number) =>
    CHART_H - MARGIN - ((y - view.minY) / (view.maxY - view.minY)) * plotH;

  // axes with min/max ticks
  svg.append(
    svgEl("line", {
      x1: MARGIN,
      y1: CHART_H - MARGIN,
      x2: CHART_W - MARGIN,
      y2: CHART_H - MARGIN,
      class: "axis",
    }),
    svgEl("line", {
      x1: MARGIN,
      y1: MARGIN,
      x2: MARGIN,
      y2: CHART_H - MARGIN,
      class: "axis",
    }),
  );
  const labels: [string, Record<string, string | number>][] = [
    [tickText(extents.minX), { x: sx(extents.minX), y: CHART_H - MARGIN + 16, class: "tick" }],
    [tickText(extents.maxX), { x: sx(extents.maxX), y: CHART_H - MARGIN + 16, class: "tick" }],
    [tickText(extents.minY), { x: MARGIN - 8, y: sy(extents.minY) + 4, class: "tick tick-y" }],
    [tickText(extents.maxY), { x: MARGIN - 8, y: sy(extents.maxY) + 4, class: "tick tick-y" }],
    [opts.xLabel, { x: CHART_W / 2, y: CHART_H - 8, class: "axis-label" }],
  ];
  for (const [text, attrs] of labels) {
    const node = svgEl("text", attrs);
    node.textContent = text;
    svg.append(node);
  }
  const yLabel = svgEl("text", {
    x: 14,
    y: CHART_H / 2,
    class: "axis-label",
    transform: `rotate(-90 14 ${CHART_H / 2})`,
  });
  yLabel.textContent = opts.yLabel;
  svg.append(yLabel);

  // hull facets under the markers; each segment is the click target for its
  // inequality and selects exactly the incident point set
  payload.hull.facets.forEach((facet, index) => {
    const ends = facetEndpoints(payload, facet);
    if (!ends) return;
    const [x1, y1, x2, y2] = ends;
    const group = svgEl("g", { "data-hit": "facet" });
    const shown = svgEl("line", {
      x1: sx(x1),
      y1: sy(y1),
      x2: sx(x2),
      y2: sy(y2),
      class: "facet",
    });
    const hit = svgEl("line", {
      x1: sx(x1),
      y1: sy(y1),
      x2: sx(x2),
      y2: sy(y2),
      class: "facet-hit",
    });
    const tip = svgEl("title");
    tip.textContent = `${facet.a}*x + ${facet.b}*y <= ${facet.c} (${facet.points.length} points)`;
    group.append(tip, shown, hit);
    group.addEventListener("click", (e) => {
      e.stopPropagation();
      opts.onFacetClick(index);
    });
    svg.append(group);
  });

  const scale = colorScale(payload.points.map((p) => p.color));
  for (const point of payload.points) {
    const key = coordinateKey(point.x, point.y);
    const paint = markerPaint(point, opts.selected.has(key), scale);
    const cx = sx(wireToNumber(point.x));
    const cy = sy(wireToNumber(point.y));
    const r = markerRadius(point.multiplicity);
    const marker =
      markerShape(point) === "diamond"
        ? svgEl("path", {
            d: `M ${cx} ${cy - r} L ${cx + r} ${cy} L ${cx} ${cy + r} L ${cx - r} ${cy} Z`,
          })
        : svgEl("circle", { cx, cy, r });
    marker.setAttribute("fill", paint.fill);
    marker.setAttribute("stroke", paint.stroke);
    marker.setAttribute("stroke-width", String(paint.strokeWidth));
    marker.setAttribute("class", "marker");
    marker.setAttribute("data-hit", "point");
    const tip = svgEl("title");
    const extras: string[] = [`graphs: ${point.multiplicity}`];
    if (point.color !== undefined) extras.push(`color: ${point.color}`);
    if (point.highlight !== "none") extras.push(`highlight: ${point.highlight}`);
    tip.textContent = `(${point.x}, ${point.y})  ${extras.join("  ")}`;
    marker.append(tip);
    marker.addEventListener("click", (e) => {
      e.stopPropagation();
      opts.onPointClick(key);
    });
    svg.append(marker);
  }

  if (payload.meta.dropped_undefined > 0) {
    const note = svgEl("text", {
      x: CHART_W - MARGIN,
      y: CHART_H - 8,
      class: "chart-note chart-note-right",
    });
    note.textContent = `${payload.meta.dropped_undefined} graphs without defined axes`;
    svg.append(note);
  }

  // wheel zoom around the cursor, drag to pan, double click to reset; only
  // the viewBox moves, so the selection is untouched
  svg.addEventListener(
    "wheel",
    (e) => {
      e.preventDefault();
      const rect = svg.getBoundingClientRect();
      if (!rect.width || !rect.height) return;
      const px = vb.x + ((e.clientX - rect.left) / rect.width) * vb.w;
      const py = vb.y + ((e.clientY - rect.top) / rect.height) * vb.h;
      const factor = e.deltaY < 0 ? 0.85 : 1 / 0.85;
      const w = Math.min(Math.max(vb.w * factor, CHART_W / 16), CHART_W * 8);
      const h = w * (CHART_H / CHART_W);
      vb = {
        x: px - ((px - vb.x) / vb.w) * w,
        y: py - ((py - vb.y) / vb.h) * h,
        w,
        h,
      };
      applyView();
      opts.onViewChange({ ...vb });
    },
    { passive: false },
  );

  let pan: { id: number; cx: number; cy: number } | null = null;
  svg.addEventListener("pointerdown", (e) => {
    if ((e.target as Element).closest("[data-hit]")) return;
    pan = { id: e.pointerId, cx: e.clientX, cy: e.clientY };
    svg.setPointerCapture(e.pointerId);
  });
  svg.addEventListener("pointermove", (e) => {
    if (!pan || e.pointerId !== pan.id) return;
    const rect = svg.getBoundingClientRect();
    if (!rect.width || !rect.height) return;
    vb = {
      ...vb,
      x: vb.x - ((e.clientX - pan.cx) / rect.width) * vb.w,
      y: vb.y - ((e.clientY - pan.cy) / rect.height) * vb.h,
    };
    pan.cx = e.clientX;
    pan.cy = e.clientY;
    applyView();
  });
  const endPan = (e: PointerEvent) => {
    if (pan && e.pointerId === pan.id) {
      pan = null;
      opts.onViewChange({ ...vb });
    }
  };
  svg.addEventListener("pointerup", endPan);
  svg.addEventListener("pointercancel", endPan);
  svg.addEventListener("dblclick", () => opts.onViewChange(null));
}

// --- graph cards -------------------------------------------------------------

const GRAPH_SIZE = 190;
const GRAPH_PAD = 20;

function formatValue(value: WireValue): string {
  if (value === null) return "undefined";
  if (typeof value === "boolean") return value ? "true" : "false";
  return value;
}

export function graphCard(
  entry: GraphEntryWire,
  panel: GraphPanelOptions,
): HTMLElement {
  const card = document.createElement("div");
  card.className = "graph-card";

  let decoded: DecodedGraph;
  try {
    decoded = decodeGraph6(entry.signature);
  } catch {
    card.textContent = `undecodable signature ${entry.signature}`;
    return card;
  }
  const displayEdges = panel.complement ? complementEdges(decoded) : decoded.edges;
  const displayed: DecodedGraph = { n: decoded.n, edges: displayEdges };

  const svg = svgEl("svg", {
    viewBox: `0 0 ${GRAPH_SIZE} ${GRAPH_SIZE}`,
    class: "graph-svg",
  });
  card.append(svg);

  const span = GRAPH_SIZE - 2 * GRAPH_PAD;
  const positions = layoutPositions(panel.layout, displayed).map((p) => ({
    x: GRAPH_PAD + ((p.x + 1) / 2) * span,
    y: GRAPH_PAD + ((p.y + 1) / 2) * span,
  }));

  const edgeLines: { line: SVGLineElement; i: number; j: number }[] = [];
  for (const [i, j] of displayEdges) {
    const line = svgEl("line", {
      x1: positions[i].x,
      y1: positions[i].y,
      x2: positions[j].x,
      y2: positions[j].y,
      class: panel.complement ? "graph-edge complement-edge" : "graph-edge",
    });
    edgeLines.push({ line, i, j });
    svg.append(line);
  }

  const degree = new Array<number>(decoded.n).fill(0);
  for (const [i, j] of displayEdges) {
    degree[i] += 1;
    degree[j] += 1;
  }

  positions.forEach((pos, index) => {
    const vertex = svgEl("circle", {
      cx: pos.x,
      cy: pos.y,
      r: 7,
      class: "graph-vertex",
      fill: panel.degreeColors ? degreeColor(degree[index]) : "#4878a8",
    });
    const tip = svgEl("title");
    tip.textContent = `vertex ${index}, degree ${degree[index]}`;
    vertex.append(tip);

    let drag: { id: number; lastX: number; lastY: number } | null = null;
    vertex.addEventListener("pointerdown", (e) => {
      e.preventDefault();
      e.stopPropagation();
      vertex.setPointerCapture(e.pointerId);
      drag = { id: e.pointerId, lastX: e.clientX, lastY: e.clientY };
    });
    vertex.addEventListener("pointermove", (e) => {
      if (!drag || e.pointerId !== drag.id) return;
      const rect = svg.getBoundingClientRect();
      if (!rect.width || !rect.height) return;
      pos.x += ((e.clientX - drag.lastX) / rect.width) * GRAPH_SIZE;
      pos.y += ((e.clientY - drag.lastY) / rect.height) * GRAPH_SIZE;
      drag.lastX = e.clientX;
      drag.lastY = e.clientY;
      vertex.setAttribute("cx", String(pos.x));
      vertex.setAttribute("cy", String(pos.y));
      for (const edge of edgeLines) {
        if (edge.i === index) {
          edge.line.setAttribute("x1", String(pos.x));
          edge.line.setAttribute("y1", String(pos.y));
        }
        if (edge.j === index) {
          edge.line.setAttribute("x2", String(pos.x));
          edge.line.setAttribute("y2", String(pos.y));
        }
      }
    });
    const release = (e: PointerEvent) => {
      if (drag && e.pointerId === drag.id) drag = null;
    };
    vertex.addEventListener("pointerup", release);
    vertex.addEventListener("pointercancel", release);
    svg.append(vertex);
  });

  if (panel.showSignature) {
    const sig = document.createElement("code");
    sig.className = "graph-signature";
    sig.textContent = entry.signature;
    card.append(sig);
  }

  if (panel.showInvariants) {
    const ids = Object.keys(entry.values).sort();
    if (ids.length) {
      const list = document.createElement("dl");
      list.className = "graph-values";
      for (const id of ids) {
        const dt = document.createElement("dt");
        dt.textContent = id;
        const dd = document.createElement("dd");
        dd.textContent = formatValue(entry.values[id]);
        list.append(dt, dd);
      }
      card.append(list);
    }
  }

  return card;
}
