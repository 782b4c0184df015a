// Vertex placement for the graph drawings. Three layouts: a circle (always
// readable for small orders), a deterministic force-directed relaxation, and
// a grid. All of them emit coordinates in [-1, 1]^2; the renderer scales.

import { DecodedGraph } from "./graph6.js";
import { LayoutKind } from "./state.js";

export interface Position {
  x: number;
  y: number;
}

export function circleLayout(n: number): Position[] {
  if (n === 1) return [{ x: 0, y: 0 }];
  const out: Position[] = [];
  for (let v = 0; v < n; v++) {
    const angle = (2 * Math.PI * v) / n - Math.PI / 2;
    out.push({ x: Math.cos(angle), y: Math.sin(angle) });
  }
  return out;
}

export function gridLayout(n: number): Position[] {
  const columns = Math.ceil(Math.sqrt(n));
  const rows = Math.ceil(n / columns);
  const out: Position[] = [];
  for (let v = 0; v < n; v++) {
    const column = v % columns;
    const row = Math.floor(v / columns);
    out.push({
      x: columns === 1 ? 0 : (2 * column) / (columns - 1) - 1,
      y: rows === 1 ? 0 : (2 * row) / (rows - 1) - 1,
    });
  }
  return out;
}

// Spring-electric relaxation seeded from the circle layout; no randomness,
// so the same graph always lands in the same picture.
export function forceLayout(g: DecodedGraph, iterations = 150): Position[] {
  const n = g.n;
  const positions = circleLayout(n);
  if (n <= 2) return positions;
  const adjacent = new Set(g.edges.map(([i, j]) => i * n + j));
  const spring = 0.8; // rest length of an edge
  for (let step = 0; step < iterations; step++) {
    const temperature = 0.08 * (1 - step / iterations) + 0.005;
    const force = positions.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = positions[i].x - positions[j].x;
        let dy = positions[i].y - positions[j].y;
        let dist = Math.hypot(dx, dy);
        if (dist < 1e-9) {
          // coincident vertices: push apart along a fixed direction
          dx = 1e-3 * (i - j);
          dy = 1e-3;
          dist = Math.hypot(dx, dy);
        }
        const ux = dx / dist;
        const uy = dy / dist;
        const repulsion = 0.12 / (dist * dist);
        force[i].x += ux * repulsion;
        force[i].y += uy * repulsion;
        force[j].x -= ux * repulsion;
        force[j].y -= uy * repulsion;
        if (adjacent.has(i * n + j)) {
          const pull = (dist - spring) * 0.5;
          force[i].x -= ux * pull;
          force[i].y -= uy * pull;
          force[j].x += ux * pull;
          force[j].y += uy * pull;
        }
      }
    }
    for (let v = 0; v < n; v++) {
      const magnitude = Math.hypot(force[v].x, force[v].y);
      const clip = magnitude > temperature ? temperature / magnitude : 1;
      positions[v].x += force[v].x * clip;
      positions[v].y += force[v].y * clip;
    }
  }
  // normalize back into [-1, 1]^2
  const xs = positions.map((p) => p.x);
  const ys = positions.map((p) => p.y);
  const cx = (Math.min(...xs) + Math.max(...xs)) / 2;
  const cy = (Math.min(...ys) + Math.max(...ys)) / 2;
  const scale = Math.max(
    (Math.max(...xs) - Math.min(...xs)) / 2,
    (Math.max(...ys) - Math.min(...ys)) / 2,
    1e-9,
  );
  return positions.map((p) => ({ x: (p.x - cx) / scale, y: (p.y - cy) / scale }));
}

export function layoutPositions(kind: LayoutKind, g: DecodedGraph): Position[] {
  switch (kind) {
    case "circle":
      return circleLayout(g.n);
    case "grid":
      return gridLayout(g.n);
    case "force":
      return forceLayout(g);
  }
}

// Degree palette for vertex coloring: degree 1 yellow, degree 2 red, then
// onward through a fixed list; degree 0 stays neutral.
const DEGREE_PALETTE = [
  "#f2d744", // 1
  "#d62728", // 2
  "#2a9d5c", // 3
  "#4878a8", // 4
  "#b8860b", // 5
  "#8458b3", // 6
  "#17becf", // 7
  "#e377c2", // 8
  "#7f7f7f", // 9
];

export function degreeColor(degree: number): string {
  if (degree <= 0) return "#cccccc";
  return DEGREE_PALETTE[(degree - 1) % DEGREE_PALETTE.length];
}
