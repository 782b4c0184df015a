// Visual encoding of polytope points: marker shape, fill, and outline.
//
// A point whose graphs disagree on the coloration value has no single color;
// it is drawn as a diamond instead. Highlighted points are red; a partial
// highlight (some but not all graphs match the target) keeps its color and
// gets a red outline instead of a red fill -- that rendering is this UI's
// choice and is asserted by tests.

import { PolytopePointWire, WireValue } from "./types.js";
import { compareRationals, parseRational, rationalToNumber } from "./rational.js";

export type MarkerShape = "circle" | "diamond";

export const HIGHLIGHT_COLOR = "#d62728";
export const SELECTED_STROKE = "#111111";
export const DEFAULT_FILL = "#4878a8";
export const UNDEFINED_FILL = "#9e9e9e";
export const MIXED_FILL = "#b8860b";
export const TRUE_FILL = "#2a9d5c";
export const FALSE_FILL = "#8458b3";

export function markerShape(point: PolytopePointWire): MarkerShape {
  return point.color === "mixed" ? "diamond" : "circle";
}

export type ColorScale = (value: WireValue | undefined) => string;

// One scale per chart, built from every color value in the payload, so equal
// values get equal colors and the gradient spans the actual range.
export function colorScale(values: (WireValue | undefined)[]): ColorScale {
  const numeric = values.filter(
    (v): v is string => typeof v === "string" && v !== "mixed",
  );
  let low = 0;
  let span = 0;
  if (numeric.length) {
    const rationals = numeric.map(parseRational);
    rationals.sort(compareRationals);
    low = rationalToNumber(rationals[0]);
    span = rationalToNumber(rationals[rationals.length - 1]) - low;
  }
  return (value) => {
    if (value === undefined) return DEFAULT_FILL;
    if (value === null) return UNDEFINED_FILL;
    if (value === "mixed") return MIXED_FILL;
    if (typeof value === "boolean") return value ? TRUE_FILL : FALSE_FILL;
    const t = span > 0 ? (rationalToNumber(parseRational(value)) - low) / span : 0.5;
    // dark blue for low values through warm orange for high ones
    const hue = 230 - 200 * t;
    return `hsl(${Math.round(hue)}, 70%, ${Math.round(55 - 15 * t)}%)`;
  };
}

export interface MarkerPaint {
  fill: string;
  stroke: string;
  strokeWidth: number;
}

export function markerPaint(
  point: PolytopePointWire,
  selected: boolean,
  scale: ColorScale,
): MarkerPaint {
  const base = scale(point.color);
  if (point.highlight === "full") {
    return { fill: HIGHLIGHT_COLOR, stroke: selected ? SELECTED_STROKE : HIGHLIGHT_COLOR, strokeWidth: selected ? 2.5 : 1 };
  }
  if (point.highlight === "partial") {
    return { fill: base, stroke: HIGHLIGHT_COLOR, strokeWidth: selected ? 3.5 : 2 };
  }
  return { fill: base, stroke: selected ? SELECTED_STROKE : base, strokeWidth: selected ? 2.5 : 1 };
}
