// Wire shapes of the HTTP API. Exact values (rationals) travel as strings
// like "7/2" or "65"; booleans stay booleans; undefined values are null.

export type WireValue = string | boolean | null;

export interface InvariantInfo {
  id: string;
  display_name: string;
  kind: "numeric" | "boolean";
  domain: string;
}

export type HighlightState = "full" | "partial" | "none";

export interface PolytopePointWire {
  x: string;
  y: string;
  multiplicity: number;
  highlight: HighlightState;
  // Absent when no coloration was requested; "mixed" when the graphs at
  // this point disagree on the coloration value.
  color?: WireValue;
}

export interface FacetWire {
  a: string;
  b: string;
  c: string;
  points: number[];
}

export type HullKind = "point" | "segment" | "polygon" | "empty";

export interface HullWire {
  kind: HullKind;
  vertices: [string, string][];
  facets: FacetWire[];
}

export interface PolytopeMetaWire {
  point_count: number;
  vertex_count: number;
  graph_count: number;
  dropped_undefined: number;
}

export interface PolytopeWire {
  points: PolytopePointWire[];
  hull: HullWire;
  meta: PolytopeMetaWire;
}

export interface GraphEntryWire {
  signature: string;
  values: Record<string, WireValue>;
}

export interface ApiErrorWire {
  error: string;
  detail: string;
}
