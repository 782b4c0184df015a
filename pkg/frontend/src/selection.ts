// Point selection over one polytope chart. Points are identified by their
// exact wire coordinates, so selections survive refetches and URL round
// trips without any float comparisons.

import { PolytopeWire } from "./types.js";
import { coordinateKey } from "./state.js";

export function pointKeys(payload: PolytopeWire): string[] {
  return payload.points.map((p) => coordinateKey(p.x, p.y));
}

export function togglePoint(selected: string[], key: string): string[] {
  return selected.includes(key)
    ? selected.filter((k) => k !== key)
    : [...selected, key];
}

// Clicking a facet selects exactly the incident points the API reported,
// replacing the current selection.
export function facetSelection(payload: PolytopeWire, facetIndex: number): string[] {
  const facet = payload.hull.facets[facetIndex];
  if (!facet) return [];
  return facet.points.map((i) => {
    const p = payload.points[i];
    if (!p) throw new Error(`facet references missing point index ${i}`);
    return coordinateKey(p.x, p.y);
  });
}

export function selectionToCoordinates(keys: string[]): [string, string][] {
  return keys.map((key) => {
    const comma = key.indexOf(",");
    if (comma < 0) throw new Error(`bad coordinate key ${JSON.stringify(key)}`);
    return [key.slice(0, comma), key.slice(comma + 1)];
  });
}
