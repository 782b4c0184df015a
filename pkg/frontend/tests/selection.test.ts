import { describe, expect, it } from "vitest";

import chiOmega7 from "./fixtures/polytope_chi_omega_7.json";
import { PolytopeWire } from "../src/types.js";
import {
  facetSelection,
  pointKeys,
  selectionToCoordinates,
  togglePoint,
} from "../src/selection.js";

// Captured verbatim from /api/polytope for x=chromatic_number,
// y=clique_number, order 7, class all.
const payload = chiOmega7 as unknown as PolytopeWire;

describe("facet click selection", () => {
  it("selects exactly the incident point set the API reported", () => {
    payload.hull.facets.forEach((facet, index) => {
      const keys = facetSelection(payload, index);
      expect(keys).toEqual(
        facet.points.map((i) => `${payload.points[i].x},${payload.points[i].y}`),
      );
      expect(keys.length).toBe(facet.points.length);
    });
  });

  it("the clique<=chromatic facet covers the diagonal", () => {
    const index = payload.hull.facets.findIndex(
      (f) => f.a === "-1" && f.b === "1" && f.c === "0",
    );
    expect(index).toBeGreaterThanOrEqual(0);
    const keys = facetSelection(payload, index);
    for (const diagonal of ["1,1", "2,2", "7,7"]) {
      expect(keys).toContain(diagonal);
    }
  });

  it("returns an empty selection for a missing facet", () => {
    expect(facetSelection(payload, 99)).toEqual([]);
  });
});

describe("point selection", () => {
  it("keys every point by its exact wire coordinates", () => {
    const keys = pointKeys(payload);
    expect(keys.length).toBe(payload.meta.point_count);
    expect(new Set(keys).size).toBe(keys.length);
    expect(keys).toContain("2,2");
  });

  it("toggles membership without reordering the rest", () => {
    let selected: string[] = [];
    selected = togglePoint(selected, "2,2");
    selected = togglePoint(selected, "7,7");
    expect(selected).toEqual(["2,2", "7,7"]);
    selected = togglePoint(selected, "2,2");
    expect(selected).toEqual(["7,7"]);
  });

  it("splits keys back into coordinate pairs at the first comma", () => {
    expect(selectionToCoordinates(["2,2", "7/2,-1/3"])).toEqual([
      ["2", "2"],
      ["7/2", "-1/3"],
    ]);
    expect(() => selectionToCoordinates(["nope"])).toThrow();
  });
});
