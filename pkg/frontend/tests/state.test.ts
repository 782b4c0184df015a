import { describe, expect, it } from "vitest";

import { problemSpec } from "../src/problem.js";
import {
  decodeState,
  decodeStateUrl,
  defaultState,
  encodeState,
  SessionState,
  stateUrl,
} from "../src/state.js";

const FULL_STATE: SessionState = {
  problem: problemSpec("chromatic_number", "clique_number", 7, {
    graphClass: "connected",
    constraints: [{ invariant: "size", op: "eq", target: "15" }],
    coloration: "diameter",
  }),
  orders: [5, 6, 7],
  selected: { 7: ["2,2", "7,7"], 5: ["3,1/2"] },
  syncAxes: true,
  panel: {
    layout: "force",
    showSignature: false,
    showInvariants: true,
    complement: true,
    degreeColors: true,
  },
};

describe("session state URL codec", () => {
  it("decode(encode(s)) restores the full state", () => {
    const url = encodeState(FULL_STATE);
    expect(decodeStateUrl(url)).toEqual(FULL_STATE);
  });

  it("encode(decode(url)) reproduces a canonical URL exactly", () => {
    const url = encodeState(FULL_STATE);
    expect(encodeState(decodeStateUrl(url))).toBe(url);
    const plain = encodeState(defaultState(problemSpec("order", "size", 6)));
    expect(encodeState(decodeStateUrl(plain))).toBe(plain);
  });

  it("keeps problem and display independent", () => {
    const url = encodeState(FULL_STATE);
    const [search, fragment] = url.split("#");
    expect(search).toContain("?problem=");
    expect(fragment).toContain("o=5,6,7");
    expect(fragment).toContain("sel7=2,2;7,7");
    expect(fragment).toContain("sync=1");
    expect(fragment).toContain("layout=force");
  });

  it("fills defaults when the fragment is missing or partial", () => {
    const problemOnly = encodeState(FULL_STATE).split("#")[0];
    const state = decodeStateUrl(problemOnly);
    expect(state.problem).toEqual(FULL_STATE.problem);
    expect(state.orders).toEqual([7]);
    expect(state.selected).toEqual({});
    expect(state.syncAxes).toBe(false);
    expect(state.panel.layout).toBe("circle");
    expect(state.panel.showSignature).toBe(true);

    const partial = decodeState(problemOnly.slice(1), "o=6,7&layout=grid");
    expect(partial.orders).toEqual([6, 7]);
    expect(partial.panel.layout).toBe("grid");
    expect(partial.panel.complement).toBe(false);
  });

  it("ignores selections for orders that are not shown", () => {
    const state = decodeState("", "o=6&sel7=2,2");
    expect(state.orders).toEqual([6]);
    expect(state.selected).toEqual({});
  });

  it("stateUrl replaces any previous query and fragment", () => {
    const state = defaultState(problemSpec("order", "size", 4));
    const url = stateUrl("http://localhost:8711/?problem=old#o=9", state);
    expect(url.startsWith("http://localhost:8711/?problem=")).toBe(true);
    expect(decodeStateUrl(url)).toEqual(state);
  });
});
