import { describe, expect, it } from "vitest";

import {
  base64urlDecode,
  base64urlEncode,
  canonicalJson,
  Constraint,
  decodeProblem,
  encodeProblem,
  formatConstraint,
  parseConstraintText,
  ProblemDecodeError,
  problemSpec,
  ProblemSpec,
} from "../src/problem.js";

// Encodings produced by the server for the same problems; the browser side
// must reproduce them byte for byte or shared URLs would drift.
const PLAIN_ENCODED =
  "eyJjbGFzcyI6ImFsbCIsImNvbG9yYXRpb24iOm51bGwsImNvbnN0cmFpbnRzIjpbXSwiZXh0cmFfaW52YXJpYW50cyI6W10sImhpZ2hsaWdodCI6bnVsbCwib3JkZXIiOjcsInhfaW52YXJpYW50IjoiY2hyb21hdGljX251bWJlciIsInlfaW52YXJpYW50IjoiY2xpcXVlX251bWJlciJ9";
const FANCY_ENCODED =
  "eyJjbGFzcyI6ImNvbm5lY3RlZCIsImNvbG9yYXRpb24iOiJkaWFtZXRlciIsImNvbnN0cmFpbnRzIjpbeyJpbnZhcmlhbnQiOiJ0cmVlIiwib3AiOiJpc19mYWxzZSIsInRhcmdldCI6bnVsbH0seyJpbnZhcmlhbnQiOiJtYXhfZGVncmVlIiwib3AiOiJsZSIsInRhcmdldCI6IjkvMiJ9XSwiZXh0cmFfaW52YXJpYW50cyI6WyJtYXRjaGluZ19udW1iZXIiXSwiaGlnaGxpZ2h0Ijp7ImludmFyaWFudCI6ImNvbm5lY3RlZCIsInRhcmdldCI6dHJ1ZX0sIm9yZGVyIjo2LCJ4X2ludmFyaWFudCI6ImluZGVwZW5kZW5jZV9udW1iZXIiLCJ5X2ludmFyaWFudCI6InNpemUifQ";

const PLAIN_SPEC = problemSpec("chromatic_number", "clique_number", 7);
const FANCY_SPEC: ProblemSpec = {
  xInvariant: "independence_number",
  yInvariant: "size",
  order: 6,
  graphClass: "connected",
  constraints: [
    { invariant: "tree", op: "is_false", target: null },
    { invariant: "max_degree", op: "le", target: "9/2" },
  ],
  coloration: "diameter",
  highlight: { invariant: "connected", target: true },
  extraInvariants: ["matching_number"],
};

describe("problem encoding", () => {
  it("matches the server encoding byte for byte", () => {
    expect(encodeProblem(PLAIN_SPEC)).toBe(PLAIN_ENCODED);
    expect(encodeProblem(FANCY_SPEC)).toBe(FANCY_ENCODED);
  });

  it("decodes the server encodings back to the same specs", () => {
    expect(decodeProblem(PLAIN_ENCODED)).toEqual(PLAIN_SPEC);
    expect(decodeProblem(FANCY_ENCODED)).toEqual(FANCY_SPEC);
  });

  it("round trips arbitrary specs", () => {
    const specs: ProblemSpec[] = [
      problemSpec("order", "size", 1),
      problemSpec("size", "size", 9, { graphClass: "tree" }),
      problemSpec("avg_colors", "matching_count", 8, {
        constraints: [{ invariant: "size", op: "gt", target: "-3/7" }],
        highlight: { invariant: "regular", target: false },
        extraInvariants: ["order", "size", "diameter"],
      }),
    ];
    for (const spec of specs) {
      const encoded = encodeProblem(spec);
      expect(decodeProblem(encoded)).toEqual(spec);
      expect(encodeProblem(decodeProblem(encoded))).toBe(encoded);
    }
  });

  it("rejects malformed encodings", () => {
    expect(() => decodeProblem("!!!")).toThrow(ProblemDecodeError);
    expect(() => decodeProblem("AAAAA")).toThrow(ProblemDecodeError); // length 4k+1
    expect(() => decodeProblem(base64urlEncode(new TextEncoder().encode("[1, 2]"))))
      .toThrow(ProblemDecodeError);
    const cases: unknown[] = [
      {}, // missing keys
      { class: "all" },
      null,
    ];
    for (const wire of cases) {
      const text = JSON.stringify(wire);
      expect(() => decodeProblem(base64urlEncode(new TextEncoder().encode(text))))
        .toThrow(ProblemDecodeError);
    }
  });

  it("rejects wrong field shapes", () => {
    const base = JSON.parse(
      new TextDecoder().decode(base64urlDecode(PLAIN_ENCODED)),
    ) as Record<string, unknown>;
    const broken: Record<string, unknown>[] = [
      { ...base, order: true },
      { ...base, order: 7.5 },
      { ...base, class: "digraph" },
      { ...base, constraints: [{ invariant: "size", op: "le", target: "1.5" }] },
      { ...base, constraints: [{ invariant: "tree", op: "is_true", target: "1" }] },
      { ...base, constraints: [{ invariant: "size", op: "between", target: "1" }] },
      { ...base, highlight: { invariant: "size" } },
      { ...base, highlight: { invariant: "size", target: 3 } },
      { ...base, extra_invariants: ["ok", 5] },
      { ...base, surplus: 1 },
    ];
    for (const wire of broken) {
      const text = JSON.stringify(wire);
      expect(() => decodeProblem(base64urlEncode(new TextEncoder().encode(text))))
        .toThrow(ProblemDecodeError);
    }
  });
});

describe("canonical JSON", () => {
  it("sorts keys and uses compact separators", () => {
    expect(canonicalJson({ b: 1, a: [2, { z: null, y: true }] })).toBe(
      '{"a":[2,{"y":true,"z":null}],"b":1}',
    );
  });

  it("refuses non-integer numbers", () => {
    expect(() => canonicalJson({ x: 0.5 })).toThrow();
  });
});

describe("base64url", () => {
  it("round trips bytes of every length residue", () => {
    for (let length = 0; length < 10; length++) {
      const bytes = new Uint8Array(length).map((_, i) => (i * 37 + length) % 256);
      expect(base64urlDecode(base64urlEncode(bytes))).toEqual(bytes);
    }
  });

  it("rejects standard-alphabet and padded input", () => {
    expect(() => base64urlDecode("a+b")).toThrow(ProblemDecodeError);
    expect(() => base64urlDecode("aGk=")).toThrow(ProblemDecodeError);
  });
});

describe("constraint text grammar", () => {
  it("parses every operator", () => {
    const cases: [string, Constraint][] = [
      ["size<=3", { invariant: "size", op: "le", target: "3" }],
      ["size>=7/2", { invariant: "size", op: "ge", target: "7/2" }],
      ["min_degree<2", { invariant: "min_degree", op: "lt", target: "2" }],
      ["size>-1", { invariant: "size", op: "gt", target: "-1" }],
      ["diameter=2", { invariant: "diameter", op: "eq", target: "2" }],
      ["tree=true", { invariant: "tree", op: "is_true", target: null }],
      ["tree=false", { invariant: "tree", op: "is_false", target: null }],
    ];
    for (const [text, expected] of cases) {
      expect(parseConstraintText(text)).toEqual(expected);
      expect(formatConstraint(expected)).toBe(text.replace(/\s+/g, ""));
    }
  });

  it("returns null on junk", () => {
    for (const text of ["", "size", "size<>3", "size=1.5", "3<=size", "size = "]) {
      expect(parseConstraintText(text)).toBeNull();
    }
  });
});
