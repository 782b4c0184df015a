// Problem descriptions and their URL encoding. The encoding must match the
// server byte for byte: canonical JSON (sorted keys, no spaces) of the wire
// object, then unpadded base64url. decode(encode(p)) = p, and re-encoding a
// decoded problem reproduces the input string exactly.

import { isRationalText } from "./rational.js";

export type GraphClass = "all" | "connected" | "tree";
export type ConstraintOp =
  | "le"
  | "ge"
  | "lt"
  | "gt"
  | "eq"
  | "is_true"
  | "is_false";

export interface Constraint {
  invariant: string;
  op: ConstraintOp;
  target: string | null; // rational text for relational ops, null for boolean ops
}

export interface Highlight {
  invariant: string;
  target: string | boolean;
}

export interface ProblemSpec {
  xInvariant: string;
  yInvariant: string;
  order: number;
  graphClass: GraphClass;
  constraints: Constraint[];
  coloration: string | null;
  highlight: Highlight | null;
  extraInvariants: string[];
}

export function problemSpec(
  xInvariant: string,
  yInvariant: string,
  order: number,
  partial: Partial<ProblemSpec> = {},
): ProblemSpec {
  return {
    xInvariant,
    yInvariant,
    order,
    graphClass: "all",
    constraints: [],
    coloration: null,
    highlight: null,
    extraInvariants: [],
    ...partial,
  };
}

export class ProblemDecodeError extends Error {}

const GRAPH_CLASSES: GraphClass[] = ["all", "connected", "tree"];
const RELATIONAL_OPS: ConstraintOp[] = ["le", "ge", "lt", "gt", "eq"];
const BOOLEAN_OPS: ConstraintOp[] = ["is_true", "is_false"];
const WIRE_KEYS = [
  "class",
  "coloration",
  "constraints",
  "extra_invariants",
  "highlight",
  "order",
  "x_invariant",
  "y_invariant",
];

// --- canonical JSON ---------------------------------------------------------

type Json = null | boolean | number | string | Json[] | { [key: string]: Json };

export function canonicalJson(value: Json): string {
  if (value === null || typeof value === "boolean" || typeof value === "string") {
    return JSON.stringify(value);
  }
  if (typeof value === "number") {
    if (!Number.isSafeInteger(value)) {
      throw new Error(`canonical JSON carries only integers, got ${value}`);
    }
    return String(value);
  }
  if (Array.isArray(value)) {
    return "[" + value.map(canonicalJson).join(",") + "]";
  }
  const keys = Object.keys(value).sort();
  const parts = keys.map((k) => JSON.stringify(k) + ":" + canonicalJson(value[k]));
  return "{" + parts.join(",") + "}";
}

// --- base64url (unpadded) ---------------------------------------------------

const B64 = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
const B64_INDEX = new Map([...B64].map((ch, i) => [ch, i]));

export function base64urlEncode(bytes: Uint8Array): string {
  let out = "";
  for (let i = 0; i < bytes.length; i += 3) {
    const a = bytes[i];
    const b = i + 1 < bytes.length ? bytes[i + 1] : 0;
    const c = i + 2 < bytes.length ? bytes[i + 2] : 0;
    out += B64[a >> 2] + B64[((a & 3) << 4) | (b >> 4)];
    if (i + 1 < bytes.length) out += B64[((b & 15) << 2) | (c >> 6)];
    if (i + 2 < bytes.length) out += B64[c & 63];
  }
  return out;
}

export function base64urlDecode(text: string): Uint8Array {
  if (text.length % 4 === 1) {
    throw new ProblemDecodeError("not valid base64url");
  }
  const codes: number[] = [];
  for (const ch of text) {
    const value = B64_INDEX.get(ch);
    if (value === undefined) {
      throw new ProblemDecodeError("not valid base64url");
    }
    codes.push(value);
  }
  const bytes: number[] = [];
  for (let i = 0; i < codes.length; i += 4) {
    const chunk = codes.slice(i, i + 4);
    const n = chunk.length;
    const [a, b = 0, c = 0, d = 0] = chunk;
    bytes.push((a << 2) | (b >> 4));
    if (n >= 3) bytes.push(((b & 15) << 4) | (c >> 2));
    if (n === 4) bytes.push(((c & 3) << 6) | d);
  }
  return new Uint8Array(bytes);
}

// --- spec <-> wire ----------------------------------------------------------

function specToWire(spec: ProblemSpec): Json {
  return {
    class: spec.graphClass,
    coloration: spec.coloration,
    constraints: spec.constraints.map((c) => ({
      invariant: c.invariant,
      op: c.op,
      target: c.target,
    })),
    extra_invariants: [...spec.extraInvariants],
    highlight:
      spec.highlight === null
        ? null
        : { invariant: spec.highlight.invariant, target: spec.highlight.target },
    order: spec.order,
    x_invariant: spec.xInvariant,
    y_invariant: spec.yInvariant,
  };
}

function fail(message: string): never {
  throw new ProblemDecodeError(message);
}

function expectString(value: unknown, what: string): string {
  if (typeof value !== "string" || value === "") fail(`${what} must be a non-empty string`);
  return value;
}

function specFromWire(wire: unknown): ProblemSpec {
  if (typeof wire !== "object" || wire === null || Array.isArray(wire)) {
    fail("problem must be a JSON object");
  }
  const record = wire as Record<string, unknown>;
  const keys = Object.keys(record).sort();
  if (keys.join(",") !== WIRE_KEYS.join(",")) {
    fail(`problem keys must be exactly ${WIRE_KEYS.join(", ")}`);
  }

  const graphClass = record.class;
  if (typeof graphClass !== "string" || !GRAPH_CLASSES.includes(graphClass as GraphClass)) {
    fail("class must be all, connected, or tree");
  }
  const order = record.order;
  if (typeof order !== "number" || typeof order === "boolean" || !Number.isSafeInteger(order)) {
    fail("order must be an integer");
  }

  const rawConstraints = record.constraints;
  if (!Array.isArray(rawConstraints)) fail("constraints must be an array");
  const constraints = rawConstraints.map((raw): Constraint => {
    if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
      fail("constraint must be an object");
    }
    const c = raw as Record<string, unknown>;
    if (Object.keys(c).sort().join(",") !== "invariant,op,target") {
      fail("constraint keys must be invariant, op, target");
    }
    const invariant = expectString(c.invariant, "constraint invariant");
    const op = c.op as ConstraintOp;
    if (RELATIONAL_OPS.includes(op)) {
      const target = c.target;
      if (typeof target !== "string" || !isRationalText(target)) {
        fail(`constraint ${invariant} needs a rational target`);
      }
      return { invariant, op, target };
    }
    if (BOOLEAN_OPS.includes(op)) {
      if (c.target !== null) fail("boolean constraints carry no target");
      return { invariant, op, target: null };
    }
    fail(`unknown constraint op ${String(c.op)}`);
  });

  let highlight: Highlight | null = null;
  if (record.highlight !== null) {
    const raw = record.highlight;
    if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
      fail("highlight must be an object or null");
    }
    const h = raw as Record<string, unknown>;
    if (Object.keys(h).sort().join(",") !== "invariant,target") {
      fail("highlight keys must be invariant, target");
    }
    const invariant = expectString(h.invariant, "highlight invariant");
    const target = h.target;
    if (typeof target === "boolean") {
      highlight = { invariant, target };
    } else if (typeof target === "string" && isRationalText(target)) {
      highlight = { invariant, target };
    } else {
      fail("highlight target must be a rational string or a boolean");
    }
  }

  const coloration = record.coloration;
  if (coloration !== null && typeof coloration !== "string") {
    fail("coloration must be a string or null");
  }
  const rawExtras = record.extra_invariants;
  if (!Array.isArray(rawExtras)) fail("extra_invariants must be an array");
  const extraInvariants = rawExtras.map((e) => expectString(e, "extra invariant"));

  return {
    xInvariant: expectString(record.x_invariant, "x_invariant"),
    yInvariant: expectString(record.y_invariant, "y_invariant"),
    order,
    graphClass: graphClass as GraphClass,
    constraints,
    coloration: coloration as string | null,
    highlight,
    extraInvariants,
  };
}

export function encodeProblem(spec: ProblemSpec): string {
  const text = canonicalJson(specToWire(spec));
  return base64urlEncode(new TextEncoder().encode(text));
}

export function decodeProblem(text: string): ProblemSpec {
  const bytes = base64urlDecode(text);
  let parsed: unknown;
  try {
    parsed = JSON.parse(new TextDecoder("utf-8", { fatal: true }).decode(bytes));
  } catch {
    fail("problem is not valid JSON");
  }
  return specFromWire(parsed);
}

// --- constraint input grammar -----------------------------------------------

// Same little language the CLI accepts: ID<=V, ID>=V, ID<V, ID>V, ID=V,
// ID=true, ID=false. Returns null on text that cannot be a constraint.
export function parseConstraintText(text: string): Constraint | null {
  const trimmed = text.trim();
  const match = /^([a-z_][a-z0-9_]*)\s*(<=|>=|<|>|=)\s*(\S+)$/.exec(trimmed);
  if (!match) return null;
  const [, invariant, opText, value] = match;
  if (opText === "=") {
    if (value === "true") return { invariant, op: "is_true", target: null };
    if (value === "false") return { invariant, op: "is_false", target: null };
  }
  if (!isRationalText(value)) return null;
  const op = ({ "<=": "le", ">=": "ge", "<": "lt", ">": "gt", "=": "eq" } as const)[
    opText as "<=" | ">=" | "<" | ">" | "="
  ];
  return { invariant, op, target: value };
}

export function formatConstraint(c: Constraint): string {
  switch (c.op) {
    case "is_true":
      return `${c.invariant}=true`;
    case "is_false":
      return `${c.invariant}=false`;
    case "le":
      return `${c.invariant}<=${c.target}`;
    case "ge":
      return `${c.invariant}>=${c.target}`;
    case "lt":
      return `${c.invariant}<${c.target}`;
    case "gt":
      return `${c.invariant}>${c.target}`;
    case "eq":
      return `${c.invariant}=${c.target}`;
  }
}
