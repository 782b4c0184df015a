// Session state <-> URL. The problem definition travels as ?problem=<base64url>
// and everything about the display (selected orders, selected points, axis
// sync, graph panel options) rides in the fragment, so tweaking the view never
// causes a request and a shared link restores the exact screen.

import { decodeProblem, encodeProblem, ProblemSpec, problemSpec } from "./problem.js";

export type LayoutKind = "circle" | "force" | "grid";

export interface GraphPanelOptions {
  layout: LayoutKind;
  showSignature: boolean;
  showInvariants: boolean;
  complement: boolean;
  degreeColors: boolean;
}

export interface SessionState {
  problem: ProblemSpec;
  orders: number[]; // charts to draw, ascending
  selected: Record<number, string[]>; // per order: "x,y" coordinate keys
  syncAxes: boolean;
  panel: GraphPanelOptions;
}

export const DEFAULT_PANEL: GraphPanelOptions = {
  layout: "circle",
  showSignature: true,
  showInvariants: false,
  complement: false,
  degreeColors: false,
};

export function defaultState(problem: ProblemSpec): SessionState {
  return {
    problem,
    orders: [problem.order],
    selected: {},
    syncAxes: false,
    panel: { ...DEFAULT_PANEL },
  };
}

export function coordinateKey(x: string, y: string): string {
  return `${x},${y}`;
}

const LAYOUTS: LayoutKind[] = ["circle", "force", "grid"];

function flag(value: boolean): string {
  return value ? "1" : "0";
}

// Fragment parameters are emitted in one fixed order so that every state has
// exactly one canonical URL: encode(decode(url)) = url.
export function encodeState(state: SessionState): string {
  const parts: string[] = [];
  parts.push(`o=${state.orders.join(",")}`);
  parts.push(`sync=${flag(state.syncAxes)}`);
  for (const order of [...state.orders].sort((a, b) => a - b)) {
    const keys = state.selected[order];
    if (keys && keys.length) {
      parts.push(`sel${order}=${keys.join(";")}`);
    }
  }
  const p = state.panel;
  parts.push(`layout=${p.layout}`);
  parts.push(`sig=${flag(p.showSignature)}`);
  parts.push(`inv=${flag(p.showInvariants)}`);
  parts.push(`comp=${flag(p.complement)}`);
  parts.push(`deg=${flag(p.degreeColors)}`);
  return `?problem=${encodeProblem(state.problem)}#${parts.join("&")}`;
}

export function stateUrl(base: string, state: SessionState): string {
  return base.replace(/[?#].*$/, "") + encodeState(state);
}

function parseFlag(value: string | null, fallback: boolean): boolean {
  if (value === "1") return true;
  if (value === "0") return false;
  return fallback;
}

export function decodeState(search: string, fragment: string): SessionState {
  const query = new URLSearchParams(search.replace(/^\?/, ""));
  const encoded = query.get("problem");
  const problem = encoded
    ? decodeProblem(encoded)
    : problemSpec("chromatic_number", "clique_number", 7);
  const state = defaultState(problem);

  const params = new URLSearchParams(fragment.replace(/^#/, ""));
  const orders = params.get("o");
  if (orders !== null) {
    const parsed = orders
      .split(",")
      .map((t) => Number.parseInt(t, 10))
      .filter((n) => Number.isSafeInteger(n) && n >= 1);
    if (parsed.length) {
      state.orders = [...new Set(parsed)].sort((a, b) => a - b);
    }
  }
  state.syncAxes = parseFlag(params.get("sync"), false);
  for (const order of state.orders) {
    const raw = params.get(`sel${order}`);
    if (raw) {
      state.selected[order] = raw.split(";").filter((k) => k.includes(","));
    }
  }
  const layout = params.get("layout");
  if (layout !== null && LAYOUTS.includes(layout as LayoutKind)) {
    state.panel.layout = layout as LayoutKind;
  }
  state.panel.showSignature = parseFlag(params.get("sig"), DEFAULT_PANEL.showSignature);
  state.panel.showInvariants = parseFlag(params.get("inv"), DEFAULT_PANEL.showInvariants);
  state.panel.complement = parseFlag(params.get("comp"), DEFAULT_PANEL.complement);
  state.panel.degreeColors = parseFlag(params.get("deg"), DEFAULT_PANEL.degreeColors);
  return state;
}

export function decodeStateUrl(url: string): SessionState {
  const hash = url.indexOf("#");
  const fragment = hash < 0 ? "" : url.slice(hash + 1);
  const head = hash < 0 ? url : url.slice(0, hash);
  const question = head.indexOf("?");
  const search = question < 0 ? "" : head.slice(question + 1);
  return decodeState(search, fragment);
}
