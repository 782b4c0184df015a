// Application wiring. One mutable SessionState drives the three panels; every
// change is re-encoded into the address bar, and every data read goes through
// the REST client with latest-spec-wins refetching per chart.

import { Api, ApiError, LatestWins } from "./api.js";
import {
  formatConstraint,
  GraphClass,
  parseConstraintText,
  ProblemSpec,
  problemSpec,
} from "./problem.js";
import {
  decodeStateUrl,
  defaultState,
  LayoutKind,
  SessionState,
  stateUrl,
} from "./state.js";
import { facetSelection, selectionToCoordinates, togglePoint } from "./selection.js";
import { LazyList } from "./lazyload.js";
import { isRationalText } from "./rational.js";
import {
  Extents,
  graphCard,
  payloadExtents,
  renderChart,
  unionExtents,
  ViewBox,
} from "./draw.js";
import { GraphEntryWire, InvariantInfo, PolytopeWire } from "./types.js";

const MAX_ORDER = 9;

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function hintEl(text: string): HTMLElement {
  const p = document.createElement("p");
  p.className = "hint";
  p.textContent = text;
  return p;
}

function banner(text: string): HTMLElement {
  const div = document.createElement("div");
  div.className = "banner";
  div.textContent = text;
  return div;
}

function describeError(error: unknown): string {
  if (error instanceof ApiError) return `${error.code}: ${error.message}`;
  return error instanceof Error ? error.message : String(error);
}

// --- state -------------------------------------------------------------------

const apiBase =
  document
    .querySelector('meta[name="polyfacets-api"]')
    ?.getAttribute("content")
    ?.replace(/\/+$/, "") ?? "";
const api = new Api(apiBase);

function loadInitialState(): SessionState {
  try {
    return decodeStateUrl(location.href);
  } catch {
    return defaultState(problemSpec("chromatic_number", "clique_number", 7));
  }
}

let state: SessionState = loadInitialState();
let registry: InvariantInfo[] = [];

const payloads = new Map<number, PolytopeWire>();
const chartErrors = new Map<number, string>();
const chartViews = new Map<number, ViewBox>();
const chartGuards = new Map<number, LatestWins>();
const graphGuards = new Map<number, LatestWins>();

interface GraphData {
  entries: GraphEntryWire[];
  lazy: LazyList;
}
const graphData = new Map<number, GraphData>();
const graphErrors = new Map<number, string>();

interface SectionDom {
  grid: HTMLElement;
  notice: HTMLElement;
  rendered: number;
}
const sectionDom = new Map<number, SectionDom>();
let observer: IntersectionObserver;

function guardFor(map: Map<number, LatestWins>, order: number): LatestWins {
  let guard = map.get(order);
  if (!guard) {
    guard = new LatestWins();
    map.set(order, guard);
  }
  return guard;
}

function specForOrder(order: number): ProblemSpec {
  return { ...state.problem, order };
}

function syncUrl(): void {
  history.replaceState(null, "", stateUrl(location.href, state));
}

// --- data --------------------------------------------------------------------

async function refreshChart(order: number): Promise<void> {
  chartErrors.delete(order);
  payloads.delete(order);
  renderCharts();
  try {
    const payload = await guardFor(chartGuards, order).run((signal) =>
      api.polytope(specForOrder(order), signal),
    );
    if (!payload) return; // superseded by a newer request
    payloads.set(order, payload);
  } catch (error) {
    chartErrors.set(order, describeError(error));
  }
  renderCharts();
}

function refreshAllCharts(): void {
  for (const order of [...payloads.keys()]) {
    if (!state.orders.includes(order)) {
      payloads.delete(order);
      chartViews.delete(order);
    }
  }
  for (const order of [...chartErrors.keys()]) {
    if (!state.orders.includes(order)) chartErrors.delete(order);
  }
  for (const order of state.orders) void refreshChart(order);
  renderCharts();
}

async function refreshGraphs(order: number): Promise<void> {
  graphErrors.delete(order);
  const keys = state.selected[order] ?? [];
  if (!state.orders.includes(order) || keys.length === 0) {
    graphData.delete(order);
    renderGraphPanel();
    return;
  }
  try {
    const entries = await guardFor(graphGuards, order).run((signal) =>
      api.graphsAt(
        specForOrder(order),
        selectionToCoordinates(keys),
        state.problem.extraInvariants,
        signal,
      ),
    );
    if (!entries) return;
    graphData.set(order, { entries, lazy: new LazyList(entries.length) });
  } catch (error) {
    graphData.delete(order);
    graphErrors.set(order, describeError(error));
  }
  renderGraphPanel();
}

function refreshAllGraphs(): void {
  for (const order of [...graphData.keys()]) {
    if (!state.orders.includes(order)) graphData.delete(order);
  }
  for (const order of [...graphErrors.keys()]) {
    if (!state.orders.includes(order)) graphErrors.delete(order);
  }
  for (const order of state.orders) void refreshGraphs(order);
  renderGraphPanel();
}

// --- polytope charts ---------------------------------------------------------

function renderCharts(): void {
  const host = byId("charts");
  host.textContent = "";
  if (!state.orders.length) {
    host.append(hintEl("choose at least one order"));
    return;
  }
  let shared: Extents | null = null;
  if (state.syncAxes) {
    shared = unionExtents(
      state.orders.map((o) => {
        const p = payloads.get(o);
        return p ? payloadExtents(p) : null;
      }),
    );
  }
  for (const order of state.orders) {
    const cell = document.createElement("div");
    cell.className = "chart-cell";
    const error = chartErrors.get(order);
    const payload = payloads.get(order);
    if (error) {
      const note = banner(`order ${order}: ${error}`);
      const retry = document.createElement("button");
      retry.textContent = "retry";
      retry.addEventListener("click", () => void refreshChart(order));
      note.append(" ", retry);
      cell.append(note);
    } else if (!payload) {
      cell.append(hintEl(`order ${order}: loading`));
    } else {
      const chartHost = document.createElement("div");
      cell.append(chartHost);
      renderChart(chartHost, {
        payload,
        selected: new Set(state.selected[order] ?? []),
        extents: state.syncAxes ? shared : payloadExtents(payload),
        view: chartViews.get(order) ?? null,
        title: `order ${order}`,
        xLabel: state.problem.xInvariant,
        yLabel: state.problem.yInvariant,
        onPointClick: (key) => {
          const next = togglePoint(state.selected[order] ?? [], key);
          if (next.length) state.selected[order] = next;
          else delete state.selected[order];
          syncUrl();
          renderCharts();
          void refreshGraphs(order);
        },
        onFacetClick: (index) => {
          const keys = facetSelection(payload, index);
          if (keys.length) state.selected[order] = keys;
          else delete state.selected[order];
          syncUrl();
          renderCharts();
          void refreshGraphs(order);
        },
        onViewChange: (view) => {
          if (view) {
            chartViews.set(order, view);
          } else {
            chartViews.delete(order);
            renderCharts();
          }
        },
      });
      const footer = document.createElement("p");
      footer.className = "chart-footer";
      footer.textContent = `${payload.meta.point_count} points, ${payload.meta.graph_count} graphs `;
      const exportLink = document.createElement("a");
      exportLink.href = api.exportUrl(specForOrder(order));
      exportLink.target = "_blank";
      exportLink.textContent = "export signatures";
      footer.append(exportLink);
      cell.append(footer);
    }
    host.append(cell);
  }
}

// --- graph panel ---------------------------------------------------------------

function appendCards(order: number): void {
  const data = graphData.get(order);
  const dom = sectionDom.get(order);
  if (!data || !dom) return;
  const visible = data.lazy.visible();
  for (let i = dom.rendered; i < visible; i += 1) {
    dom.grid.append(graphCard(data.entries[i], state.panel));
  }
  dom.rendered = visible;
  dom.notice.textContent =
    data.lazy.truncationNotice() ?? `all ${data.entries.length} graphs shown`;
}

function renderGraphPanel(): void {
  const host = byId("graphs-body");
  observer.disconnect();
  sectionDom.clear();
  host.textContent = "";
  const active = state.orders.filter(
    (o) => (state.selected[o] ?? []).length || graphErrors.has(o),
  );
  if (!active.length) {
    host.append(
      hintEl("click points or a hull edge in a chart to list the graphs behind them"),
    );
    return;
  }
  for (const order of active) {
    const section = document.createElement("section");
    section.className = "graph-section";
    const heading = document.createElement("h3");
    const count = (state.selected[order] ?? []).length;
    heading.textContent = `order ${order}, ${count} point${count === 1 ? "" : "s"} selected`;
    section.append(heading);
    const error = graphErrors.get(order);
    const data = graphData.get(order);
    if (error) {
      section.append(banner(error));
    } else if (!data) {
      section.append(hintEl("loading graphs"));
    } else {
      const grid = document.createElement("div");
      grid.className = "graph-grid";
      const notice = document.createElement("p");
      notice.className = "truncation-notice";
      const sentinel = document.createElement("div");
      sentinel.className = "sentinel";
      sentinel.dataset.order = String(order);
      section.append(grid, notice, sentinel);
      sectionDom.set(order, { grid, notice, rendered: 0 });
      appendCards(order);
      observer.observe(sentinel);
    }
    host.append(section);
  }
}

// --- problem panel -------------------------------------------------------------

function commitProblem(patch: Partial<ProblemSpec>): void {
  state.problem = { ...state.problem, ...patch };
  syncUrl();
  refreshAllCharts();
  refreshAllGraphs();
}

function renderConstraintChips(): void {
  const host = byId("constraint-list");
  host.textContent = "";
  state.problem.constraints.forEach((constraint, index) => {
    const chip = document.createElement("span");
    chip.className = "chip";
    chip.textContent = formatConstraint(constraint);
    const remove = document.createElement("button");
    remove.textContent = "x";
    remove.title = "remove this filter";
    remove.addEventListener("click", () => {
      commitProblem({
        constraints: state.problem.constraints.filter((_, i) => i !== index),
      });
      renderConstraintChips();
    });
    chip.append(remove);
    host.append(chip);
  });
}

function syncProblemInputs(): void {
  byId<HTMLInputElement>("x-inv").value = state.problem.xInvariant;
  byId<HTMLInputElement>("y-inv").value = state.problem.yInvariant;
  byId<HTMLSelectElement>("graph-class").value = state.problem.graphClass;
  byId<HTMLInputElement>("sync-axes").checked = state.syncAxes;
  for (const box of byId("orders").querySelectorAll<HTMLInputElement>("input")) {
    box.checked = state.orders.includes(Number(box.value));
  }
  byId<HTMLInputElement>("coloration").value = state.problem.coloration ?? "";
  byId<HTMLInputElement>("highlight-inv").value =
    state.problem.highlight?.invariant ?? "";
  const target = state.problem.highlight?.target;
  byId<HTMLInputElement>("highlight-target").value =
    target === undefined ? "" : typeof target === "boolean" ? String(target) : target;
  byId<HTMLInputElement>("extra-invs").value =
    state.problem.extraInvariants.join(", ");
  byId<HTMLSelectElement>("layout").value = state.panel.layout;
  byId<HTMLInputElement>("show-signature").checked = state.panel.showSignature;
  byId<HTMLInputElement>("show-invariants").checked = state.panel.showInvariants;
  byId<HTMLInputElement>("complement").checked = state.panel.complement;
  byId<HTMLInputElement>("degree-colors").checked = state.panel.degreeColors;
  renderConstraintChips();
}

function onOrdersChanged(): void {
  const boxes = byId("orders").querySelectorAll<HTMLInputElement>("input");
  const chosen = [...boxes]
    .filter((b) => b.checked)
    .map((b) => Number(b.value))
    .sort((a, b) => a - b);
  state.orders = chosen;
  for (const key of Object.keys(state.selected)) {
    if (!chosen.includes(Number(key))) delete state.selected[Number(key)];
  }
  if (chosen.length && !chosen.includes(state.problem.order)) {
    state.problem = { ...state.problem, order: chosen[0] };
  }
  syncUrl();
  refreshAllCharts();
  refreshAllGraphs();
}

function wireProblemPanel(): void {
  const ordersHost = byId("orders");
  for (let n = 1; n <= MAX_ORDER; n += 1) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.value = String(n);
    box.addEventListener("change", onOrdersChanged);
    label.append(box, ` ${n}`);
    ordersHost.append(label);
  }

  const xInput = byId<HTMLInputElement>("x-inv");
  xInput.addEventListener("change", () => {
    const id = xInput.value.trim();
    if (id) commitProblem({ xInvariant: id });
  });
  const yInput = byId<HTMLInputElement>("y-inv");
  yInput.addEventListener("change", () => {
    const id = yInput.value.trim();
    if (id) commitProblem({ yInvariant: id });
  });
  const classSelect = byId<HTMLSelectElement>("graph-class");
  classSelect.addEventListener("change", () => {
    commitProblem({ graphClass: classSelect.value as GraphClass });
  });
  const syncBox = byId<HTMLInputElement>("sync-axes");
  syncBox.addEventListener("change", () => {
    state.syncAxes = syncBox.checked;
    syncUrl();
    renderCharts();
  });

  const constraintInput = byId<HTMLInputElement>("constraint-input");
  const addConstraint = () => {
    const text = constraintInput.value.trim();
    const errorEl = byId("constraint-error");
    if (!text) return;
    const parsed = parseConstraintText(text);
    if (!parsed) {
      errorEl.textContent =
        `cannot parse "${text}": expected forms are id<=value, id>=value, ` +
        `id<value, id>value, id=value, id=true, id=false`;
      return;
    }
    errorEl.textContent = "";
    constraintInput.value = "";
    commitProblem({ constraints: [...state.problem.constraints, parsed] });
    renderConstraintChips();
  };
  byId("constraint-add").addEventListener("click", addConstraint);
  constraintInput.addEventListener("keydown", (e) => {
    if (e.key === "Enter") {
      e.preventDefault();
      addConstraint();
    }
  });

  const colorationInput = byId<HTMLInputElement>("coloration");
  colorationInput.addEventListener("change", () => {
    const id = colorationInput.value.trim();
    commitProblem({ coloration: id || null });
  });

  const highlightChanged = () => {
    const invariant = byId<HTMLInputElement>("highlight-inv").value.trim();
    const targetText = byId<HTMLInputElement>("highlight-target").value.trim();
    const errorEl = byId("highlight-error");
    if (!invariant) {
      errorEl.textContent = "";
      if (state.problem.highlight) commitProblem({ highlight: null });
      return;
    }
    let target: string | boolean;
    if (targetText === "true" || targetText === "false") {
      target = targetText === "true";
    } else if (isRationalText(targetText)) {
      target = targetText;
    } else {
      errorEl.textContent =
        `highlight target must be true, false or a rational like 7/2, ` +
        `got "${targetText}"`;
      return;
    }
    errorEl.textContent = "";
    commitProblem({ highlight: { invariant, target } });
  };
  byId("highlight-inv").addEventListener("change", highlightChanged);
  byId("highlight-target").addEventListener("change", highlightChanged);

  const extrasInput = byId<HTMLInputElement>("extra-invs");
  extrasInput.addEventListener("change", () => {
    const ids = extrasInput.value
      .split(",")
      .map((t) => t.trim())
      .filter(Boolean);
    commitProblem({ extraInvariants: [...new Set(ids)] });
  });

  const layoutSelect = byId<HTMLSelectElement>("layout");
  layoutSelect.addEventListener("change", () => {
    state.panel.layout = layoutSelect.value as LayoutKind;
    syncUrl();
    renderGraphPanel();
  });
  const flags: [string, "showSignature" | "showInvariants" | "complement" | "degreeColors"][] = [
    ["show-signature", "showSignature"],
    ["show-invariants", "showInvariants"],
    ["complement", "complement"],
    ["degree-colors", "degreeColors"],
  ];
  for (const [id, key] of flags) {
    const box = byId<HTMLInputElement>(id);
    box.addEventListener("change", () => {
      state.panel[key] = box.checked;
      syncUrl();
      renderGraphPanel();
    });
  }

  byId("share").addEventListener("click", () => {
    const url = stateUrl(location.href, state);
    const note = byId("share-note");
    const done = () => {
      note.textContent = "link copied";
      window.setTimeout(() => {
        note.textContent = "";
      }, 1500);
    };
    if (navigator.clipboard?.writeText) {
      navigator.clipboard.writeText(url).then(done, () => {
        window.prompt("copy the link", url);
      });
    } else {
      window.prompt("copy the link", url);
    }
  });
}

// --- registry ------------------------------------------------------------------

async function loadRegistry(): Promise<void> {
  const note = byId("registry-note");
  try {
    registry = await api.invariants();
  } catch (error) {
    note.textContent = `cannot reach the API at ${apiBase || "this origin"}: ${describeError(error)}`;
    note.classList.add("error");
    return;
  }
  const numeric = byId("numeric-invariants");
  const all = byId("all-invariants");
  numeric.textContent = "";
  all.textContent = "";
  for (const info of registry) {
    const option = document.createElement("option");
    option.value = info.id;
    option.label = info.display_name;
    all.append(option);
    if (info.kind === "numeric") {
      numeric.append(option.cloneNode(true) as HTMLOptionElement);
    }
  }
  note.textContent = `${registry.length} invariants available`;
}

// --- boot ----------------------------------------------------------------------

function init(): void {
  observer = new IntersectionObserver(
    (items) => {
      for (const item of items) {
        if (!item.isIntersecting) continue;
        const order = Number((item.target as HTMLElement).dataset.order);
        const data = graphData.get(order);
        if (data && data.lazy.grow()) appendCards(order);
      }
    },
    { root: byId("graphs"), rootMargin: "240px" },
  );

  wireProblemPanel();
  syncProblemInputs();
  syncUrl(); // normalize the address bar to the canonical encoding
  void loadRegistry();
  refreshAllCharts();
  refreshAllGraphs();

  window.addEventListener("popstate", () => {
    let restored: SessionState;
    try {
      restored = decodeStateUrl(location.href);
    } catch {
      return;
    }
    state = restored;
    syncProblemInputs();
    refreshAllCharts();
    refreshAllGraphs();
  });
}

init();
