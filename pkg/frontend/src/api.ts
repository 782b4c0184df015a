// Typed client for the REST API. Every read the UI performs goes through
// here; there is no other channel to the data.

import {
  ApiErrorWire,
  GraphEntryWire,
  InvariantInfo,
  PolytopeWire,
  WireValue,
} from "./types.js";
import { encodeProblem, ProblemSpec } from "./problem.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    detail: string,
  ) {
    super(detail);
  }
}

async function expectJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let code = "error";
    let detail = `${response.status}`;
    try {
      const body = (await response.json()) as ApiErrorWire;
      code = body.error ?? code;
      detail = body.detail ?? detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, code, detail);
  }
  return (await response.json()) as T;
}

export class Api {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  invariants(signal?: AbortSignal): Promise<InvariantInfo[]> {
    return this.get(`/api/invariants`, signal);
  }

  polytope(spec: ProblemSpec, signal?: AbortSignal): Promise<PolytopeWire> {
    return this.get(`/api/polytope?problem=${encodeProblem(spec)}`, signal);
  }

  async graphsAt(
    spec: ProblemSpec,
    coordinates: [string, string][],
    extraInvariants: string[] = [],
    signal?: AbortSignal,
  ): Promise<GraphEntryWire[]> {
    const response = await this.fetchFn(`${this.base}/api/graphs`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        problem: encodeProblem(spec),
        coordinates,
        extra_invariants: extraInvariants,
      }),
      signal,
    });
    return expectJson(response);
  }

  graphInvariants(
    signature: string,
    ids?: string[],
    signal?: AbortSignal,
  ): Promise<Record<string, WireValue>> {
    const suffix = ids && ids.length ? `?ids=${ids.join(",")}` : "";
    return this.get(
      `/api/graph/${encodeURIComponent(signature)}/invariants${suffix}`,
      signal,
    );
  }

  exportUrl(spec: ProblemSpec): string {
    return `${this.base}/api/export.g6?problem=${encodeProblem(spec)}`;
  }

  private async get<T>(path: string, signal?: AbortSignal): Promise<T> {
    const response = await this.fetchFn(this.base + path, { signal });
    return expectJson<T>(response);
  }
}

// Serializes refetches: starting a new run aborts the one in flight, and a
// stale run that resolves late is dropped instead of clobbering fresh state.
export class LatestWins {
  private sequence = 0;
  private controller: AbortController | null = null;

  async run<T>(task: (signal: AbortSignal) => Promise<T>): Promise<T | undefined> {
    this.sequence += 1;
    const ticket = this.sequence;
    this.controller?.abort();
    const controller = new AbortController();
    this.controller = controller;
    try {
      const result = await task(controller.signal);
      return ticket === this.sequence ? result : undefined;
    } catch (error) {
      if (ticket !== this.sequence) return undefined; // superseded; ignore
      throw error;
    }
  }
}
