// Minimal graph6 reader, enough to draw the graphs the API names by
// signature. Adjacency bits enumerate the upper triangle column by column:
// pairs (0,1), (0,2), (1,2), (0,3), ... with the first bit of each byte in
// the most significant position.

export interface DecodedGraph {
  n: number;
  edges: [number, number][];
}

export class Graph6Error extends Error {}

export function decodeGraph6(signature: string): DecodedGraph {
  if (!signature.length) throw new Graph6Error("empty signature");
  const first = signature.charCodeAt(0) - 63;
  if (first < 0 || first > 62) {
    throw new Graph6Error(`bad order byte in ${JSON.stringify(signature)}`);
  }
  const n = first;
  const bitCount = (n * (n - 1)) / 2;
  const need = Math.ceil(bitCount / 6);
  if (signature.length - 1 !== need) {
    throw new Graph6Error(
      `body length ${signature.length - 1} does not match order ${n}`,
    );
  }
  const pairs: [number, number][] = [];
  for (let j = 1; j < n; j++) {
    for (let i = 0; i < j; i++) pairs.push([i, j]);
  }
  const edges: [number, number][] = [];
  for (let idx = 1; idx < signature.length; idx++) {
    const group = signature.charCodeAt(idx) - 63;
    if (group < 0 || group > 63) {
      throw new Graph6Error(`character out of range at offset ${idx}`);
    }
    for (let t = 0; t < 6; t++) {
      if ((group >> (5 - t)) & 1) {
        const pos = (idx - 1) * 6 + t;
        if (pos >= bitCount) throw new Graph6Error("non-zero padding bits");
        edges.push(pairs[pos]);
      }
    }
  }
  return { n, edges };
}

export function degrees(g: DecodedGraph): number[] {
  const out = new Array<number>(g.n).fill(0);
  for (const [i, j] of g.edges) {
    out[i] += 1;
    out[j] += 1;
  }
  return out;
}

export function complementEdges(g: DecodedGraph): [number, number][] {
  const present = new Set(g.edges.map(([i, j]) => i * g.n + j));
  const missing: [number, number][] = [];
  for (let i = 0; i < g.n; i++) {
    for (let j = i + 1; j < g.n; j++) {
      if (!present.has(i * g.n + j)) missing.push([i, j]);
    }
  }
  return missing;
}
