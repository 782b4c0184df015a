import { describe, expect, it } from "vitest";

import graphsAt22 from "./fixtures/graphs_at_2_2_order7.json";
import { GraphEntryWire } from "../src/types.js";
import { LazyList } from "../src/lazyload.js";

// The (2,2) point of the order-7 chromatic/clique view: 87 graphs, captured
// verbatim from POST /api/graphs.
const entries = graphsAt22 as unknown as GraphEntryWire[];

describe("lazy graph list", () => {
  it("walks the 87 graphs at (2,2) page by page until all are listed", () => {
    expect(entries.length).toBe(87);
    const list = new LazyList(entries.length, 24);
    const seen: number[] = [list.visible()];
    while (list.grow()) seen.push(list.visible());
    expect(seen).toEqual([24, 48, 72, 87]);
    expect(list.exhausted()).toBe(true);
    expect(list.grow()).toBe(false);
  });

  it("reports the hidden remainder until the window reaches the end", () => {
    const list = new LazyList(87, 24);
    expect(list.truncationNotice()).toBe("showing 24 of 87 graphs, scroll for more");
    list.grow();
    expect(list.truncationNotice()).toBe("showing 48 of 87 graphs, scroll for more");
    list.grow();
    list.grow();
    expect(list.truncationNotice()).toBeNull();
  });

  it("handles selections smaller than one page", () => {
    const list = new LazyList(3, 24);
    expect(list.visible()).toBe(3);
    expect(list.exhausted()).toBe(true);
    expect(list.truncationNotice()).toBeNull();
  });

  it("handles an empty selection", () => {
    const list = new LazyList(0);
    expect(list.visible()).toBe(0);
    expect(list.exhausted()).toBe(true);
  });

  it("rejects nonsense windows", () => {
    expect(() => new LazyList(-1)).toThrow();
    expect(() => new LazyList(10, 0)).toThrow();
  });
});
