// Windowed rendering for the graph panel. The API returns every graph at the
// selected coordinates in one response; drawing hundreds of them at once
// would stall the page, so the list grows a page at a time as the user
// scrolls and reports how much is still hidden.

export const DEFAULT_PAGE_SIZE = 24;

export class LazyList {
  private shown: number;

  constructor(
    readonly total: number,
    readonly pageSize: number = DEFAULT_PAGE_SIZE,
  ) {
    if (total < 0 || pageSize < 1) {
      throw new Error(`bad lazy list: total ${total}, page ${pageSize}`);
    }
    this.shown = Math.min(pageSize, total);
  }

  visible(): number {
    return this.shown;
  }

  exhausted(): boolean {
    return this.shown >= this.total;
  }

  // Returns true when another page became visible.
  grow(): boolean {
    if (this.exhausted()) return false;
    this.shown = Math.min(this.shown + this.pageSize, this.total);
    return true;
  }

  truncationNotice(): string | null {
    if (this.exhausted()) return null;
    return `showing ${this.shown} of ${this.total} graphs, scroll for more`;
  }
}
