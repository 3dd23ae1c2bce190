/** Client-side view state: the judgment grid and the revision guard. */

export type CellStatus = "empty" | "dirty" | "saved" | "error";

function key(i: number, j: number): string {
  return `${i},${j}`;
}

/**
 * Upper-triangle judgment values with per-cell save status.
 *
 * Only upper cells are editable; the lower triangle always displays the
 * negation of its mirror and the diagonal is locked at 0. The state never
 * computes weights or consistency — those arrive from the service.
 */
export class MatrixGridState {
  readonly criteria: string[];
  readonly kappa: number;
  private readonly values = new Map<string, number>();
  private readonly statuses = new Map<string, CellStatus>();

  constructor(criteria: string[], kappa: number) {
    this.criteria = [...criteria];
    this.kappa = kappa;
  }

  get size(): number {
    return this.criteria.length;
  }

  isDiagonal(i: number, j: number): boolean {
    return i === j;
  }

  isUpper(i: number, j: number): boolean {
    return i < j;
  }

  /** Value rendered at (i, j): upper as stored, lower mirrored, diagonal 0. */
  displayValue(i: number, j: number): number {
    if (i === j) {
      return 0;
    }
    if (i < j) {
      return this.values.get(key(i, j)) ?? 0;
    }
    return -(this.values.get(key(j, i)) ?? 0);
  }

  cellStatus(i: number, j: number): CellStatus {
    if (!this.isUpper(i, j)) {
      return "empty";
    }
    return this.statuses.get(key(i, j)) ?? "empty";
  }

  private requireUpper(i: number, j: number): void {
    if (!this.isUpper(i, j)) {
      throw new Error(`cell (${i}, ${j}) is not editable`);
    }
  }

  markDirty(i: number, j: number, value: number): void {
    this.requireUpper(i, j);
    this.values.set(key(i, j), value);
    this.statuses.set(key(i, j), "dirty");
  }

  markSaved(i: number, j: number, value: number): void {
    this.requireUpper(i, j);
    this.values.set(key(i, j), value);
    this.statuses.set(key(i, j), "saved");
  }

  /** Rejected write: restore the given server value and flag the cell. */
  markError(i: number, j: number, revertTo: number): void {
    this.requireUpper(i, j);
    this.values.set(key(i, j), revertTo);
    this.statuses.set(key(i, j), "error");
  }

  loadEntries(entries: number[][]): void {
    this.values.clear();
    this.statuses.clear();
    for (let i = 0; i < this.size; i += 1) {
      for (let j = i + 1; j < this.size; j += 1) {
        const value = entries[i]?.[j] ?? 0;
        if (value !== 0) {
          this.values.set(key(i, j), value);
          this.statuses.set(key(i, j), "saved");
        }
      }
    }
  }
}

/**
 * Monotone revision display. A response carrying an older revision than the
 * one already shown signals a stale read: the caller should refetch, and the
 * displayed number never moves backwards.
 */
export class RevisionTracker {
  private revision = 0;

  get displayed(): number {
    return this.revision;
  }

  /** Returns true when the observed revision is stale (refetch needed). */
  observe(revision: number): boolean {
    if (revision < this.revision) {
      return true;
    }
    this.revision = revision;
    return false;
  }
}
