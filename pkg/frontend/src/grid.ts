/** Editable judgment grid: selects on the upper triangle, mirrors below. */

import { scalePoints } from "./scale.js";
import type { MatrixGridState } from "./state.js";

export interface GridCallbacks {
  /** Resolves when the service accepted the write; rejects otherwise. */
  onEdit(i: number, j: number, value: number): Promise<void>;
  /** Receives the whole edit chain (including DOM updates) for idle tracking. */
  track?(operation: Promise<void>): void;
}

export interface GridHandle {
  element: HTMLTableElement;
  refresh(): void;
  select(i: number, j: number): HTMLSelectElement;
}

export function createJudgmentGrid(
  container: HTMLElement,
  state: MatrixGridState,
  callbacks: GridCallbacks,
): GridHandle {
  const table = document.createElement("table");
  table.className = "judgment-grid";
  const points = scalePoints(state.kappa);

  const header = document.createElement("tr");
  header.appendChild(document.createElement("th"));
  for (const criterion of state.criteria) {
    const cell = document.createElement("th");
    cell.textContent = criterion;
    header.appendChild(cell);
  }
  table.appendChild(header);

  const mirrors = new Map<string, HTMLElement>();
  const selects = new Map<string, HTMLSelectElement>();
  const errors = new Map<string, HTMLElement>();

  state.criteria.forEach((rowName, i) => {
    const row = document.createElement("tr");
    const rowHeader = document.createElement("th");
    rowHeader.textContent = rowName;
    row.appendChild(rowHeader);
    state.criteria.forEach((_, j) => {
      const cell = document.createElement("td");
      cell.dataset.cell = `${i},${j}`;
      if (state.isDiagonal(i, j)) {
        cell.className = "diagonal";
        cell.textContent = "0";
      } else if (state.isUpper(i, j)) {
        const select = document.createElement("select");
        for (const point of points) {
          const option = document.createElement("option");
          option.value = String(point.value);
          option.textContent = `${point.value} — ${point.label}`;
          select.appendChild(option);
        }
        select.value = String(state.displayValue(i, j));
        const error = document.createElement("div");
        error.className = "cell-error";
        error.hidden = true;
        select.addEventListener("change", () => {
          const previous = state.displayValue(i, j);
          const value = Number(select.value);
          state.markDirty(i, j, value);
          cell.dataset.status = "dirty";
          const operation = callbacks
            .onEdit(i, j, value)
            .then(() => {
              error.hidden = true;
              cell.dataset.status = state.cellStatus(i, j);
              refreshCell(j, i);
            })
            .catch((failure: Error) => {
              state.markError(i, j, previous);
              select.value = String(previous);
              error.hidden = false;
              error.textContent = failure.message;
              cell.dataset.status = "error";
              refreshCell(j, i);
            });
          if (callbacks.track) {
            callbacks.track(operation);
          } else {
            void operation;
          }
        });
        cell.append(select, error);
        selects.set(`${i},${j}`, select);
        errors.set(`${i},${j}`, error);
      } else {
        cell.className = "mirror";
        cell.textContent = String(state.displayValue(i, j));
        mirrors.set(`${i},${j}`, cell);
      }
      row.appendChild(cell);
    });
    table.appendChild(row);
  });
  container.appendChild(table);

  function refreshCell(i: number, j: number): void {
    const mirror = mirrors.get(`${i},${j}`);
    if (mirror) {
      mirror.textContent = String(state.displayValue(i, j));
    }
  }

  function refresh(): void {
    state.criteria.forEach((_, i) => {
      state.criteria.forEach((_, j) => {
        if (state.isUpper(i, j)) {
          const select = selects.get(`${i},${j}`);
          if (select) {
            select.value = String(state.displayValue(i, j));
          }
        } else if (!state.isDiagonal(i, j)) {
          refreshCell(i, j);
        }
      });
    });
  }

  return {
    element: table,
    refresh,
    select(i: number, j: number): HTMLSelectElement {
      const select = selects.get(`${i},${j}`);
      if (!select) {
        throw new Error(`no editable cell at (${i}, ${j})`);
      }
      return select;
    },
  };
}
