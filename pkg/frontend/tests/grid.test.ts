import { describe, expect, it } from "vitest";

import { createJudgmentGrid } from "../src/grid.js";
import { MatrixGridState } from "../src/state.js";

function setup(onEdit: (i: number, j: number, value: number) => Promise<void>) {
  const state = new MatrixGridState(["a", "b", "c"], 8);
  const pending: Promise<void>[] = [];
  const grid = createJudgmentGrid(document.createElement("div"), state, {
    onEdit: async (i, j, value) => {
      await onEdit(i, j, value);
      state.markSaved(i, j, value);
    },
    track: (operation) => {
      pending.push(operation);
    },
  });
  return { state, grid, flush: () => Promise.all(pending) };
}

async function change(grid: ReturnType<typeof setup>["grid"], i: number, j: number, value: number) {
  const select = grid.select(i, j);
  select.value = String(value);
  select.dispatchEvent(new Event("change"));
}

describe("judgment grid", () => {
  it("renders selects only on the upper triangle", () => {
    const { grid } = setup(async () => {});
    expect(() => grid.select(0, 1)).not.toThrow();
    expect(() => grid.select(1, 0)).toThrow();
    expect(() => grid.select(1, 1)).toThrow();
    const table = grid.element;
    expect(table.querySelector('td[data-cell="1,1"]')?.textContent).toBe("0");
  });

  it("updates the mirrored cell after an accepted write", async () => {
    const { grid, flush } = setup(async () => {});
    await change(grid, 0, 2, -6);
    await flush();
    const mirror = grid.element.querySelector('td[data-cell="2,0"]') as HTMLElement;
    expect(mirror.textContent).toBe("6");
    const cell = grid.element.querySelector('td[data-cell="0,2"]') as HTMLElement;
    expect(cell.dataset.status).toBe("saved");
  });

  it("reverts the cell and shows the message on a rejected write", async () => {
    const { grid, flush } = setup(async () => {
      throw new Error("value_out_of_range: |value| must be at most kappa = 8");
    });
    await change(grid, 0, 1, 7);
    await flush();
    const select = grid.select(0, 1);
    expect(select.value).toBe("0"); // reverted to the previous server value
    const cell = grid.element.querySelector('td[data-cell="0,1"]') as HTMLElement;
    expect(cell.dataset.status).toBe("error");
    const error = cell.querySelector(".cell-error") as HTMLElement;
    expect(error.hidden).toBe(false);
    expect(error.textContent).toContain("value_out_of_range");
    const mirror = grid.element.querySelector('td[data-cell="1,0"]') as HTMLElement;
    expect(mirror.textContent).toBe("0");
  });
});
