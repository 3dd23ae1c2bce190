/** Side-by-side what-if panel: current ranking vs a hypothetical one. */

import type { RankingReport, WhatIfRequest } from "./api.js";
import { isOnScale } from "./scale.js";

export interface WhatIfHandle {
  element: HTMLElement;
  /** Build the request from the form; throws on out-of-scale edits. */
  collect(): WhatIfRequest;
  render(current: RankingReport | null, hypothetical: RankingReport): void;
  fieldError(message: string | null): void;
}

export function createWhatIfPanel(container: HTMLElement, criteria: string[], kappa: number): WhatIfHandle {
  const element = document.createElement("div");
  element.className = "whatif-panel";
  element.innerHTML = `
    <div class="whatif-form">
      <label>Row <select class="wi-row"></select></label>
      <label>Column <select class="wi-col"></select></label>
      <label>Judgment <input class="wi-value" type="number" step="1" value="0"></label>
      <label><input class="wi-efficiency" type="checkbox"> with efficiency</label>
      <button type="button" class="wi-run">Run what-if</button>
      <div class="field-error" hidden></div>
    </div>
    <div class="whatif-output" hidden>
      <div class="wi-current"><h4>Current</h4><div class="wi-list-holder"></div></div>
      <div class="wi-hypothetical"><h4>Hypothetical</h4><div class="wi-list-holder"></div></div>
    </div>`;
  container.appendChild(element);

  const rowSelect = element.querySelector(".wi-row") as HTMLSelectElement;
  const colSelect = element.querySelector(".wi-col") as HTMLSelectElement;
  criteria.forEach((criterion, index) => {
    for (const select of [rowSelect, colSelect]) {
      const option = document.createElement("option");
      option.value = String(index);
      option.textContent = criterion;
      select.appendChild(option);
    }
  });
  colSelect.selectedIndex = criteria.length > 1 ? 1 : 0;
  const errorBox = element.querySelector(".field-error") as HTMLElement;

  function renderList(holder: Element, report: RankingReport | null, other: RankingReport | null): void {
    holder.innerHTML = "";
    if (report === null) {
      holder.textContent = "(no ranking yet)";
      return;
    }
    const list = document.createElement("ol");
    list.className = "wi-list";
    for (const entry of report.results) {
      const item = document.createElement("li");
      item.dataset.model = entry.model;
      item.textContent = `#${entry.rank} ${entry.model} ${entry.score.toFixed(3)}`;
      if (report.best.includes(entry.model)) {
        item.classList.add("best");
      }
      const counterpart = other?.results.find((candidate) => candidate.model === entry.model);
      if (counterpart && (counterpart.rank !== entry.rank || counterpart.score !== entry.score)) {
        item.classList.add("changed");
      }
      list.appendChild(item);
    }
    holder.appendChild(list);
  }

  return {
    element,
    collect(): WhatIfRequest {
      const i = Number(rowSelect.value);
      const j = Number(colSelect.value);
      const value = Number((element.querySelector(".wi-value") as HTMLInputElement).value);
      if (i === j) {
        throw new Error("row and column must differ");
      }
      if (!isOnScale(value, kappa)) {
        throw new Error(`judgment must be an integer within ±${kappa}`);
      }
      return {
        judgment_overrides: [{ i, j, value }],
        score_overrides: [],
        efficiency: (element.querySelector(".wi-efficiency") as HTMLInputElement).checked,
      };
    },
    render(current: RankingReport | null, hypothetical: RankingReport): void {
      const output = element.querySelector(".whatif-output") as HTMLElement;
      output.hidden = false;
      renderList(element.querySelector(".wi-current .wi-list-holder") as Element, current, hypothetical);
      renderList(element.querySelector(".wi-hypothetical .wi-list-holder") as Element, hypothetical, current);
    },
    fieldError(message: string | null): void {
      errorBox.hidden = message === null;
      errorBox.textContent = message ?? "";
    },
  };
}
