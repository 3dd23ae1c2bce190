/** Read-only display widgets: consistency gauge, weight bars, ranking table. */

import type { RankingReport } from "./api.js";

export type GaugeBand = "green" | "amber" | "red";

const CONSISTENT_TOLERANCE = 1e-9;
const REVISION_THRESHOLD = 0.1;

export function gaugeBand(ai: number): GaugeBand {
  if (ai <= CONSISTENT_TOLERANCE) {
    return "green";
  }
  return ai <= REVISION_THRESHOLD ? "amber" : "red";
}

/** Fully consistent values render as plain 0; others keep four decimals. */
export function formatAi(ai: number): string {
  return ai <= CONSISTENT_TOLERANCE ? "0" : ai.toFixed(4);
}

export interface GaugeHandle {
  update(ai: number, verdict: string): void;
  element: HTMLElement;
}

export function createGauge(container: HTMLElement): GaugeHandle {
  const element = document.createElement("div");
  element.className = "gauge";
  element.innerHTML =
    '<span class="gauge-label">Accordance</span> <span class="gauge-value"></span> <span class="gauge-verdict"></span>';
  container.appendChild(element);
  return {
    element,
    update(ai: number, verdict: string): void {
      element.dataset.band = gaugeBand(ai);
      (element.querySelector(".gauge-value") as HTMLElement).textContent = formatAi(ai);
      (element.querySelector(".gauge-verdict") as HTMLElement).textContent = verdict;
    },
  };
}

export interface BarsHandle {
  update(weights: Record<string, number>): void;
  element: HTMLElement;
}

export function createWeightBars(container: HTMLElement): BarsHandle {
  const element = document.createElement("div");
  element.className = "weight-bars";
  container.appendChild(element);
  return {
    element,
    update(weights: Record<string, number>): void {
      element.innerHTML = "";
      const top = Math.max(...Object.values(weights), 0);
      for (const [criterion, weight] of Object.entries(weights)) {
        const row = document.createElement("div");
        row.className = "weight-row";
        row.dataset.criterion = criterion;
        const bar = document.createElement("div");
        bar.className = "weight-bar";
        bar.style.width = top > 0 ? `${(100 * weight) / top}%` : "0%";
        const label = document.createElement("span");
        label.className = "weight-text";
        label.textContent = `${criterion} ${weight.toFixed(3)}`;
        row.append(bar, label);
        element.appendChild(row);
      }
    },
  };
}

export interface RankingViewHandle {
  /** Render a report, or clear the table and show a banner message. */
  update(report: RankingReport | null, banner?: string): void;
  element: HTMLElement;
}

export function createRankingView(container: HTMLElement): RankingViewHandle {
  const element = document.createElement("div");
  element.className = "ranking-view";
  element.innerHTML = '<div class="banner" hidden></div><table class="ranking-table"><tbody></tbody></table>';
  container.appendChild(element);
  const banner = element.querySelector(".banner") as HTMLElement;
  const tbody = element.querySelector("tbody") as HTMLElement;
  return {
    element,
    update(report: RankingReport | null, message?: string): void {
      tbody.innerHTML = "";
      if (report === null) {
        banner.hidden = false;
        banner.textContent = message ?? "ranking unavailable";
        return;
      }
      banner.hidden = true;
      banner.textContent = "";
      for (const entry of report.results) {
        const row = document.createElement("tr");
        row.dataset.model = entry.model;
        if (report.best.includes(entry.model)) {
          row.classList.add("best");
        }
        row.innerHTML = `<td>${entry.rank}</td><td>${entry.model}</td><td>${entry.score.toFixed(3)}</td>`;
        tbody.appendChild(row);
      }
    },
  };
}
