import { describe, expect, it } from "vitest";

import type { RankingReport } from "../src/api.js";
import { createGauge, createRankingView, createWeightBars, formatAi, gaugeBand } from "../src/widgets.js";

describe("gauge bands", () => {
  it("maps consistency thresholds to colors", () => {
    expect(gaugeBand(0)).toBe("green");
    expect(gaugeBand(1e-9)).toBe("green");
    expect(gaugeBand(1e-8)).toBe("amber");
    expect(gaugeBand(0.0747)).toBe("amber");
    expect(gaugeBand(0.1)).toBe("amber");
    expect(gaugeBand(0.1000001)).toBe("red");
  });

  it("renders fully consistent values as plain zero", () => {
    expect(formatAi(0)).toBe("0");
    expect(formatAi(1e-12)).toBe("0");
    expect(formatAi(0.0747)).toBe("0.0747");
  });

  it("updates the DOM element", () => {
    const gauge = createGauge(document.createElement("div"));
    gauge.update(0.0747, "Acceptable");
    expect(gauge.element.dataset.band).toBe("amber");
    expect(gauge.element.textContent).toContain("0.0747");
    expect(gauge.element.textContent).toContain("Acceptable");
  });
});

describe("weight bars", () => {
  it("renders one labeled bar per criterion with relative widths", () => {
    const bars = createWeightBars(document.createElement("div"));
    bars.update({ mcc: 0.25, accuracy: 0.05 });
    const rows = bars.element.querySelectorAll(".weight-row");
    expect(rows).toHaveLength(2);
    const mccBar = bars.element.querySelector('[data-criterion="mcc"] .weight-bar') as HTMLElement;
    const accBar = bars.element.querySelector('[data-criterion="accuracy"] .weight-bar') as HTMLElement;
    expect(mccBar.style.width).toBe("100%");
    expect(accBar.style.width).toBe("20%");
    expect(bars.element.textContent).toContain("mcc 0.250");
  });
});

describe("ranking view", () => {
  const report: RankingReport = {
    weights: {},
    accordance_index: 0.07,
    verdict: "Acceptable",
    precision: 3,
    results: [
      { model: "first", score: 0.9, rank: 1 },
      { model: "other", score: 0.7, rank: 2 },
    ],
    best: ["first"],
    include_efficiency: false,
    revision: 4,
  };

  it("highlights the best model", () => {
    const view = createRankingView(document.createElement("div"));
    view.update(report);
    const best = view.element.querySelector("tr.best") as HTMLElement;
    expect(best.dataset.model).toBe("first");
    const banner = view.element.querySelector(".banner") as HTMLElement;
    expect(banner.hidden).toBe(true);
  });

  it("clears the table and shows a banner on failure", () => {
    const view = createRankingView(document.createElement("div"));
    view.update(report);
    view.update(null, "missing_timings: attach timings before ranking with efficiency");
    expect(view.element.querySelectorAll("tr")).toHaveLength(0);
    const banner = view.element.querySelector(".banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("missing_timings");
  });
});
