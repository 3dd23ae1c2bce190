/** Application wiring: one live session, grid, gauge, bars, ranking, what-if. */

import { ApiError, ServiceClient } from "./api.js";
import type { RankingReport, WeightsSnapshot } from "./api.js";
import { parseScoresCsv, parseTimingsCsv } from "./csv.js";
import { createJudgmentGrid } from "./grid.js";
import type { GridHandle } from "./grid.js";
import { MatrixGridState, RevisionTracker } from "./state.js";
import { createGauge, createRankingView, createWeightBars } from "./widgets.js";
import { createWhatIfPanel } from "./whatif.js";
import type { WhatIfHandle } from "./whatif.js";

export const CRITERIA_PRESETS: Record<string, string[]> = {
  performance: ["accuracy", "precision", "recall", "f1", "specificity", "mcc", "kappa"],
  "performance+efficiency": [
    "accuracy", "precision", "recall", "f1", "specificity", "mcc", "kappa", "efficiency",
  ],
};

export interface AppHandle {
  element: HTMLElement;
  /** Settles when every in-flight request chain has finished. */
  whenIdle(): Promise<void>;
  readonly sessionId: string | null;
  readonly revision: number;
  lastRanking: RankingReport | null;
}

export function createApp(root: HTMLElement, client: ServiceClient): AppHandle {
  const element = document.createElement("div");
  element.className = "app";
  element.innerHTML = `
    <section class="setup">
      <label>Criteria

        <select class="preset">
          <option value="performance">7 performance criteria</option>
          <option value="performance+efficiency">8 criteria incl. efficiency</option>
        </select>
      </label>
      <label>Normal utility <input class="kappa" type="number" value="8" min="1"></label>
      <button type="button" class="start">Start session</button>
      <span class="session-label"></span>
      <span class="revision-label">revision 0</span>
    </section>
    <section class="elicitation" hidden>
      <div class="grid-holder"></div>
      <div class="gauge-holder"></div>
      <div class="bars-holder"></div>
    </section>
    <section class="attachments" hidden>
      <textarea class="scores-csv" placeholder="model,accuracy,..."></textarea>
      <button type="button" class="attach-scores">Attach scores</button>
      <textarea class="timings-csv" placeholder="model,seconds"></textarea>
      <button type="button" class="attach-timings">Attach timings</button>
      <div class="attach-error" hidden></div>
    </section>
    <section class="ranking" hidden>
      <label><input class="efficiency-toggle" type="checkbox"> include efficiency</label>
      <button type="button" class="refresh-ranking">Refresh ranking</button>
      <div class="ranking-holder"></div>
    </section>
    <section class="whatif-holder" hidden></section>`;
  root.appendChild(element);

  const pending: Promise<unknown>[] = [];
  function track<T>(promise: Promise<T>): Promise<T> {
    const settled = promise.catch(() => undefined);
    pending.push(settled);
    return promise;
  }

  let sessionId: string | null = null;
  let state: MatrixGridState | null = null;
  let grid: GridHandle | null = null;
  let whatIf: WhatIfHandle | null = null;
  let lastRanking: RankingReport | null = null;
  let revisionTracker = new RevisionTracker();

  const gauge = createGauge(element.querySelector(".gauge-holder") as HTMLElement);
  const bars = createWeightBars(element.querySelector(".bars-holder") as HTMLElement);
  const rankingView = createRankingView(element.querySelector(".ranking-holder") as HTMLElement);
  const revisionLabel = element.querySelector(".revision-label") as HTMLElement;
  const attachError = element.querySelector(".attach-error") as HTMLElement;

  function showRevision(): void {
    revisionLabel.textContent = `revision ${revisionTracker.displayed}`;
  }

  function applyWeights(snapshot: WeightsSnapshot): void {
    gauge.update(snapshot.ai, snapshot.verdict);
    bars.update(snapshot.weights);
    if (revisionTracker.observe(snapshot.revision)) {
      void refreshWeights();
    }
    showRevision();
  }

  async function refreshWeights(): Promise<void> {
    if (sessionId === null) {
      return;
    }
    applyWeights(await client.getWeights(sessionId));
  }

  async function startSession(): Promise<void> {
    const preset = (element.querySelector(".preset") as HTMLSelectElement).value;
    const criteria = CRITERIA_PRESETS[preset] ?? CRITERIA_PRESETS["performance"]!;
    const kappa = Number((element.querySelector(".kappa") as HTMLInputElement).value);
    const created = await client.createSession(criteria, kappa);
    sessionId = created.id;
    revisionTracker = new RevisionTracker();  // monotonicity is per session
    const snapshot = await client.getSession(sessionId);

    (element.querySelector(".session-label") as HTMLElement).textContent = snapshot.id;
    for (const selector of [".elicitation", ".attachments", ".ranking", ".whatif-holder"]) {
      (element.querySelector(selector) as HTMLElement).hidden = false;
    }

    state = new MatrixGridState(snapshot.criteria, snapshot.kappa);
    state.loadEntries(snapshot.entries);
    const gridHolder = element.querySelector(".grid-holder") as HTMLElement;
    gridHolder.innerHTML = "";
    grid = createJudgmentGrid(gridHolder, state, {
      onEdit: async (i, j, value) => {
        if (sessionId === null || state === null) {
          throw new Error("no active session");
        }
        const snapshot = await client.setJudgment(sessionId, i, j, value);
        state.markSaved(i, j, value);
        applyWeights(snapshot);
        // poll after the accepted write so all views reflect server state
        await refreshWeights();
      },
      track: (operation) => {
        void track(operation);
      },
    });

    const whatIfHolder = element.querySelector(".whatif-holder") as HTMLElement;
    whatIfHolder.innerHTML = "";
    whatIf = createWhatIfPanel(whatIfHolder, snapshot.criteria, snapshot.kappa);
    (whatIfHolder.querySelector(".wi-run") as HTMLButtonElement).addEventListener("click", () => {
      void track(runWhatIf());
    });

    lastRanking = null;
    (element.querySelector(".efficiency-toggle") as HTMLInputElement).checked = false;
    rankingView.update(null, "no ranking requested yet");
    gauge.update(snapshot.ai, snapshot.verdict);
    bars.update(snapshot.weights);
    revisionTracker.observe(snapshot.revision);
    showRevision();
  }

  async function attach(kind: "scores" | "timings"): Promise<void> {
    if (sessionId === null) {
      return;
    }
    attachError.hidden = true;
    try {
      const text = (element.querySelector(`.${kind}-csv`) as HTMLTextAreaElement).value;
      const response =
        kind === "scores"
          ? await client.attachScores(sessionId, parseScoresCsv(text))
          : await client.attachTimings(sessionId, parseTimingsCsv(text));
      revisionTracker.observe(response.revision);
      showRevision();
      await refreshWeights();
    } catch (failure) {
      attachError.hidden = false;
      attachError.textContent = failure instanceof Error ? failure.message : String(failure);
    }
  }

  async function refreshRanking(): Promise<void> {
    if (sessionId === null) {
      return;
    }
    const efficiency = (element.querySelector(".efficiency-toggle") as HTMLInputElement).checked;
    try {
      lastRanking = await client.getRanking(sessionId, efficiency);
      rankingView.update(lastRanking);
      if (revisionTracker.observe(lastRanking.revision)) {
        void track(refreshWeights());
      }
      showRevision();
    } catch (failure) {
      if (failure instanceof ApiError) {
        rankingView.update(null, `${failure.code}: ${failure.message}`);
      } else {
        throw failure;
      }
    }
  }

  async function runWhatIf(): Promise<void> {
    if (sessionId === null || whatIf === null) {
      return;
    }
    whatIf.fieldError(null);
    let request;
    try {
      request = whatIf.collect();
    } catch (failure) {
      whatIf.fieldError(failure instanceof Error ? failure.message : String(failure));
      return;
    }
    try {
      const hypothetical = await client.whatIf(sessionId, request);
      whatIf.render(lastRanking, hypothetical);
    } catch (failure) {
      if (failure instanceof ApiError) {
        whatIf.fieldError(`${failure.code}: ${failure.message}`);
      } else {
        throw failure;
      }
    }
  }

  (element.querySelector(".start") as HTMLButtonElement).addEventListener("click", () => {
    void track(startSession());
  });
  (element.querySelector(".attach-scores") as HTMLButtonElement).addEventListener("click", () => {
    void track(attach("scores"));
  });
  (element.querySelector(".attach-timings") as HTMLButtonElement).addEventListener("click", () => {
    void track(attach("timings"));
  });
  (element.querySelector(".refresh-ranking") as HTMLButtonElement).addEventListener("click", () => {
    void track(refreshRanking());
  });
  (element.querySelector(".efficiency-toggle") as HTMLInputElement).addEventListener("change", () => {
    void track(refreshRanking());
  });

  return {
    element,
    async whenIdle(): Promise<void> {
      while (pending.length > 0) {
        const batch = pending.splice(0, pending.length);
        await Promise.all(batch);
      }
    },
    get sessionId(): string | null {
      return sessionId;
    },
    get revision(): number {
      return revisionTracker.displayed;
    },
    get lastRanking(): RankingReport | null {
      return lastRanking;
    },
  };
}
