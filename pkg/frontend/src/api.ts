/**
 * Typed client for the session HTTP API.
 *
 * Every number the UI shows comes from these responses; the client never
 * derives weights, consistency, or scores itself. The transport is
 * injectable so component tests can replay recorded server exchanges.
 */

export interface WeightsSnapshot {
  criteria: string[];
  kappa: number;
  utilities: number[];
  weights: Record<string, number>;
  ai: number;
  verdict: string;
  revision: number;
}

export interface SessionSnapshot {
  id: string;
  criteria: string[];
  kappa: number;
  entries: number[][];
  scores: DecisionMatrixPayload | null;
  timings: Record<string, number> | null;
  revision: number;
  created: string;
  updated: string;
  ai: number;
  verdict: string;
  weights: Record<string, number>;
}

export interface DecisionMatrixPayload {
  models: string[];
  criteria: string[];
  scores: number[][];
}

export interface RankedEntry {
  model: string;
  score: number;
  rank: number;
}

export interface RankingReport {
  weights: Record<string, number>;
  accordance_index: number;
  verdict: string;
  precision: number;
  results: RankedEntry[];
  best: string[];
  include_efficiency: boolean;
  revision: number;
}

export interface JudgmentOverride {
  i: number;
  j: number;
  value: number;
}

export interface ScoreOverride {
  model: string;
  criterion: string;
  value: number;
}

export interface WhatIfRequest {
  judgment_overrides: JudgmentOverride[];
  score_overrides: ScoreOverride[];
  efficiency: boolean;
}

export interface ErrorBody {
  code: string;
  message: string;
  details?: unknown;
}

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly details: unknown;

  constructor(status: number, body: ErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
    this.details = body.details;
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

async function parseOrThrow<T>(response: Response): Promise<T> {
  const payload = await response.json();
  if (!response.ok) {
    const body = payload as Partial<ErrorBody>;
    throw new ApiError(response.status, {
      code: body.code ?? "unknown_error",
      message: body.message ?? `request failed with status ${response.status}`,
      details: body.details,
    });
  }
  return payload as T;
}

export class ServiceClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn ?? ((url, init) => globalThis.fetch(url, init));
  }

  private request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
    }
    return this.fetchFn(this.baseUrl + path, init).then((response) => parseOrThrow<T>(response));
  }

  createSession(criteria: string[], kappa: number): Promise<{ id: string }> {
    return this.request("POST", "/sessions", { criteria, kappa });
  }

  getSession(id: string): Promise<SessionSnapshot> {
    return this.request("GET", `/sessions/${id}`);
  }

  setJudgment(id: string, i: number, j: number, value: number): Promise<WeightsSnapshot> {
    return this.request("PUT", `/sessions/${id}/judgments/${i}/${j}`, { value });
  }

  attachScores(id: string, payload: DecisionMatrixPayload): Promise<{ revision: number }> {
    return this.request("PUT", `/sessions/${id}/scores`, payload);
  }

  attachTimings(id: string, timings: Record<string, number>): Promise<{ revision: number }> {
    return this.request("PUT", `/sessions/${id}/timings`, { timings });
  }

  getWeights(id: string): Promise<WeightsSnapshot> {
    return this.request("GET", `/sessions/${id}/weights`);
  }

  getRanking(id: string, efficiency: boolean): Promise<RankingReport> {
    return this.request("GET", `/sessions/${id}/ranking?efficiency=${efficiency}`);
  }

  whatIf(id: string, body: WhatIfRequest): Promise<RankingReport> {
    return this.request("POST", `/sessions/${id}/whatif`, body);
  }
}
