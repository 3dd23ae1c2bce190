/** Small strict CSV reader for the score and timing tables the UI attaches. */

import type { DecisionMatrixPayload } from "./api.js";

export function parseCsv(text: string): string[][] {
  const rows: string[][] = [];
  let row: string[] = [];
  let field = "";
  let quoted = false;
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (quoted) {
      if (ch === '"') {
        if (text[i + 1] === '"') {
          field += '"';
          i += 1;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch === '"') {
      quoted = true;
    } else if (ch === ",") {
      row.push(field);
      field = "";
    } else if (ch === "\n" || ch === "\r") {
      if (ch === "\r" && text[i + 1] === "\n") {
        i += 1;
      }
      row.push(field);
      rows.push(row);
      row = [];
      field = "";
    } else {
      field += ch;
    }
    i += 1;
  }
  if (field !== "" || row.length > 0) {
    row.push(field);
    rows.push(row);
  }
  return rows.filter((r) => r.length > 1 || (r.length === 1 && r[0] !== ""));
}

/** Header `model,<criteria...>` with one numeric row per model. */
export function parseScoresCsv(text: string): DecisionMatrixPayload {
  const rows = parseCsv(text);
  const header = rows[0];
  if (!header || header[0] !== "model" || header.length < 2) {
    throw new Error("scores CSV must start with a 'model,<criteria...>' header");
  }
  const criteria = header.slice(1);
  const models: string[] = [];
  const scores: number[][] = [];
  for (const row of rows.slice(1)) {
    if (row.length !== header.length) {
      throw new Error(`row for ${row[0] ?? "?"} has ${row.length} fields, expected ${header.length}`);
    }
    models.push(row[0] as string);
    scores.push(row.slice(1).map((cell) => parseNumber(cell, row[0] as string)));
  }
  if (models.length === 0) {
    throw new Error("scores CSV has no model rows");
  }
  return { models, criteria, scores };
}

/** Header `model,seconds` with one positive number per model. */
export function parseTimingsCsv(text: string): Record<string, number> {
  const rows = parseCsv(text);
  const header = rows[0];
  if (!header || header.join(",") !== "model,seconds") {
    throw new Error("timings CSV must start with a 'model,seconds' header");
  }
  const timings: Record<string, number> = {};
  for (const row of rows.slice(1)) {
    if (row.length !== 2) {
      throw new Error(`malformed timing row: ${row.join(",")}`);
    }
    timings[row[0] as string] = parseNumber(row[1] as string, row[0] as string);
  }
  return timings;
}

function parseNumber(cell: string, context: string): number {
  const value = Number(cell);
  if (!Number.isFinite(value)) {
    throw new Error(`${context}: '${cell}' is not a number`);
  }
  return value;
}
