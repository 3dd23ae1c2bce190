"""File formats shared by the CLI and service: POM JSON, CSV tables."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .decision import DecisionMatrix
from .metrics import CRITERIA_ORDER, EFFICIENCY
from .pairwise import (
    AccordanceReport,
    AccordanceVerdict,
    MatrixStructureError,
    PairwiseOppositeMatrix,
    WeightVector,
    require_valid,
)

PREDICTIONS_HEADER = ["true_label", "predicted_label"]
TIMINGS_HEADER = ["model", "seconds"]


def load_pom(path: str | Path) -> PairwiseOppositeMatrix:
    """Read and fully validate a judgment-matrix JSON file.

    Schema: ``{"kappa": 8, "criteria": [...], "entries": [[...], ...]}``
    with row-major entries. Invariant violations are rejected with
    cell-level diagnostics.
    """
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    for key in ("criteria", "entries"):
        if key not in payload:
            raise MatrixStructureError(f"{path}: missing required key {key!r}")
    pom = PairwiseOppositeMatrix(
        criteria=tuple(payload["criteria"]),
        entries=payload["entries"],
        kappa=payload.get("kappa", 8),
    )
    require_valid(pom)
    return pom


def save_pom(pom: PairwiseOppositeMatrix, path: str | Path) -> None:
    payload = {
        "kappa": pom.kappa,
        "criteria": list(pom.criteria),
        "entries": pom.entries.tolist(),
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def load_predictions_csv(path: str | Path) -> tuple[list[str], list[str]]:
    """Read ``true_label,predicted_label`` rows."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != PREDICTIONS_HEADER:
            raise ValueError(f"{path}: expected header {','.join(PREDICTIONS_HEADER)}, got {header}")
        true_labels, predicted = [], []
        for row in reader:
            if len(row) != 2:
                raise ValueError(f"{path}: malformed row {row}")
            true_labels.append(row[0])
            predicted.append(row[1])
    return true_labels, predicted


def write_predictions_csv(path: str | Path, true_labels, predicted_labels) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(PREDICTIONS_HEADER)
        writer.writerows(zip(true_labels, predicted_labels))


def load_timings_csv(path: str | Path) -> dict[str, float]:
    """Read ``model,seconds`` rows into a timing map."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != TIMINGS_HEADER:
            raise ValueError(f"{path}: expected header {','.join(TIMINGS_HEADER)}, got {header}")
        timings: dict[str, float] = {}
        for row in reader:
            if len(row) != 2:
                raise ValueError(f"{path}: malformed row {row}")
            model, seconds = row
            if model in timings:
                raise ValueError(f"{path}: duplicate model {model!r}")
            timings[model] = float(seconds)
    return timings


def write_timings_csv(path: str | Path, timings: dict[str, float]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(TIMINGS_HEADER)
        for model, seconds in timings.items():
            writer.writerow([model, f"{seconds:.6f}"])


def load_decision_matrix_csv(path: str | Path) -> DecisionMatrix:
    """Read a model-by-criteria score table.

    The header must be ``model`` followed by the canonical criteria order,
    optionally ending with ``efficiency``.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None:
            raise ValueError(f"{path}: empty file")
        allowed = (
            ["model", *CRITERIA_ORDER],
            ["model", *CRITERIA_ORDER, EFFICIENCY],
        )
        if header not in allowed:
            raise ValueError(
                f"{path}: expected header {','.join(allowed[0])}[,{EFFICIENCY}], got {header}"
            )
        criteria = tuple(header[1:])
        models, rows = [], []
        for row in reader:
            if len(row) != len(header):
                raise ValueError(f"{path}: malformed row {row}")
            models.append(row[0])
            rows.append([float(x) for x in row[1:]])
    if not models:
        raise ValueError(f"{path}: no model rows")
    return DecisionMatrix(models=tuple(models), criteria=criteria, scores=np.array(rows))


def load_weights_json(path: str | Path) -> tuple[WeightVector, AccordanceReport]:
    """Read a weights report produced by ``cpccms weights``."""
    with open(path, encoding="utf-8") as handle:
        payload = json.load(handle)
    for key in ("criteria", "weights", "accordance_index", "verdict"):
        if key not in payload:
            raise ValueError(f"{path}: missing required key {key!r}")
    criteria = tuple(payload["criteria"])
    weight_map = payload["weights"]
    missing = [c for c in criteria if c not in weight_map]
    if missing:
        raise ValueError(f"{path}: weights missing for {', '.join(missing)}")
    weights = WeightVector(criteria=criteria, weights=tuple(weight_map[c] for c in criteria))
    report = AccordanceReport(
        ai=float(payload["accordance_index"]),
        verdict=AccordanceVerdict(payload["verdict"]),
    )
    return weights, report
