"""Weighted decision matrices, comprehensive scores, and competition ranking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .metrics import CRITERIA_ORDER, EFFICIENCY, CriterionScores, efficiency
from .pairwise import AccordanceReport, WeightVector

#: Scores are compared at this many decimals when detecting rank ties, the
#: same precision used when rendering them.
REPORT_PRECISION = 3


class CriteriaMismatchError(ValueError):
    """Decision-matrix criteria do not line up with the weight vector's."""

    def __init__(self, missing: Sequence[str], unexpected: Sequence[str]):
        self.missing = tuple(missing)
        self.unexpected = tuple(unexpected)
        parts = []
        if missing:
            parts.append(f"missing from matrix: {', '.join(missing)}")
        if unexpected:
            parts.append(f"not in weights: {', '.join(unexpected)}")
        super().__init__("criteria mismatch — " + "; ".join(parts))


@dataclass(frozen=True)
class DecisionMatrix:
    """m models scored against n named criteria."""

    models: tuple[str, ...]
    criteria: tuple[str, ...]
    scores: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "models", tuple(self.models))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        scores = np.array(self.scores, dtype=float)
        if scores.shape != (len(self.models), len(self.criteria)):
            raise ValueError(
                f"scores shape {scores.shape} does not match "
                f"{len(self.models)} models x {len(self.criteria)} criteria"
            )
        if len(set(self.models)) != len(self.models):
            raise ValueError("duplicate model names")
        if len(set(self.criteria)) != len(self.criteria):
            raise ValueError("duplicate criteria names")
        scores.setflags(write=False)
        object.__setattr__(self, "scores", scores)


@dataclass(frozen=True)
class RankedModel:
    model: str
    score: float
    rank: int


@dataclass(frozen=True)
class Ranking:
    """Models ordered by nonincreasing score with competition ranks.

    Tied scores share the minimum rank; the next distinct score's rank is
    one plus the number of strictly better models. ``best`` lists every
    model at rank 1.
    """

    entries: tuple[RankedModel, ...]
    best: tuple[str, ...]


def weighted_scores(matrix: DecisionMatrix, weights: WeightVector) -> np.ndarray:
    """Comprehensive score per model: the weight-aligned row dot product.

    Criteria are aligned by name (the matrix columns are reordered to the
    weight vector's order); a name mismatch raises with the differing names.
    """
    missing = [c for c in weights.criteria if c not in matrix.criteria]
    unexpected = [c for c in matrix.criteria if c not in weights.criteria]
    if missing or unexpected:
        raise CriteriaMismatchError(missing, unexpected)
    order = [matrix.criteria.index(c) for c in weights.criteria]
    return matrix.scores[:, order] @ np.array(weights.weights)


def rank(
    scores: Sequence[tuple[str, float]],
    precision: int | None = REPORT_PRECISION,
) -> Ranking:
    """Competition-rank (model, score) pairs, comparing at ``precision`` decimals.

    ``precision=None`` compares raw values (used for weight ranks, where no
    report rounding applies).
    """
    if not scores:
        raise ValueError("at least one model is required")
    rounded = [round(g, precision) if precision is not None else g for _, g in scores]
    order = sorted(
        range(len(scores)),
        key=lambda k: (-rounded[k], -scores[k][1], k),
    )
    entries = []
    for k in order:
        model, raw = scores[k]
        position = 1 + sum(1 for r in rounded if r > rounded[k])
        entries.append(RankedModel(model=model, score=raw, rank=position))
    best = tuple(e.model for e in entries if e.rank == 1)
    return Ranking(entries=tuple(entries), best=best)


def assemble_matrix(
    records: Mapping[str, CriterionScores] | Iterable[tuple[str, CriterionScores]],
    timings: Mapping[str, float] | None = None,
    include_efficiency: bool = False,
) -> DecisionMatrix:
    """Stack per-model criterion scores into a decision matrix.

    Columns follow :data:`~cpccms.metrics.CRITERIA_ORDER`, with an
    efficiency column appended when requested; timings must then cover
    exactly the record models.
    """
    pairs = list(records.items()) if isinstance(records, Mapping) else list(records)
    if not pairs:
        raise ValueError("at least one model record is required")
    models = [name for name, _ in pairs]
    if len(set(models)) != len(models):
        raise ValueError("duplicate model names")

    criteria = list(CRITERIA_ORDER)
    rows = [[getattr(scores, c) for c in CRITERIA_ORDER] for _, scores in pairs]

    if include_efficiency:
        if timings is None:
            raise ValueError("timings are required when the efficiency column is included")
        missing = [m for m in models if m not in timings]
        extra = [m for m in timings if m not in set(models)]
        if missing:
            raise ValueError(f"missing timing for: {', '.join(missing)}")
        if extra:
            raise ValueError(f"timings for unknown models: {', '.join(extra)}")
        eff = efficiency({m: timings[m] for m in models})
        criteria.append(EFFICIENCY)
        for row, model in zip(rows, models):
            row.append(eff[model])

    return DecisionMatrix(models=tuple(models), criteria=tuple(criteria), scores=np.array(rows))


def with_efficiency_column(matrix: DecisionMatrix, timings: Mapping[str, float]) -> DecisionMatrix:
    """Append an efficiency column computed from running times.

    The timing map must cover exactly the matrix models.
    """
    if EFFICIENCY in matrix.criteria:
        raise ValueError("matrix already has an efficiency column")
    missing = [m for m in matrix.models if m not in timings]
    extra = [m for m in timings if m not in set(matrix.models)]
    if missing:
        raise ValueError(f"missing timing for: {', '.join(missing)}")
    if extra:
        raise ValueError(f"timings for unknown models: {', '.join(extra)}")
    eff = efficiency({m: timings[m] for m in matrix.models})
    column = np.array([[eff[m]] for m in matrix.models])
    return DecisionMatrix(
        models=matrix.models,
        criteria=matrix.criteria + (EFFICIENCY,),
        scores=np.hstack([matrix.scores, column]),
    )


def rank_models(
    matrix: DecisionMatrix,
    weights: WeightVector,
    precision: int = REPORT_PRECISION,
) -> Ranking:
    """Score the matrix against the weights and competition-rank the models."""
    scores = weighted_scores(matrix, weights)
    return rank(list(zip(matrix.models, scores.tolist())), precision=precision)


def ranking_report(
    weights: WeightVector,
    accordance: AccordanceReport,
    ranking: Ranking,
    precision: int = REPORT_PRECISION,
) -> dict:
    """JSON-ready ranking report.

    Weights and the accordance index keep full precision (downstream
    consumers re-rank from them); per-model scores are rendered at the tie
    precision so the report shows exactly the values the ranks compare.
    """
    return {
        "weights": weights.as_dict(),
        "accordance_index": accordance.ai,
        "verdict": accordance.verdict.value,
        "precision": precision,
        "results": [
            {"model": e.model, "score": round(e.score, precision), "rank": e.rank}
            for e in ranking.entries
        ],
        "best": list(ranking.best),
    }
