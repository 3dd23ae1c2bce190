"""Multiclass confusion matrices and the evaluation criteria computed from them.

The seven classification criteria are accuracy, macro precision, macro
recall, macro F1, macro specificity, the multiclass Matthews correlation
coefficient, and Cohen's kappa. Efficiency, the eighth criterion used by the
decision stage, is derived separately from running times via reverse min-max
normalization.

Conventions for degenerate inputs (documented rather than raised):
per-class values with a zero denominator contribute 0 to the macro mean;
MCC with a zero denominator is 0; kappa with zero chance disagreement is
1 for a perfect matrix and 0 otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

#: Column order of the seven classification criteria in reports and matrices.
CRITERIA_ORDER = ("accuracy", "precision", "recall", "f1", "specificity", "mcc", "kappa")
EFFICIENCY = "efficiency"


@dataclass(frozen=True)
class ConfusionMatrix:
    """Counts[r][c] = samples of true class r predicted as class c."""

    classes: tuple[str, ...]
    counts: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(self.classes))
        counts = np.array(self.counts, dtype=np.int64)
        if counts.ndim != 2 or counts.shape[0] != counts.shape[1]:
            raise ValueError(f"counts must be square, got shape {counts.shape}")
        if counts.shape[0] != len(self.classes):
            raise ValueError(f"{len(self.classes)} classes but counts are {counts.shape[0]}x{counts.shape[1]}")
        if np.any(counts < 0):
            raise ValueError("counts must be nonnegative")
        counts.setflags(write=False)
        object.__setattr__(self, "counts", counts)

    @property
    def total(self) -> int:
        return int(self.counts.sum())


@dataclass(frozen=True)
class OneVsRestCounts:
    tp: int
    fp: int
    fn: int
    tn: int


@dataclass(frozen=True)
class CriterionScores:
    accuracy: float
    precision: float
    recall: float
    f1: float
    specificity: float
    mcc: float
    kappa: float

    def as_dict(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in CRITERIA_ORDER}


def confusion_from_labels(
    true_labels: Sequence[str],
    predicted_labels: Sequence[str],
    classes: Sequence[str],
) -> ConfusionMatrix:
    """Tally (true, predicted) label pairs into a confusion matrix."""
    if len(true_labels) != len(predicted_labels):
        raise ValueError(
            f"{len(true_labels)} true labels but {len(predicted_labels)} predictions"
        )
    if not true_labels:
        raise ValueError("at least one labeled sample is required")
    index = {label: k for k, label in enumerate(classes)}
    if len(index) != len(classes):
        raise ValueError("class labels must be unique")
    counts = np.zeros((len(classes), len(classes)), dtype=np.int64)
    for t, p in zip(true_labels, predicted_labels):
        if t not in index:
            raise ValueError(f"unknown true label {t!r}")
        if p not in index:
            raise ValueError(f"unknown predicted label {p!r}")
        counts[index[t], index[p]] += 1
    return ConfusionMatrix(tuple(classes), counts)


def one_vs_rest(cm: ConfusionMatrix, class_index: int) -> OneVsRestCounts:
    """Reduce the matrix to binary counts for one reference class."""
    if not 0 <= class_index < len(cm.classes):
        raise IndexError(f"class index {class_index} out of range for {len(cm.classes)} classes")
    counts = cm.counts
    tp = int(counts[class_index, class_index])
    fp = int(counts[:, class_index].sum()) - tp
    fn = int(counts[class_index, :].sum()) - tp
    tn = cm.total - tp - fp - fn
    return OneVsRestCounts(tp=tp, fp=fp, fn=fn, tn=tn)


def _ratio(num: int, den: int) -> float:
    # Zero denominator contributes 0 to the macro mean.
    return num / den if den else 0.0


def criterion_scores(cm: ConfusionMatrix) -> CriterionScores:
    """Compute the seven criteria; macro averaging over one-vs-rest classes."""
    total = cm.total
    if total < 1:
        raise ValueError("confusion matrix has no samples")

    precisions, recalls, f1s, specificities = [], [], [], []
    for k in range(len(cm.classes)):
        ovr = one_vs_rest(cm, k)
        p = _ratio(ovr.tp, ovr.tp + ovr.fp)
        r = _ratio(ovr.tp, ovr.tp + ovr.fn)
        precisions.append(p)
        recalls.append(r)
        f1s.append(2 * p * r / (p + r) if p + r else 0.0)
        specificities.append(_ratio(ovr.tn, ovr.tn + ovr.fp))

    n_classes = len(cm.classes)
    counts = cm.counts
    trace = int(np.trace(counts))
    row_sums = [int(x) for x in counts.sum(axis=1)]
    col_sums = [int(x) for x in counts.sum(axis=0)]

    # Exact integer arithmetic keeps the degenerate-denominator tests crisp.
    chance = sum(r * c for r, c in zip(row_sums, col_sums))
    kappa_num = trace * total - chance
    kappa_den = total * total - chance
    if kappa_den == 0:
        kappa = 1.0 if trace == total else 0.0
    else:
        kappa = kappa_num / kappa_den

    cov = trace * total - sum(p * t for p, t in zip(col_sums, row_sums))
    var_pred = total * total - sum(p * p for p in col_sums)
    var_true = total * total - sum(t * t for t in row_sums)
    if var_pred == 0 or var_true == 0:
        mcc = 0.0
    else:
        # exact integer square roots keep mcc at exactly +/- 1 for perfect
        # (anti)diagonal matrices
        product = var_pred * var_true
        root = math.isqrt(product)
        mcc = cov / root if root * root == product else cov / math.sqrt(product)

    return CriterionScores(
        accuracy=trace / total,
        precision=sum(precisions) / n_classes,
        recall=sum(recalls) / n_classes,
        f1=sum(f1s) / n_classes,
        specificity=sum(specificities) / n_classes,
        mcc=mcc,
        kappa=kappa,
    )


def efficiency(timings: Mapping[str, float]) -> dict[str, float]:
    """Reverse min-max normalization of running times.

    The fastest model scores 1 and the slowest 0; with a single model or
    all-equal times every model scores 1 (they all tie as fastest).
    """
    if not timings:
        raise ValueError("at least one timing entry is required")
    for name, seconds in timings.items():
        if not isinstance(seconds, (int, float)) or not math.isfinite(seconds) or seconds <= 0:
            raise ValueError(f"running time for {name!r} must be a positive finite number, got {seconds}")
    fastest = min(timings.values())
    slowest = max(timings.values())
    if slowest == fastest:
        return {name: 1.0 for name in timings}
    spread = slowest - fastest
    return {name: (slowest - t) / spread for name, t in timings.items()}
