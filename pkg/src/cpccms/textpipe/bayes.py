"""Bernoulli naive Bayes over binarized term features."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

PRIOR_MODES = ("empirical", "balanced")


@dataclass(frozen=True)
class NbModel:
    """Trained classifier state.

    ``feature_log_prob[c][i]`` is log P(term i present | class c) under
    additive smoothing; every smoothed probability lies strictly inside
    (0, 1), so both it and its complement have finite logs.
    """

    classes: tuple[str, ...]
    vocabulary: tuple[str, ...]
    log_priors: np.ndarray
    feature_log_prob: np.ndarray
    feature_log_absent: np.ndarray
    binarize_threshold: float = 0.0
    alpha: float = 0.1


@dataclass(frozen=True)
class NbPrediction:
    label: str
    log_scores: dict[str, float]


def binarize(features: Mapping[str, float] | Iterable[str], threshold: float = 0.0) -> set[str]:
    """Terms considered present: weight strictly above the threshold."""
    if isinstance(features, Mapping):
        return {term for term, weight in features.items() if weight > threshold}
    return set(features)


def nb_train(
    documents: Sequence[Mapping[str, float] | Iterable[str]],
    labels: Sequence[str],
    alpha: float = 0.1,
    class_prior_mode: str = "empirical",
    binarize_threshold: float = 0.0,
    vocabulary: Sequence[str] | None = None,
) -> NbModel:
    """Fit Bernoulli parameters with additive smoothing.

    P(term present | class) = (class docs containing term + alpha) /
    (class doc count + 2 alpha). Priors are empirical class frequencies or
    uniform when ``class_prior_mode`` is "balanced".
    """
    if alpha <= 0:
        raise ValueError(f"smoothing alpha must be positive, got {alpha}")
    if class_prior_mode not in PRIOR_MODES:
        raise ValueError(f"class_prior_mode must be one of {PRIOR_MODES}, got {class_prior_mode!r}")
    if len(documents) != len(labels):
        raise ValueError(f"{len(documents)} documents but {len(labels)} labels")
    if not documents:
        raise ValueError("cannot train on an empty corpus")

    present_sets = [binarize(doc, binarize_threshold) for doc in documents]
    classes = tuple(sorted(set(labels)))
    if vocabulary is None:
        vocabulary = tuple(sorted(set().union(*present_sets)))
    else:
        vocabulary = tuple(vocabulary)
    term_index = {t: i for i, t in enumerate(vocabulary)}

    n_classes, n_terms = len(classes), len(vocabulary)
    doc_counts = np.zeros(n_classes)
    term_counts = np.zeros((n_classes, n_terms))
    class_index = {c: k for k, c in enumerate(classes)}
    for present, label in zip(present_sets, labels):
        k = class_index[label]
        doc_counts[k] += 1
        for term in present:
            i = term_index.get(term)
            if i is not None:
                term_counts[k, i] += 1

    prob = (term_counts + alpha) / (doc_counts[:, None] + 2 * alpha)
    if class_prior_mode == "balanced":
        priors = np.full(n_classes, 1.0 / n_classes)
    else:
        priors = doc_counts / doc_counts.sum()
    return NbModel(
        classes=classes,
        vocabulary=vocabulary,
        log_priors=np.log(priors),
        feature_log_prob=np.log(prob),
        feature_log_absent=np.log1p(-prob),
        binarize_threshold=binarize_threshold,
        alpha=alpha,
    )


def nb_predict(model: NbModel, features: Mapping[str, float] | Iterable[str]) -> NbPrediction:
    """Most probable class for one document's features.

    Every vocabulary term contributes: present terms through log P(present)
    and absent ones through log P(absent). Terms outside the vocabulary are
    ignored. Exact ties go to the earliest class in class order, with a
    warning.
    """
    present = binarize(features, model.binarize_threshold)
    indices = [i for i, term in enumerate(model.vocabulary) if term in present]
    scores = model.log_priors + model.feature_log_absent.sum(axis=1)
    if indices:
        delta = model.feature_log_prob[:, indices] - model.feature_log_absent[:, indices]
        scores = scores + delta.sum(axis=1)
    best = int(np.argmax(scores))
    if sum(1 for s in scores if s == scores[best]) > 1:
        warnings.warn(
            f"tied log scores; picking {model.classes[best]!r} by class order",
            stacklevel=2,
        )
    return NbPrediction(
        label=model.classes[best],
        log_scores={c: float(s) for c, s in zip(model.classes, scores)},
    )
