"""End-to-end demo pipeline: clean, tokenize, stem, vectorize, classify.

Runs the Bernoulli naive Bayes route over a labeled corpus and produces the
evaluation record (predictions, criterion scores, and a wall-clock timing
covering training plus the validation and test passes) that the decision
stage consumes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from ..metrics import CriterionScores, confusion_from_labels, criterion_scores
from .bayes import nb_predict, nb_train
from .cleaning import clean, tokenize
from .corpus import RawDocument, split_corpus
from .features import expand_ngrams, fit_corpus_stats, tfidf_vector
from .stemming import stem_tokens

MODEL_NAME = "bernoulli_nb"


@dataclass(frozen=True)
class DemoResult:
    model_name: str
    classes: tuple[str, ...]
    true_labels: tuple[str, ...]
    predicted_labels: tuple[str, ...]
    scores: CriterionScores
    seconds: float
    split_sizes: tuple[int, int, int]


def preprocess(
    text: str,
    keep_punctuation: bool = False,
    ngram_range: tuple[int, int] = (1, 2),
) -> list[str]:
    """Clean, tokenize, stem, and expand a document into feature terms."""
    tokens = stem_tokens(tokenize(clean(text, keep_punctuation=keep_punctuation)))
    return expand_ngrams(tokens, *ngram_range)


def run_demo(
    documents: Sequence[RawDocument],
    alpha: float = 0.1,
    seed: int = 101,
    fractions: Sequence[float] = (0.8, 0.1, 0.1),
    ngram_range: tuple[int, int] = (1, 2),
    keep_punctuation: bool = False,
    class_prior_mode: str = "empirical",
) -> DemoResult:
    """Train on the first split, predict the validation and test splits.

    The reported predictions and scores come from the test split; the
    validation pass exists so the timing covers training, validation, and
    testing. Everything downstream of the seed is deterministic.
    """
    if len(documents) < 10:
        raise ValueError(f"corpus has {len(documents)} documents; at least 10 are required")
    if any(doc.label is None for doc in documents):
        raise ValueError("every document needs a label")
    if len({doc.label for doc in documents}) < 2:
        raise ValueError("corpus must contain at least two classes")
    if len(fractions) != 3:
        raise ValueError(f"expected train/validation/test fractions, got {len(fractions)} parts")

    train, validation, test = split_corpus(documents, fractions=fractions, seed=seed)
    if not train or not test:
        raise ValueError("split produced an empty train or test part")

    train_terms = [preprocess(d.text, keep_punctuation, ngram_range) for d in train]
    stats = fit_corpus_stats(train_terms)
    train_vectors = [tfidf_vector(terms, stats) for terms in train_terms]
    validation_vectors = [
        tfidf_vector(preprocess(d.text, keep_punctuation, ngram_range), stats) for d in validation
    ]
    test_vectors = [
        tfidf_vector(preprocess(d.text, keep_punctuation, ngram_range), stats) for d in test
    ]

    started = time.perf_counter()
    model = nb_train(
        train_vectors,
        [d.label for d in train],
        alpha=alpha,
        class_prior_mode=class_prior_mode,
    )
    for vector in validation_vectors:
        nb_predict(model, vector)
    predicted = tuple(nb_predict(model, vector).label for vector in test_vectors)
    seconds = time.perf_counter() - started

    classes = tuple(sorted({d.label for d in documents}))
    true_labels = tuple(d.label for d in test)
    cm = confusion_from_labels(true_labels, predicted, classes)
    return DemoResult(
        model_name=MODEL_NAME,
        classes=classes,
        true_labels=true_labels,
        predicted_labels=predicted,
        scores=criterion_scores(cm),
        seconds=seconds,
        split_sizes=(len(train), len(validation), len(test)),
    )
