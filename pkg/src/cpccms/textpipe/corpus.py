"""Labeled document corpora: CSV loading and deterministic splitting."""

from __future__ import annotations

import csv
import math
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence, TypeVar

T = TypeVar("T")


@dataclass(frozen=True)
class RawDocument:
    text: str
    label: str | None = None


def load_corpus_csv(path: str | Path) -> list[RawDocument]:
    """Read a ``text,label`` CSV (standard quoting) into documents."""
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["text", "label"]:
            raise ValueError(f"expected header 'text,label', got {reader.fieldnames}")
        return [RawDocument(text=row["text"], label=row["label"]) for row in reader]


def split_corpus(
    items: Sequence[T],
    fractions: Sequence[float] = (0.8, 0.1, 0.1),
    seed: int = 101,
) -> tuple[list[T], ...]:
    """Shuffle deterministically under ``seed`` and partition contiguously.

    Part boundaries are floor(cumulative fraction * n), so parts are
    disjoint, exhaustive, and reproducible for a given seed.
    """
    if not fractions or any(f <= 0 for f in fractions):
        raise ValueError(f"fractions must all be positive, got {fractions}")
    if abs(math.fsum(fractions) - 1.0) > 1e-9:
        raise ValueError(f"fractions must sum to 1, got {math.fsum(fractions)}")
    indices = list(range(len(items)))
    random.Random(seed).shuffle(indices)
    shuffled = [items[i] for i in indices]

    boundaries = []
    cumulative = 0.0
    for fraction in fractions[:-1]:
        cumulative += fraction
        boundaries.append(math.floor(cumulative * len(items)))
    boundaries.append(len(items))

    parts = []
    start = 0
    for end in boundaries:
        parts.append(shuffled[start:end])
        start = end
    return tuple(parts)
