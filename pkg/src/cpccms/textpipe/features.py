"""N-gram expansion, corpus statistics, and smoothed TF-IDF vectors."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class CorpusStats:
    """Document frequencies over a fitted corpus.

    ``df[t]`` counts documents containing term t (not occurrences); the
    vocabulary is the lexicographically sorted term list.
    """

    n_docs: int
    df: dict[str, int]
    vocabulary: tuple[str, ...]

    def __post_init__(self) -> None:
        if self.n_docs < 1:
            raise ValueError("a fitted corpus must contain at least one document")
        for term, count in self.df.items():
            if not 0 < count <= self.n_docs:
                raise ValueError(
                    f"document frequency of {term!r} is {count}, outside (0, {self.n_docs}]"
                )

    @classmethod
    def from_document_frequencies(cls, n_docs: int, df: Mapping[str, int]) -> "CorpusStats":
        return cls(n_docs=n_docs, df=dict(df), vocabulary=tuple(sorted(df)))

    def idf(self, term: str) -> float:
        """Smoothed inverse document frequency: ln((1 + N) / (1 + DF)) + 1."""
        if term not in self.df:
            raise KeyError(f"term {term!r} is not in the fitted vocabulary")
        return math.log((1 + self.n_docs) / (1 + self.df[term])) + 1.0


def expand_ngrams(tokens: Sequence[str], min_n: int, max_n: int) -> list[str]:
    """Append space-joined contiguous n-grams, in document order per n."""
    if not 1 <= min_n <= max_n:
        raise ValueError(f"invalid n-gram range ({min_n}, {max_n})")
    if min_n == max_n == 1:
        return list(tokens)
    expanded: list[str] = []
    for n in range(min_n, max_n + 1):
        for i in range(len(tokens) - n + 1):
            expanded.append(" ".join(tokens[i : i + n]))
    return expanded


def fit_corpus_stats(corpus: Iterable[Sequence[str]]) -> CorpusStats:
    """Count document frequencies over tokenized documents."""
    df: Counter[str] = Counter()
    n_docs = 0
    for tokens in corpus:
        n_docs += 1
        df.update(set(tokens))
    if n_docs == 0:
        raise ValueError("cannot fit statistics on an empty corpus")
    return CorpusStats.from_document_frequencies(n_docs, df)


def tfidf_vector(tokens: Sequence[str], stats: CorpusStats) -> dict[str, float]:
    """L2-normalized TF-IDF weights for one document.

    Terms outside the fitted vocabulary are dropped; a document with no
    known terms yields the empty (zero) vector.
    """
    counts = Counter(t for t in tokens if t in stats.df)
    if not counts:
        return {}
    raw = {term: tf * stats.idf(term) for term, tf in counts.items()}
    norm = math.sqrt(math.fsum(w * w for w in raw.values()))
    return {term: w / norm for term, w in raw.items()}
