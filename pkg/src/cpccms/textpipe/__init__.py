"""Desk-scale text-classification pipeline feeding the evaluation stage."""

from .bayes import NbModel, NbPrediction, binarize, nb_predict, nb_train
from .cleaning import clean, tokenize
from .corpus import RawDocument, load_corpus_csv, split_corpus
from .features import CorpusStats, expand_ngrams, fit_corpus_stats, tfidf_vector
from .pipeline import DemoResult, preprocess, run_demo
from .stemming import porter_stem, stem_tokens

__all__ = [
    "NbModel",
    "NbPrediction",
    "binarize",
    "nb_predict",
    "nb_train",
    "clean",
    "tokenize",
    "RawDocument",
    "load_corpus_csv",
    "split_corpus",
    "CorpusStats",
    "expand_ngrams",
    "fit_corpus_stats",
    "tfidf_vector",
    "DemoResult",
    "preprocess",
    "run_demo",
    "porter_stem",
    "stem_tokens",
]
