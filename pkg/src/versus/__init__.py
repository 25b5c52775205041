"""versus: comparative question answering over a sentence corpus.

Given two objects and optional weighted aspects, the engine retrieves
sentences mentioning both objects, classifies each one as favoring the
first-mentioned object, the second, neither, or no comparison at all,
scores and aggregates the evidence per object, and mines supplementary
comparison aspects from the retrieved text.
"""

from versus.classify import (
    Classification,
    ComparisonLabel,
    Midspan,
    OBJECT_A,
    OBJECT_B,
    apply_negation,
    classify_default,
    extract_midspan,
)
from versus.corpus import CorpusStats, SentenceRecord, SentenceStore, split_sentences
from versus.index import Index, RetrievalLimits, RetrievedSentence, bm25, is_question
from versus.pipeline import ComparisonEngine, ComparisonQuery, ComparisonResult, filter_view
from versus.rank import RankingConfig, ScoredSentence, aggregate, compute_emax, orient, score_sentence

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "ComparisonEngine",
    "ComparisonLabel",
    "ComparisonQuery",
    "ComparisonResult",
    "CorpusStats",
    "Index",
    "Midspan",
    "OBJECT_A",
    "OBJECT_B",
    "RankingConfig",
    "RetrievalLimits",
    "RetrievedSentence",
    "ScoredSentence",
    "SentenceRecord",
    "SentenceStore",
    "aggregate",
    "apply_negation",
    "bm25",
    "classify_default",
    "compute_emax",
    "extract_midspan",
    "filter_view",
    "is_question",
    "orient",
    "score_sentence",
    "split_sentences",
]
