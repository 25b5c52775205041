"""Inverted index with Okapi BM25 scoring over the sentence store.

Retrieval returns sentences mentioning both comparison objects (multi-word
objects match as contiguous phrases), splits them into a MAIN tier (also
matching an aspect term) and a FALLBACK tier, removes questions, and caps
the fallback tier. The on-disk format is a single little-endian binary
file with header magic ``CAMIDX01``; see README for the layout.
"""

from __future__ import annotations

import math
import struct
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from versus.corpus import SentenceRecord, SentenceStore
from versus.tokens import contains_phrase, tokenize

INDEX_MAGIC = b"CAMIDX01"
INDEX_FILENAME = "index.bin"

DEFAULT_K1 = 1.2
DEFAULT_B = 0.75

MAIN = "MAIN"
FALLBACK = "FALLBACK"

QUESTION_LEADS = {
    "what", "which", "why", "how", "when", "where", "who",
    "is", "are", "do", "does", "can", "should", "will",
}


@dataclass(frozen=True)
class RetrievalLimits:
    fallback_fast: int = 500
    fallback_full: int = 10000


@dataclass(frozen=True)
class RetrievedSentence:
    sentence: SentenceRecord
    e: float
    tier: str
    contains_question: bool = False


def idf(df: int, n_sentences: int) -> float:
    return math.log(1.0 + (n_sentences - df + 0.5) / (df + 0.5))


def bm25(tf: int, df: int, n_sentences: int, length: int, avg_length: float,
         k1: float = DEFAULT_K1, b: float = DEFAULT_B) -> float:
    """Okapi BM25 contribution of one term to one sentence."""
    if tf < 1:
        raise ValueError(f"tf must be >= 1, got {tf}")
    if not 1 <= df <= n_sentences:
        raise ValueError(f"df must be in 1..{n_sentences}, got {df}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    if avg_length <= 0:
        raise ValueError(f"avg_length must be > 0, got {avg_length}")
    norm = k1 * (1.0 - b + b * length / avg_length)
    return idf(df, n_sentences) * tf * (k1 + 1.0) / (tf + norm)


def is_question(text: str) -> bool:
    """True iff the text ends with '?' or opens with an interrogative word."""
    stripped = text.strip()
    if stripped.endswith("?"):
        return True
    toks = tokenize(stripped)
    return bool(toks) and toks[0] in QUESTION_LEADS


class Index:
    """Immutable inverted index over a finished SentenceStore."""

    def __init__(self, store: SentenceStore, k1: float = DEFAULT_K1, b: float = DEFAULT_B):
        self.store = store
        self.k1 = k1
        self.b = b
        self._tokens: list[list[str]] = [tokenize(r.text) for r in store]
        self._lengths: list[int] = [len(toks) for toks in self._tokens]
        self.n_sentences = len(self._lengths)
        self.avg_length = (sum(self._lengths) / self.n_sentences) if self.n_sentences else 0.0
        self._postings: dict[str, list[tuple[int, int]]] = {}
        for sid, toks in enumerate(self._tokens):
            for term, tf in sorted(Counter(toks).items()):
                self._postings.setdefault(term, []).append((sid, tf))

    @classmethod
    def build(cls, store: SentenceStore, k1: float = DEFAULT_K1, b: float = DEFAULT_B) -> "Index":
        return cls(store, k1=k1, b=b)

    def document_frequency(self, term: str) -> int:
        return len(self._postings.get(term, ()))

    def postings(self, term: str) -> list[tuple[int, int]]:
        return list(self._postings.get(term, ()))

    def sentence_length(self, sentence_id: int) -> int:
        return self._lengths[sentence_id]

    def score(self, sentence_id: int, terms: Sequence[str]) -> float:
        """BM25 score of one sentence for the given query terms (summed
        over the distinct terms that occur in the sentence). fsum keeps the
        result independent of term order, so swapped queries score alike."""
        counts = Counter(self._tokens[sentence_id])
        parts = []
        for term in dict.fromkeys(terms):
            tf = counts.get(term, 0)
            if tf == 0:
                continue
            parts.append(bm25(tf, self.document_frequency(term), self.n_sentences,
                              self._lengths[sentence_id], self.avg_length,
                              k1=self.k1, b=self.b))
        return math.fsum(parts)

    def retrieve(self, object_a: str, object_b: str,
                 aspects: Sequence[tuple[str, int]] = (),
                 fast_mode: bool = False,
                 limits: RetrievalLimits | None = None) -> list[RetrievedSentence]:
        """Candidate sentences containing both objects, questions removed.

        MAIN tier: sentences matching at least one aspect token (every
        sentence when the query has no aspects). FALLBACK tier: the rest,
        capped at limits.fallback_fast (fast mode) or limits.fallback_full,
        keeping the highest-scored sentences. Both tiers are sorted by
        descending score, MAIN first.
        """
        limits = limits or RetrievalLimits()
        a_tokens = tokenize(object_a)
        b_tokens = tokenize(object_b)
        if not a_tokens or not b_tokens:
            raise ValueError("both objects must contain at least one word")
        if a_tokens == b_tokens:
            raise ValueError("the two objects must differ after normalization")

        aspect_tokens: list[str] = []
        for text, _weight in aspects:
            aspect_tokens.extend(tokenize(text))
        query_terms = list(dict.fromkeys(a_tokens + b_tokens + aspect_tokens))

        candidates = self._candidates(set(a_tokens) | set(b_tokens))
        main: list[RetrievedSentence] = []
        fallback: list[RetrievedSentence] = []
        aspect_set = set(aspect_tokens)
        for sid in candidates:
            toks = self._tokens[sid]
            if not contains_phrase(toks, a_tokens) or not contains_phrase(toks, b_tokens):
                continue
            record = self.store.get(sid)
            if is_question(record.text):
                continue
            e = self.score(sid, query_terms)
            has_aspect = bool(aspect_set) and any(t in aspect_set for t in toks)
            hit = RetrievedSentence(sentence=record, e=e,
                                    tier=MAIN if (has_aspect or not aspect_set) else FALLBACK)
            (main if hit.tier == MAIN else fallback).append(hit)

        key = lambda r: (-r.e, r.sentence.sentence_id)
        main.sort(key=key)
        fallback.sort(key=key)
        cap = limits.fallback_fast if fast_mode else limits.fallback_full
        return main + fallback[:cap]

    def _candidates(self, required_terms: set[str]) -> list[int]:
        """Sentence ids whose token sets contain every required term."""
        result: set[int] | None = None
        for term in required_terms:
            ids = {sid for sid, _tf in self._postings.get(term, ())}
            result = ids if result is None else result & ids
            if not result:
                return []
        return sorted(result or [])

    def save(self, path: str | Path) -> None:
        """Serialize the index: header, sentence-length table, then the
        term dictionary with postings, terms in lexicographic order."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as out:
            out.write(INDEX_MAGIC)
            out.write(struct.pack("<IddI", self.n_sentences, self.avg_length,
                                  self.k1, len(self._postings)))
            out.write(struct.pack("<d", self.b))
            if self._lengths:
                out.write(struct.pack(f"<{len(self._lengths)}I", *self._lengths))
            for term in sorted(self._postings):
                encoded = term.encode("utf-8")
                entries = self._postings[term]
                out.write(struct.pack("<HI", len(encoded), len(entries)))
                out.write(encoded)
                for sid, tf in entries:
                    out.write(struct.pack("<II", sid, tf))

    @classmethod
    def load(cls, path: str | Path, store: SentenceStore) -> "Index":
        path = Path(path)
        with open(path, "rb") as inp:
            magic = inp.read(8)
            if magic != INDEX_MAGIC:
                raise ValueError(f"{path}: bad magic {magic!r}")
            n_sentences, avg_length, k1, term_count = struct.unpack("<IddI", inp.read(24))
            (b,) = struct.unpack("<d", inp.read(8))
            if n_sentences != len(store):
                raise ValueError(
                    f"{path}: index has {n_sentences} sentences, store has {len(store)}"
                )
            lengths = list(struct.unpack(f"<{n_sentences}I", inp.read(4 * n_sentences))) \
                if n_sentences else []
            postings: dict[str, list[tuple[int, int]]] = {}
            for _ in range(term_count):
                term_len, entry_count = struct.unpack("<HI", inp.read(6))
                term = inp.read(term_len).decode("utf-8")
                entries = [struct.unpack("<II", inp.read(8)) for _ in range(entry_count)]
                postings[term] = [(sid, tf) for sid, tf in entries]
        index = cls(store, k1=k1, b=b)
        if index._lengths != lengths or index._postings != postings or \
                abs(index.avg_length - avg_length) > 1e-9:
            raise ValueError(f"{path}: index does not match the sentence store")
        return index
