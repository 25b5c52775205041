"""Sentence store: ingestion, sentence splitting, and context windows.

Documents are ingested from line-delimited JSON records and stored as
ordered sentences so that the neighborhood of any evidence sentence can
be reconstructed later. The on-disk form is a little-endian append log
(``corpus.log``) plus an offset table (``corpus.idx``); see README for
the exact byte layout.
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from versus.tokens import tokenize

STORE_MAGIC = b"CAMSTO01"
LOG_FILENAME = "corpus.log"
TABLE_FILENAME = "corpus.idx"

# Trailing words (with their period) that do not end a sentence.
ABBREVIATIONS = {
    "e.g.", "i.e.", "cf.", "etc.", "vs.", "al.", "approx.", "no.", "fig.",
    "mr.", "mrs.", "ms.", "dr.", "prof.", "jr.", "sr.", "st.",
    "inc.", "ltd.", "co.", "dept.", "est.", "min.", "max.",
    "u.s.", "u.k.", "e.u.",
}

_TERMINALS = ".!?"


class IngestError(ValueError):
    """A batch-level integrity problem; the whole batch is rejected."""


class UnknownSentenceError(LookupError):
    """Raised when a sentence_id is not present in the store."""


@dataclass(frozen=True)
class SentenceRecord:
    sentence_id: int
    document_id: str
    position: int
    text: str


@dataclass(frozen=True)
class CorpusStats:
    document_count: int
    sentence_count: int
    token_count: int


@dataclass(frozen=True)
class IngestReport:
    stats: CorpusStats
    skipped: int


@dataclass(frozen=True)
class ContextWindow:
    sentences: tuple[SentenceRecord, ...]
    target_id: int


def split_sentences(text: str) -> list[str]:
    """Split ``text`` into sentences on '.', '!', '?'.

    A terminal run ends a sentence only when followed by whitespace and a
    capital letter, or by the end of the text. A trailing word from
    ABBREVIATIONS never ends a sentence. Whatever remains after the last
    boundary is emitted as-is, so no non-whitespace content is lost.
    """
    sentences: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        if text[i] in _TERMINALS:
            j = i + 1
            while j < n and text[j] in _TERMINALS:
                j += 1
            if _is_boundary(text, i, j):
                piece = text[start:j].strip()
                if piece:
                    sentences.append(piece)
                start = j
                i = j
                continue
        i += 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def _is_boundary(text: str, first_terminal: int, run_end: int) -> bool:
    if run_end >= len(text) or not text[run_end:].strip():
        return True
    k = run_end
    saw_space = False
    while k < len(text) and text[k].isspace():
        saw_space = True
        k += 1
    if not saw_space or k >= len(text) or not text[k].isupper():
        return False
    if text[first_terminal] == ".":
        # the word ending at this period, e.g. "Dr." or "U.S."
        tail = text[:first_terminal + 1]
        word_start = first_terminal
        while word_start > 0 and not tail[word_start - 1].isspace():
            word_start -= 1
        if tail[word_start:].lower() in ABBREVIATIONS:
            return False
    return True


class SentenceStore:
    """Ordered sentence storage keyed by document.

    Ingestion is single-writer; once ingestion is done the store is
    effectively immutable and safe for concurrent readers. Re-ingesting a
    document_id replaces that document in place, so feeding the same batch
    twice leaves the store contents (including sentence ids) unchanged.
    """

    def __init__(self) -> None:
        self._docs: dict[str, list[str]] = {}
        self._sentences: list[SentenceRecord] = []
        self._doc_spans: dict[str, tuple[int, int]] = {}  # doc_id -> (first_id, count)
        self._token_count = 0

    def __len__(self) -> int:
        return len(self._sentences)

    def __iter__(self) -> Iterator[SentenceRecord]:
        return iter(self._sentences)

    @property
    def sentences(self) -> list[SentenceRecord]:
        return list(self._sentences)

    @property
    def document_ids(self) -> list[str]:
        return list(self._docs)

    def ingest(self, lines: Iterable[str]) -> IngestReport:
        """Ingest one batch of line-delimited JSON records.

        Each record is either {"document_id", "text"} (a whole document, to
        be sentence-split) or {"document_id", "position", "text"} (pre-split).
        Malformed records are skipped and tallied; colliding positions or
        position gaps within the batch abort it with IngestError, leaving
        the store untouched.
        """
        skipped = 0
        plain: dict[str, list[str]] = {}
        presplit: dict[str, dict[int, str]] = {}
        order: list[str] = []

        for line in lines:
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError:
                skipped += 1
                continue
            if not isinstance(record, dict):
                skipped += 1
                continue
            doc_id = record.get("document_id")
            text = record.get("text")
            if not isinstance(doc_id, str) or not doc_id or not isinstance(text, str):
                skipped += 1
                continue
            if "position" in record:
                position = record["position"]
                if isinstance(position, bool) or not isinstance(position, int) or position < 0:
                    skipped += 1
                    continue
                if not text.strip():
                    skipped += 1
                    continue
                if doc_id in plain:
                    raise IngestError(
                        f"document {doc_id!r}: mixed plain and pre-split records in one batch"
                    )
                slots = presplit.setdefault(doc_id, {})
                if doc_id not in order and len(slots) == 0:
                    order.append(doc_id)
                if position in slots:
                    raise IngestError(
                        f"document {doc_id!r}: duplicate position {position} in one batch"
                    )
                slots[position] = text.strip()
            else:
                if doc_id in presplit:
                    raise IngestError(
                        f"document {doc_id!r}: mixed plain and pre-split records in one batch"
                    )
                if doc_id in plain:
                    raise IngestError(
                        f"document {doc_id!r}: duplicate plain document in one batch"
                    )
                plain[doc_id] = split_sentences(text)
                order.append(doc_id)

        batch: dict[str, list[str]] = {}
        for doc_id in order:
            if doc_id in plain:
                texts = plain[doc_id]
            else:
                slots = presplit[doc_id]
                expected = set(range(len(slots)))
                if set(slots) != expected:
                    raise IngestError(
                        f"document {doc_id!r}: positions are not a contiguous 0..n-1 range"
                    )
                texts = [slots[p] for p in range(len(slots))]
            if texts:  # empty documents are dropped
                batch[doc_id] = texts

        for doc_id, texts in batch.items():
            self._docs[doc_id] = texts
        self._rebuild()
        return IngestReport(self.stats(), skipped)

    def _rebuild(self) -> None:
        self._sentences = []
        self._doc_spans = {}
        token_count = 0
        next_id = 0
        for doc_id, texts in self._docs.items():
            self._doc_spans[doc_id] = (next_id, len(texts))
            for position, text in enumerate(texts):
                self._sentences.append(SentenceRecord(next_id, doc_id, position, text))
                token_count += len(tokenize(text))
                next_id += 1
        self._token_count = token_count

    def stats(self) -> CorpusStats:
        return CorpusStats(
            document_count=len(self._docs),
            sentence_count=len(self._sentences),
            token_count=self._token_count,
        )

    def get(self, sentence_id: int) -> SentenceRecord:
        if not 0 <= sentence_id < len(self._sentences):
            raise UnknownSentenceError(f"unknown sentence_id {sentence_id}")
        return self._sentences[sentence_id]

    def get_context(self, sentence_id: int, window: int) -> ContextWindow:
        """Up to ``2*window + 1`` sentences around the target, clipped at
        the document boundaries, in position order."""
        if window < 0:
            raise ValueError("window must be >= 0")
        target = self.get(sentence_id)
        first, count = self._doc_spans[target.document_id]
        lo = max(first, sentence_id - window)
        hi = min(first + count - 1, sentence_id + window)
        return ContextWindow(
            sentences=tuple(self._sentences[lo:hi + 1]),
            target_id=sentence_id,
        )

    def document_sentences(self, document_id: str) -> list[SentenceRecord]:
        if document_id not in self._doc_spans:
            raise UnknownSentenceError(f"unknown document_id {document_id!r}")
        first, count = self._doc_spans[document_id]
        return self._sentences[first:first + count]

    def save(self, directory: str | Path) -> None:
        """Write the append log and offset table (both little-endian)."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        doc_index = {doc_id: i for i, doc_id in enumerate(self._docs)}
        offsets: list[int] = []
        log_path = directory / LOG_FILENAME
        with open(log_path, "wb") as log:
            for record in self._sentences:
                offsets.append(log.tell())
                payload = record.text.encode("utf-8")
                log.write(struct.pack("<III", doc_index[record.document_id],
                                      record.position, len(payload)))
                log.write(payload)
        with open(directory / TABLE_FILENAME, "wb") as table:
            table.write(STORE_MAGIC)
            table.write(struct.pack("<IIQ", len(self._docs), len(self._sentences),
                                    self._token_count))
            for doc_id, texts in self._docs.items():
                encoded = doc_id.encode("utf-8")
                first, count = self._doc_spans[doc_id]
                table.write(struct.pack("<I", len(encoded)))
                table.write(encoded)
                table.write(struct.pack("<II", first, count))
            table.write(struct.pack(f"<{len(offsets)}Q", *offsets))

    @classmethod
    def load(cls, directory: str | Path) -> "SentenceStore":
        directory = Path(directory)
        table_path = directory / TABLE_FILENAME
        log_path = directory / LOG_FILENAME
        store = cls()
        with open(table_path, "rb") as table:
            magic = table.read(8)
            if magic != STORE_MAGIC:
                raise ValueError(f"{table_path}: bad magic {magic!r}")
            doc_count, sentence_count, _token_count = struct.unpack("<IIQ", table.read(16))
            doc_ids: list[str] = []
            counts: list[int] = []
            for _ in range(doc_count):
                (id_len,) = struct.unpack("<I", table.read(4))
                doc_ids.append(table.read(id_len).decode("utf-8"))
                _first, count = struct.unpack("<II", table.read(8))
                counts.append(count)
        with open(log_path, "rb") as log:
            texts_by_doc: list[list[str]] = [[] for _ in doc_ids]
            for _ in range(sentence_count):
                doc_idx, _position, text_len = struct.unpack("<III", log.read(12))
                texts_by_doc[doc_idx].append(log.read(text_len).decode("utf-8"))
        for doc_id, texts in zip(doc_ids, texts_by_doc):
            store._docs[doc_id] = texts
        store._rebuild()
        return store
