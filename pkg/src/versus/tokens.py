"""Shared tokenization and phrase-matching helpers.

One tokenizer is used everywhere (indexing, midspan extraction, aspect
matching) so that "contains phrase X" means the same thing in every
module. Tokens are lowercased; internal apostrophes stay inside the
token ("isn't" is one token), matching Unicode word-boundary behavior.
"""

from __future__ import annotations

import re
from typing import Sequence

_WORD_RE = re.compile(r"\w+(?:['’]\w+)*")
_WORD_OR_PUNCT_RE = re.compile(r"\w+(?:['’]\w+)*|[^\w\s]")


def tokenize(text: str) -> list[str]:
    """Lowercased word tokens of ``text``."""
    return _WORD_RE.findall(text.lower())


def tokenize_with_punct(text: str) -> list[str]:
    """Like tokenize(), but punctuation marks are kept as one-char tokens."""
    return _WORD_OR_PUNCT_RE.findall(text.lower())


def is_word_token(token: str) -> bool:
    return _WORD_RE.fullmatch(token) is not None


def find_phrase(tokens: Sequence[str], phrase: Sequence[str], start: int = 0) -> int:
    """Index of the first contiguous occurrence of ``phrase`` in ``tokens``, or -1."""
    m = len(phrase)
    if m == 0:
        return -1
    limit = len(tokens) - m
    for i in range(start, limit + 1):
        if all(tokens[i + j] == phrase[j] for j in range(m)):
            return i
    return -1


def contains_phrase(tokens: Sequence[str], phrase: Sequence[str]) -> bool:
    return find_phrase(tokens, phrase) >= 0
