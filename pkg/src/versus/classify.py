"""Comparative sentence classification.

A sentence is labeled BETTER / WORSE / EQUAL / NONE with respect to its
first-mentioned object, using only the tokens strictly between the two
object mentions (the midspan). Two classifiers share this interface: a
keyphrase model (here) and a trainable bag-of-words model (versus.bow).
A keyword heuristic flips BETTER/WORSE when a negator precedes the
comparative marker.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from versus.tokens import find_phrase, tokenize

OBJECT_A = "OBJECT_A"
OBJECT_B = "OBJECT_B"

MODEL_DEFAULT = "DEFAULT"
MODEL_BOW = "BOW"


class ComparisonLabel(Enum):
    # definition order is the deterministic tie-break order
    BETTER = "BETTER"
    WORSE = "WORSE"
    EQUAL = "EQUAL"
    NONE = "NONE"


@dataclass(frozen=True)
class Classification:
    label: ComparisonLabel
    confidence: float
    model: str = MODEL_DEFAULT
    negation_applied: bool = False


@dataclass(frozen=True)
class Midspan:
    tokens: tuple[str, ...]
    first_mention: str  # OBJECT_A or OBJECT_B


POSITIVE_MARKERS = {
    "better", "superior", "faster", "stronger", "easier",
    "safer", "cheaper", "nicer", "cleaner", "quicker",
}
NEGATIVE_MARKERS = {"worse", "inferior", "slower", "weaker", "harder"}
EQUALITY_PHRASES = (
    ("as", "good", "as"),
    ("same", "as"),
    ("equal", "to"),
    ("similar", "to"),
)
NEGATORS = {"not", "never", "hardly", "neither", "nor"}

CONFIDENCE_MARKER = 0.9
CONFIDENCE_GENERIC = 0.7
CONFIDENCE_EMPTY_NONE = 0.95
CONFIDENCE_NONE = 0.6


def extract_midspan(sentence, object_a: str, object_b: str) -> Midspan:
    """Tokens strictly between the earliest mentions of the two objects.

    ``sentence`` may be a SentenceRecord or a plain string. Both objects
    must occur in the sentence (retrieval guarantees this); otherwise a
    ValueError is raised.
    """
    text = getattr(sentence, "text", sentence)
    toks = tokenize(text)
    a_tokens = tokenize(object_a)
    b_tokens = tokenize(object_b)
    pos_a = find_phrase(toks, a_tokens)
    pos_b = find_phrase(toks, b_tokens)
    if pos_a < 0 or pos_b < 0:
        missing = object_a if pos_a < 0 else object_b
        raise ValueError(f"object {missing!r} not found in sentence: {text!r}")
    a_first = pos_a < pos_b or (pos_a == pos_b and len(a_tokens) <= len(b_tokens))
    if a_first:
        start, end = pos_a + len(a_tokens), pos_b
        first = OBJECT_A
    else:
        start, end = pos_b + len(b_tokens), pos_a
        first = OBJECT_B
    return Midspan(tokens=tuple(toks[start:max(start, end)]), first_mention=first)


def _first_marker(tokens) -> Optional[tuple[int, ComparisonLabel, float]]:
    """Leftmost comparative/equality marker: (index, label, confidence)."""
    n = len(tokens)
    for i, tok in enumerate(tokens):
        for phrase in EQUALITY_PHRASES:
            if tuple(tokens[i:i + len(phrase)]) == phrase:
                return i, ComparisonLabel.EQUAL, CONFIDENCE_MARKER
        if tok in POSITIVE_MARKERS:
            return i, ComparisonLabel.BETTER, CONFIDENCE_MARKER
        nxt = tokens[i + 1] if i + 1 < n else None
        if tok in NEGATIVE_MARKERS and nxt in ("than", "to"):
            return i, ComparisonLabel.WORSE, CONFIDENCE_MARKER
        if len(tok) >= 5 and tok.endswith("er") and nxt == "than" \
                and tok not in NEGATIVE_MARKERS:
            return i, ComparisonLabel.BETTER, CONFIDENCE_GENERIC
    return None


def classify_default(midspan: Midspan) -> Classification:
    """Keyphrase classifier over the midspan tokens."""
    if not midspan.tokens:
        return Classification(ComparisonLabel.NONE, CONFIDENCE_EMPTY_NONE, MODEL_DEFAULT)
    marker = _first_marker(midspan.tokens)
    if marker is None:
        return Classification(ComparisonLabel.NONE, CONFIDENCE_NONE, MODEL_DEFAULT)
    _index, label, confidence = marker
    return Classification(label, confidence, MODEL_DEFAULT)


def _is_negator(token: str) -> bool:
    return token in NEGATORS or token.endswith("n't")


def apply_negation(classification: Classification, midspan: Midspan) -> Classification:
    """Flip BETTER/WORSE when an odd number of negators sits within the
    three tokens before the first comparative marker. EQUAL and NONE are
    never touched; confidence is unchanged."""
    if classification.label not in (ComparisonLabel.BETTER, ComparisonLabel.WORSE):
        return classification
    marker = _first_comparative_index(midspan.tokens)
    if marker is None:
        return classification
    window = midspan.tokens[max(0, marker - 3):marker]
    flips = sum(1 for tok in window if _is_negator(tok))
    if flips % 2 == 0:
        return classification
    flipped = (ComparisonLabel.WORSE if classification.label is ComparisonLabel.BETTER
               else ComparisonLabel.BETTER)
    return replace(classification, label=flipped, negation_applied=True)


def _first_comparative_index(tokens) -> Optional[int]:
    n = len(tokens)
    for i, tok in enumerate(tokens):
        if tok in POSITIVE_MARKERS or tok in NEGATIVE_MARKERS:
            return i
        nxt = tokens[i + 1] if i + 1 < n else None
        if len(tok) >= 5 and tok.endswith("er") and nxt == "than":
            return i
    return None
