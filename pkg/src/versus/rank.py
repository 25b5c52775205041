"""Evidence scoring, orientation, and aggregation.

Each classified sentence gets a final score: confident sentences are
boosted by the query's maximum retrieval score (plus a weighted aspect
boost when a user aspect occurs in the sentence), low-confidence ones
are damped by a small factor. The sentence's verdict is then oriented
onto the query's object order, and per-object totals are summed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from versus.classify import Classification, ComparisonLabel, OBJECT_A, OBJECT_B
from versus.corpus import SentenceRecord

NO_WINNER = "NONE"


@dataclass(frozen=True)
class RankingConfig:
    gamma: float = 0.8  # confidence threshold for the boost branch
    delta: float = 0.1  # damping factor for low-confidence sentences

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must be in [0, 1], got {self.gamma}")
        if not 0.0 < self.delta <= 1.0:
            raise ValueError(f"delta must be in (0, 1], got {self.delta}")


@dataclass(frozen=True)
class ScoredSentence:
    sentence: SentenceRecord
    classification: Classification
    e: float
    matched_aspects: tuple[tuple[str, int], ...]
    s: float
    winner: str  # OBJECT_A, OBJECT_B, or NO_WINNER


@dataclass(frozen=True)
class AggregateScores:
    total_a: float
    total_b: float
    per_aspect: dict[str, tuple[float, float]]  # aspect text -> (a, b) sub-totals


def compute_emax(labeled: Iterable[tuple[ComparisonLabel, float]]) -> float:
    """Maximum retrieval score among comparative (BETTER/WORSE) candidates,
    0.0 when there is none."""
    best = 0.0
    for label, e in labeled:
        if label in (ComparisonLabel.BETTER, ComparisonLabel.WORSE) and e > best:
            best = e
    return best


def score_sentence(e: float, e_max: float, confidence: float,
                   matched_aspects: Sequence[tuple[str, int]],
                   config: RankingConfig = RankingConfig()) -> float:
    """Final score: alpha + e + e_max when confidence >= gamma, otherwise
    (alpha + e) * delta, where alpha is e_max times the largest weight of
    a matched aspect (0 with no match)."""
    if e < 0:
        raise ValueError(f"e must be >= 0, got {e}")
    if e_max < 0:
        raise ValueError(f"e_max must be >= 0, got {e_max}")
    if not 0.0 <= confidence <= 1.0:
        raise ValueError(f"confidence must be in [0, 1], got {confidence}")
    for text, weight in matched_aspects:
        if not 1 <= weight <= 5:
            raise ValueError(f"aspect {text!r}: weight must be in 1..5, got {weight}")
    alpha = e_max * max((w for _t, w in matched_aspects), default=0)
    if confidence >= config.gamma:
        return alpha + e + e_max
    return (alpha + e) * config.delta


def orient(classification: Classification, first_mention: str) -> str:
    """Map the sentence's verdict onto the query's object order."""
    if classification.label is ComparisonLabel.BETTER:
        return first_mention
    if classification.label is ComparisonLabel.WORSE:
        return OBJECT_B if first_mention == OBJECT_A else OBJECT_A
    return NO_WINNER


def aggregate(scored: Sequence[ScoredSentence],
              aspects: Sequence[tuple[str, int]] = ()) -> AggregateScores:
    """Sum s over each object's winning sentences, overall and restricted
    to each user aspect. Sentences without a winner contribute nothing."""
    total_a = 0.0
    total_b = 0.0
    per_aspect = {text: (0.0, 0.0) for text, _w in aspects}
    for item in sorted(scored, key=lambda sc: sc.sentence.sentence_id):
        if item.winner == OBJECT_A:
            total_a += item.s
        elif item.winner == OBJECT_B:
            total_b += item.s
        else:
            continue
        for text, _weight in item.matched_aspects:
            if text in per_aspect:
                sub_a, sub_b = per_aspect[text]
                if item.winner == OBJECT_A:
                    per_aspect[text] = (sub_a + item.s, sub_b)
                else:
                    per_aspect[text] = (sub_a, sub_b + item.s)
    return AggregateScores(total_a=total_a, total_b=total_b, per_aspect=per_aspect)
