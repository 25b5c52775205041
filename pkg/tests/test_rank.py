import pytest

from versus.classify import Classification, ComparisonLabel, OBJECT_A, OBJECT_B
from versus.corpus import SentenceRecord
from versus.rank import (
    NO_WINNER,
    RankingConfig,
    ScoredSentence,
    aggregate,
    compute_emax,
    orient,
    score_sentence,
)

B, W, E, N = (ComparisonLabel.BETTER, ComparisonLabel.WORSE,
              ComparisonLabel.EQUAL, ComparisonLabel.NONE)


def record(sid):
    return SentenceRecord(sid, "doc", sid, f"sentence {sid}")


def scored(sid, s, winner, matched=()):
    return ScoredSentence(sentence=record(sid),
                          classification=Classification(B, 0.9),
                          e=1.0, matched_aspects=tuple(matched), s=s, winner=winner)


# --- compute_emax ------------------------------------------------------------

def test_emax_over_comparative_only():
    assert compute_emax([(B, 2.0), (N, 9.0), (W, 3.5)]) == 3.5


def test_emax_no_comparatives_is_zero():
    assert compute_emax([(N, 4.0), (E, 7.0)]) == 0.0
    assert compute_emax([]) == 0.0


def test_emax_single_better():
    assert compute_emax([(B, 1.25)]) == 1.25


# --- score_sentence ----------------------------------------------------------

def test_score_high_confidence_no_aspects():
    assert score_sentence(2.0, 3.0, 0.9, []) == 5.0


def test_score_low_confidence_damped():
    assert score_sentence(2.0, 3.0, 0.5, []) == pytest.approx(0.2, abs=1e-12)


def test_score_aspect_boost():
    assert score_sentence(1.0, 4.0, 0.95, [("speed", 5)]) == 25.0


def test_score_boundary_confidence_takes_high_branch():
    assert score_sentence(2.0, 3.0, 0.8, []) == 5.0


def test_score_multiple_aspects_use_max_weight():
    assert score_sentence(1.0, 2.0, 0.9, [("a", 2), ("b", 4), ("c", 1)]) == 8.0 + 1.0 + 2.0


def test_score_custom_config():
    config = RankingConfig(gamma=0.5, delta=0.25)
    assert score_sentence(2.0, 3.0, 0.5, [], config) == 5.0
    assert score_sentence(2.0, 3.0, 0.49, [], config) == pytest.approx(0.5, abs=1e-12)


@pytest.mark.parametrize("kwargs", [
    dict(e=-0.1, e_max=1.0, confidence=0.5, matched_aspects=[]),
    dict(e=1.0, e_max=-1.0, confidence=0.5, matched_aspects=[]),
    dict(e=1.0, e_max=1.0, confidence=1.5, matched_aspects=[]),
    dict(e=1.0, e_max=1.0, confidence=-0.1, matched_aspects=[]),
    dict(e=1.0, e_max=1.0, confidence=0.5, matched_aspects=[("a", 0)]),
    dict(e=1.0, e_max=1.0, confidence=0.5, matched_aspects=[("a", 6)]),
])
def test_score_contract_errors(kwargs):
    with pytest.raises(ValueError):
        score_sentence(**kwargs)


def test_score_monotone_in_confidence_with_single_jump():
    config = RankingConfig()
    previous = -1.0
    jumps = 0
    grid = [i / 1000 for i in range(1001)]
    for confidence in grid:
        value = score_sentence(2.0, 3.0, confidence, [("x", 3)], config)
        assert value >= previous
        if previous >= 0 and value > previous:
            jumps += 1
        previous = value
    assert jumps == 1
    low = score_sentence(2.0, 3.0, 0.8 - 1e-9, [], config)
    high = score_sentence(2.0, 3.0, 0.8, [], config)
    assert low == pytest.approx(0.2, abs=1e-12) and high == 5.0


def test_score_exact_identity_above_gamma():
    for e, e_max in [(0.0, 0.0), (1.5, 2.5), (3.0, 3.0)]:
        assert score_sentence(e, e_max, 0.99, []) == e + e_max


def test_ranking_config_validation():
    with pytest.raises(ValueError):
        RankingConfig(gamma=1.5)
    with pytest.raises(ValueError):
        RankingConfig(delta=0.0)
    assert RankingConfig().gamma == 0.8
    assert RankingConfig().delta == 0.1


# --- orient ------------------------------------------------------------------

@pytest.mark.parametrize("label,first,expected", [
    (B, OBJECT_A, OBJECT_A),
    (B, OBJECT_B, OBJECT_B),
    (W, OBJECT_A, OBJECT_B),
    (W, OBJECT_B, OBJECT_A),
    (E, OBJECT_A, NO_WINNER),
    (N, OBJECT_B, NO_WINNER),
])
def test_orient(label, first, expected):
    assert orient(Classification(label, 0.9), first) == expected


# --- aggregate ---------------------------------------------------------------

def test_aggregate_simple_sums():
    items = [scored(0, 5.0, OBJECT_A), scored(1, 0.2, OBJECT_A), scored(2, 3.0, OBJECT_B)]
    totals = aggregate(items)
    assert totals.total_a == pytest.approx(5.2, abs=1e-12)
    assert totals.total_b == 3.0


def test_aggregate_empty():
    totals = aggregate([])
    assert (totals.total_a, totals.total_b) == (0.0, 0.0)


def test_aggregate_no_winner_contributes_nothing():
    items = [scored(0, 5.0, NO_WINNER), scored(1, 2.0, OBJECT_B)]
    totals = aggregate(items)
    assert (totals.total_a, totals.total_b) == (0.0, 2.0)


def test_aggregate_per_aspect_subtotals():
    aspects = [("speed", 3), ("price", 2)]
    items = [
        scored(0, 4.0, OBJECT_A, matched=[("speed", 3)]),
        scored(1, 1.0, OBJECT_A),
        scored(2, 2.0, OBJECT_B, matched=[("speed", 3), ("price", 2)]),
    ]
    totals = aggregate(items, aspects)
    assert totals.per_aspect["speed"] == (4.0, 2.0)
    assert totals.per_aspect["price"] == (0.0, 2.0)
    for sub_a, sub_b in totals.per_aspect.values():
        assert sub_a <= totals.total_a and sub_b <= totals.total_b
