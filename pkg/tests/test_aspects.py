import pytest

from versus.aspects import (
    COMP_ADJ,
    COMP_PHRASE,
    ER_BLOCKLIST,
    PATTERN,
    AspectCandidate,
    PatternTableError,
    extract_all,
    extract_comparative_phrases,
    extract_comparative_tokens,
    extract_pattern_aspects,
    is_comparative_token,
    load_pattern_table,
    parse_pattern_table,
    rank_aspects,
)
from versus.classify import OBJECT_A, OBJECT_B
from versus.rank import NO_WINNER
from versus.tokens import tokenize_with_punct


@pytest.fixture(scope="module")
def patterns():
    return load_pattern_table()


def toks(text):
    return tokenize_with_punct(text)


def phrases(candidates):
    return [c.phrase for c in candidates]


# --- method 1: comparative tokens -------------------------------------------

def test_comparative_token_simple():
    out = extract_comparative_tokens(toks("Python is faster than Matlab"))
    assert phrases(out) == ["faster"]
    assert out[0].method == COMP_ADJ


def test_no_comparative_tokens():
    assert extract_comparative_tokens(toks("Python and Matlab differ")) == []


def test_blocklist_filters_false_comparatives():
    out = extract_comparative_tokens(toks("the other option is never better"))
    assert phrases(out) == ["better"]
    assert "other" in ER_BLOCKLIST and "never" in ER_BLOCKLIST


def test_irregular_forms_detected():
    for tok in ("more", "less", "higher", "lower", "worse"):
        assert is_comparative_token(tok)


def test_er_morphology_rules():
    assert is_comparative_token("bigger")
    assert is_comparative_token("smarter")
    assert not is_comparative_token("her")      # too short
    assert not is_comparative_token("tiger")    # blocklisted
    assert not is_comparative_token("order")    # blocklisted


# --- method 2: comparative + preposition -------------------------------------

def test_phrase_quicker_to():
    out = extract_comparative_phrases(toks("quicker to develop code"))
    assert phrases(out) == ["develop code"]
    assert out[0].method == COMP_PHRASE


def test_phrase_better_for():
    out = extract_comparative_phrases(toks("better for scientific computing"))
    assert phrases(out) == ["scientific computing"]


def test_phrase_than_is_not_a_preposition():
    assert extract_comparative_phrases(toks("faster than Matlab")) == []


def test_phrase_skips_leading_stopword():
    out = extract_comparative_phrases(toks("better for the web"))
    assert phrases(out) == ["web"]


def test_phrase_stops_at_punctuation_and_objects():
    out = extract_comparative_phrases(toks("cheaper in storage, obviously"))
    assert phrases(out) == ["storage"]
    out = extract_comparative_phrases(toks("faster in matlab mode"),
                                      objects=(("matlab",),))
    assert out == []


def test_phrase_caps_at_three_tokens():
    out = extract_comparative_phrases(toks("better for very long aspect phrase capture"))
    assert phrases(out) == ["very long aspect"]


# --- method 3: pattern table --------------------------------------------------

def test_pattern_because_of(patterns):
    out = extract_pattern_aspects(toks("because of higher speed"), patterns)
    assert phrases(out) == ["speed"]
    assert out[0].method == PATTERN


def test_pattern_since_it_has(patterns):
    out = extract_pattern_aspects(toks("since it has more options"), patterns)
    assert phrases(out) == ["options"]


def test_pattern_proven_its(patterns):
    out = extract_pattern_aspects(toks("as we have proven its resilience"), patterns)
    assert phrases(out) == ["resilience"]


def test_pattern_reason_for(patterns):
    out = extract_pattern_aspects(toks("reason for this is the price"), patterns)
    assert phrases(out) == ["price"]


def test_pattern_two_token_capture(patterns):
    out = extract_pattern_aspects(toks("because of higher compression ratio"), patterns)
    assert phrases(out) == ["compression ratio"]


def test_pattern_inside_longer_sentence(patterns):
    out = extract_pattern_aspects(
        toks("Teams often pick Python over Matlab because of higher speed."), patterns)
    assert phrases(out) == ["speed"]


def test_custom_pattern_file(tmp_path):
    table = tmp_path / "patterns.txt"
    table.write_text("# custom\nthanks to its {ASPECT:1}\n")
    patterns = load_pattern_table(table)
    out = extract_pattern_aspects(toks("thanks to its portability everywhere"), patterns)
    assert phrases(out) == ["portability"]


@pytest.mark.parametrize("line,fragment", [
    ("because of higher", "slot"),
    ("because {ASPECT:1} of", "last"),
    ("because of {ASPECT:0}", "slot"),
    ("{ASPECT:1}", "at least one"),
    ("bad!token {ASPECT:1}", "literal"),
    ("<> {ASPECT:1}", "alternative"),
])
def test_pattern_parse_errors_name_the_line(line, fragment):
    with pytest.raises(PatternTableError) as err:
        parse_pattern_table("# comment\n\n" + line + "\n")
    assert "line 3" in str(err.value)
    assert fragment in str(err.value)


def test_default_table_matches_repo_copy(patterns):
    from pathlib import Path
    repo_copy = Path(__file__).resolve().parent.parent / "data" / "aspect_patterns.txt"
    assert [p.raw for p in load_pattern_table(repo_copy)] == [p.raw for p in patterns]


# --- union + ranking ----------------------------------------------------------

def test_extract_all_is_union_of_methods(patterns):
    tokens = toks("Wma is cheaper than mp3 in storage because of higher compression ratio.")
    combined = extract_all(tokens, patterns)
    split = (extract_comparative_tokens(tokens)
             + extract_comparative_phrases(tokens)
             + extract_pattern_aspects(tokens, patterns))
    assert [(c.phrase, c.method) for c in combined] == [(c.phrase, c.method) for c in split]


def candidate(phrase, method=COMP_ADJ):
    return AspectCandidate(phrase=phrase, method=method)


def test_rank_aspects_caps_at_k():
    per_sentence = [([candidate(f"phrase{i:02d}")], OBJECT_A) for i in range(12)]
    out = rank_aspects(per_sentence, k=10)
    assert len(out) == 10


def test_rank_aspects_assignment_by_cooccurrence():
    per_sentence = (
        [([candidate("speed")], OBJECT_A)] * 3
        + [([candidate("speed")], OBJECT_B)]
    )
    out = rank_aspects(per_sentence)
    assert out[0].assigned == OBJECT_A
    assert (out[0].count_a, out[0].count_b) == (3, 1)


def test_rank_aspects_tie_breaks_to_total_then_a():
    per_sentence = [([candidate("x")], OBJECT_A), ([candidate("x")], OBJECT_B)]
    assert rank_aspects(per_sentence, totals=(1.0, 5.0))[0].assigned == OBJECT_B
    assert rank_aspects(per_sentence, totals=(5.0, 1.0))[0].assigned == OBJECT_A
    assert rank_aspects(per_sentence, totals=(2.0, 2.0))[0].assigned == OBJECT_A


def test_rank_aspects_orders_by_count_then_phrase():
    per_sentence = [
        ([candidate("bb"), candidate("aa")], OBJECT_A),
        ([candidate("bb"), candidate("cc")], OBJECT_A),
        ([candidate("aa")], OBJECT_B),
    ]
    out = rank_aspects(per_sentence)
    assert phrases(out) == ["aa", "bb", "cc"]  # aa/bb tie on 2, lexicographic


def test_rank_aspects_dedupes_within_sentence():
    per_sentence = [([candidate("same"), candidate("same")], OBJECT_A)]
    out = rank_aspects(per_sentence)
    assert (out[0].count_a, out[0].count_b) == (1, 0)


def test_rank_aspects_excludes_user_aspects():
    per_sentence = [([candidate("speed"), candidate("cost")], OBJECT_A)]
    out = rank_aspects(per_sentence, exclude=["Speed"])
    assert phrases(out) == ["cost"]


def test_rank_aspects_empty_and_none_winner():
    assert rank_aspects([]) == []
    out = rank_aspects([([candidate("idle")], NO_WINNER)], totals=(0.0, 0.0))
    assert out[0].assigned == OBJECT_A
    assert (out[0].count_a, out[0].count_b) == (0, 0)
