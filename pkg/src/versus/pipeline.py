"""End-to-end comparison pipeline and presentation filtering.

compare() runs retrieve -> classify -> negate -> score -> orient ->
aggregate -> mine-aspects and assembles a ComparisonResult. The result
is deterministic for a fixed index, model, and configuration (stage
timings aside). filter_view() applies the clickable-aspect filter to the
evidence lists without recomputing any scores.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from versus import aspects as aspects_mod
from versus.aspects import AspectCandidate, Pattern, load_pattern_table
from versus.bow import BowModel, classify_bow
from versus.classify import (
    Classification,
    ComparisonLabel,
    MODEL_BOW,
    MODEL_DEFAULT,
    OBJECT_A,
    OBJECT_B,
    apply_negation,
    classify_default,
    extract_midspan,
)
from versus.index import Index, RetrievalLimits
from versus.rank import (
    NO_WINNER,
    AggregateScores,
    RankingConfig,
    ScoredSentence,
    aggregate,
    compute_emax,
    orient,
    score_sentence,
)
from versus.tokens import contains_phrase, tokenize, tokenize_with_punct

TIE = "TIE"

GENERATED_ASPECT_LIMIT = 10


class QueryError(ValueError):
    """Invalid comparison query; carries (field, message) pairs."""

    def __init__(self, problems: Sequence[tuple[str, str]]):
        self.problems = list(problems)
        super().__init__("; ".join(f"{field_}: {message}" for field_, message in problems))


class ConfigurationError(RuntimeError):
    """The engine is missing something the query needs (e.g. a BoW model)."""


@dataclass(frozen=True)
class ComparisonQuery:
    object_a: str
    object_b: str
    aspects: tuple[tuple[str, int], ...] = ()
    model: str = MODEL_DEFAULT
    fast_mode: bool = False
    max_evidence_per_side: int = 50

    def __post_init__(self) -> None:
        problems = self._problems()
        if problems:
            raise QueryError(problems)

    def _problems(self) -> list[tuple[str, str]]:
        problems: list[tuple[str, str]] = []
        a_tokens = tokenize(self.object_a) if isinstance(self.object_a, str) else []
        b_tokens = tokenize(self.object_b) if isinstance(self.object_b, str) else []
        if not isinstance(self.object_a, str) or not a_tokens:
            problems.append(("object_a", "must be a non-empty string"))
        if not isinstance(self.object_b, str) or not b_tokens:
            problems.append(("object_b", "must be a non-empty string"))
        if a_tokens and a_tokens == b_tokens:
            problems.append(("object_b", "objects must differ (case-insensitive)"))
        seen_texts = set()
        for i, item in enumerate(self.aspects):
            text, weight = item
            if not isinstance(text, str) or not text.strip():
                problems.append((f"aspects[{i}].text", "must be a non-empty string"))
                continue
            if isinstance(weight, bool) or not isinstance(weight, int) or not 1 <= weight <= 5:
                problems.append((f"aspects[{i}].weight", "must be an integer in 1..5"))
            key = text.strip().lower()
            if key in seen_texts:
                problems.append((f"aspects[{i}].text", f"duplicate aspect {text!r}"))
            seen_texts.add(key)
        if self.model not in (MODEL_DEFAULT, MODEL_BOW):
            problems.append(("model", f"must be {MODEL_DEFAULT} or {MODEL_BOW}"))
        if not isinstance(self.fast_mode, bool):
            problems.append(("fast_mode", "must be a boolean"))
        if isinstance(self.max_evidence_per_side, bool) \
                or not isinstance(self.max_evidence_per_side, int) \
                or self.max_evidence_per_side < 0:
            problems.append(("max_evidence_per_side", "must be a non-negative integer"))
        return problems

    @classmethod
    def from_payload(cls, payload: Mapping) -> "ComparisonQuery":
        """Build a query from a decoded JSON body, validating field types."""
        if not isinstance(payload, Mapping):
            raise QueryError([("body", "must be a JSON object")])
        problems: list[tuple[str, str]] = []
        raw_aspects = payload.get("aspects", [])
        aspects: list[tuple[str, int]] = []
        if not isinstance(raw_aspects, list):
            problems.append(("aspects", "must be a list"))
        else:
            for i, item in enumerate(raw_aspects):
                if isinstance(item, Mapping) and "text" in item and "weight" in item:
                    aspects.append((item["text"], item["weight"]))
                elif isinstance(item, (list, tuple)) and len(item) == 2:
                    aspects.append((item[0], item[1]))
                else:
                    problems.append((f"aspects[{i}]", "must be {text, weight}"))
        model = payload.get("model", MODEL_DEFAULT)
        if isinstance(model, str):
            model = model.upper()
        if problems:
            raise QueryError(problems)
        return cls(
            object_a=payload.get("object_a", ""),
            object_b=payload.get("object_b", ""),
            aspects=tuple(aspects),
            model=model,
            fast_mode=payload.get("fast_mode", False),
            max_evidence_per_side=payload.get("max_evidence_per_side", 50),
        )


@dataclass(frozen=True)
class ComparisonResult:
    query: ComparisonQuery
    totals: AggregateScores
    winner: str  # OBJECT_A, OBJECT_B, or TIE
    pro_a: tuple[ScoredSentence, ...]
    pro_b: tuple[ScoredSentence, ...]
    neutral: tuple[ScoredSentence, ...]
    generated_aspects: tuple[AspectCandidate, ...]
    timings: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class FilteredView:
    pro_a: tuple[ScoredSentence, ...]
    pro_b: tuple[ScoredSentence, ...]
    unknown_phrases: tuple[str, ...]
    warning: bool


class ComparisonEngine:
    """Runs comparisons against one immutable index (and optional model)."""

    def __init__(self, index: Index,
                 bow_model: BowModel | None = None,
                 ranking: RankingConfig | None = None,
                 limits: RetrievalLimits | None = None,
                 patterns: Sequence[Pattern] | None = None):
        self.index = index
        self.bow_model = bow_model
        self.ranking = ranking or RankingConfig()
        self.limits = limits or RetrievalLimits()
        self.patterns = list(patterns) if patterns is not None else load_pattern_table()

    def compare(self, query: ComparisonQuery) -> ComparisonResult:
        if query.model == MODEL_BOW and self.bow_model is None:
            raise ConfigurationError("no BoW model is loaded")
        timings: dict[str, float] = {}
        t0 = time.perf_counter()

        retrieved = self.index.retrieve(query.object_a, query.object_b, query.aspects,
                                        fast_mode=query.fast_mode, limits=self.limits)
        t1 = time.perf_counter()
        timings["retrieve"] = t1 - t0

        classified = []
        for hit in retrieved:
            midspan = extract_midspan(hit.sentence, query.object_a, query.object_b)
            if query.model == MODEL_BOW:
                classification = classify_bow(self.bow_model, midspan)
            else:
                classification = classify_default(midspan)
            classification = apply_negation(classification, midspan)
            classified.append((hit, midspan, classification))
        t2 = time.perf_counter()
        timings["classify"] = t2 - t1

        e_max = compute_emax((cls.label, hit.e) for hit, _m, cls in classified)
        aspect_token_lists = [(text, weight, tokenize(text)) for text, weight in query.aspects]
        scored: list[ScoredSentence] = []
        for hit, midspan, classification in classified:
            sentence_tokens = tokenize(hit.sentence.text)
            matched = tuple((text, weight) for text, weight, toks in aspect_token_lists
                            if contains_phrase(sentence_tokens, toks))
            s = score_sentence(hit.e, e_max, classification.confidence, matched, self.ranking)
            scored.append(ScoredSentence(
                sentence=hit.sentence,
                classification=classification,
                e=hit.e,
                matched_aspects=matched,
                s=s,
                winner=orient(classification, midspan.first_mention),
            ))
        totals = aggregate(scored, query.aspects)
        t3 = time.perf_counter()
        timings["rank"] = t3 - t2

        object_tokens = (tuple(tokenize(query.object_a)), tuple(tokenize(query.object_b)))
        per_sentence = [
            (aspects_mod.extract_all(tokenize_with_punct(sc.sentence.text),
                                     self.patterns, object_tokens), sc.winner)
            for sc in scored
        ]
        generated = aspects_mod.rank_aspects(
            per_sentence,
            totals=(totals.total_a, totals.total_b),
            k=GENERATED_ASPECT_LIMIT,
            exclude=[text for text, _w in query.aspects],
        )
        t4 = time.perf_counter()
        timings["aspects"] = t4 - t3

        evidence_key = lambda sc: (-sc.s, sc.sentence.sentence_id)
        cap = query.max_evidence_per_side
        pro_a = tuple(sorted((sc for sc in scored if sc.winner == OBJECT_A),
                             key=evidence_key)[:cap])
        pro_b = tuple(sorted((sc for sc in scored if sc.winner == OBJECT_B),
                             key=evidence_key)[:cap])
        neutral = tuple(sorted(
            (sc for sc in scored if sc.classification.label is ComparisonLabel.EQUAL),
            key=evidence_key)[:cap])
        if totals.total_a > totals.total_b:
            winner = OBJECT_A
        elif totals.total_b > totals.total_a:
            winner = OBJECT_B
        else:
            winner = TIE
        timings["total"] = time.perf_counter() - t0
        return ComparisonResult(query=query, totals=totals, winner=winner,
                                pro_a=pro_a, pro_b=pro_b, neutral=neutral,
                                generated_aspects=tuple(generated), timings=timings)


def filter_view(result: ComparisonResult,
                selected_generated: Iterable[str] = (),
                selected_user: Iterable[str] = ()) -> FilteredView:
    """Presentation-only evidence filter (disjunctive).

    A sentence stays in column X when it contains a selected user aspect
    (user aspects apply to both columns) or a selected generated aspect
    assigned to column X. An empty selection keeps everything. Totals are
    never recomputed. Unknown phrases are ignored and flagged.
    """
    known_generated = {a.phrase: a.assigned for a in result.generated_aspects}
    known_user = {text.lower(): text for text, _w in result.query.aspects}

    unknown: list[str] = []
    generated_by_side: dict[str, list[str]] = {OBJECT_A: [], OBJECT_B: []}
    for phrase in selected_generated:
        side = known_generated.get(phrase)
        if side is None:
            unknown.append(phrase)
        else:
            generated_by_side[side].append(phrase)
    user_selected: list[str] = []
    for phrase in selected_user:
        if phrase.lower() in known_user:
            user_selected.append(phrase)
        else:
            unknown.append(phrase)

    def filter_column(items: tuple[ScoredSentence, ...], side: str) -> tuple[ScoredSentence, ...]:
        active = user_selected + generated_by_side[side]
        if not active:  # no filter touches this column
            return items
        needles = [tokenize(phrase) for phrase in active]
        return tuple(sc for sc in items
                     if any(contains_phrase(tokenize(sc.sentence.text), needle)
                            for needle in needles))

    return FilteredView(
        pro_a=filter_column(result.pro_a, OBJECT_A),
        pro_b=filter_column(result.pro_b, OBJECT_B),
        unknown_phrases=tuple(unknown),
        warning=bool(unknown),
    )


# --- serialization ----------------------------------------------------------

def scored_to_dict(item: ScoredSentence) -> dict:
    return {
        "sentence_id": item.sentence.sentence_id,
        "document_id": item.sentence.document_id,
        "position": item.sentence.position,
        "text": item.sentence.text,
        "label": item.classification.label.value,
        "confidence": item.classification.confidence,
        "model": item.classification.model,
        "negation_applied": item.classification.negation_applied,
        "e": item.e,
        "s": item.s,
        "winner": item.winner,
        "matched_aspects": [{"text": text, "weight": weight}
                            for text, weight in item.matched_aspects],
    }


def result_to_dict(result: ComparisonResult, include_timings: bool = True) -> dict:
    totals = result.totals
    denominator = totals.total_a + totals.total_b
    share_a = totals.total_a / denominator if denominator > 0 else 0.5
    share_b = totals.total_b / denominator if denominator > 0 else 0.5
    payload = {
        "object_a": result.query.object_a,
        "object_b": result.query.object_b,
        "model": result.query.model,
        "fast_mode": result.query.fast_mode,
        "winner": result.winner,
        "totals": {
            "total_a": totals.total_a,
            "total_b": totals.total_b,
            "per_aspect": [
                {
                    "text": text,
                    "weight": weight,
                    "total_a": totals.per_aspect.get(text, (0.0, 0.0))[0],
                    "total_b": totals.per_aspect.get(text, (0.0, 0.0))[1],
                }
                for text, weight in result.query.aspects
            ],
        },
        "score_bar": {"a": share_a, "b": share_b},
        "pro_a": [scored_to_dict(sc) for sc in result.pro_a],
        "pro_b": [scored_to_dict(sc) for sc in result.pro_b],
        "neutral": [scored_to_dict(sc) for sc in result.neutral],
        "generated_aspects": [
            {
                "phrase": a.phrase,
                "method": a.method,
                "count_a": a.count_a,
                "count_b": a.count_b,
                "assigned": a.assigned,
            }
            for a in result.generated_aspects
        ],
    }
    if include_timings:
        payload["timings"] = dict(result.timings)
    return payload


def result_to_json(result: ComparisonResult, include_timings: bool = True) -> str:
    return json.dumps(result_to_dict(result, include_timings=include_timings),
                      ensure_ascii=False)
