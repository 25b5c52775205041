"""Mining supplementary comparison aspects from retrieved sentences.

Three extractors run over each sentence: single comparative tokens,
comparative-plus-preposition phrases ("quicker to develop code" yields
"develop code"), and a user-extensible pattern table ("because of higher
speed" yields "speed"). Candidates are pooled over all sentences and
each surviving phrase is assigned to the object whose winning sentences
mention it more often.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from versus.classify import OBJECT_A, OBJECT_B
from versus.tokens import is_word_token

COMP_ADJ = "COMP_ADJ"
COMP_PHRASE = "COMP_PHRASE"
PATTERN = "PATTERN"

IRREGULAR_COMPARATIVES = {
    "better", "worse", "faster", "slower", "easier", "harder", "cheaper",
    "safer", "stronger", "weaker", "quicker", "nicer", "cleaner",
    "higher", "lower", "more", "less",
}

# common "-er" words that are not comparative forms
ER_BLOCKLIST = {
    "other", "another", "never", "over", "under", "after", "whether",
    "either", "neither", "number", "user", "server", "rather", "together",
    "whatever", "whenever", "wherever", "whoever", "however", "offer",
    "order", "letter", "matter", "paper", "power", "water", "summer",
    "winter", "answer", "corner", "center", "chapter", "character",
    "computer", "consider", "cover", "customer", "designer", "developer",
    "dinner", "driver", "engineer", "father", "mother", "brother",
    "sister", "daughter", "filter", "finger", "folder", "former",
    "gather", "manager", "manner", "master", "member", "monster",
    "officer", "owner", "partner", "player", "printer", "reader",
    "remember", "river", "rubber", "silver", "singer", "soccer",
    "speaker", "spider", "super", "teacher", "tiger", "trigger",
    "wonder", "worker", "writer", "inner", "outer", "upper", "proper",
    "laser", "layer", "leader", "ladder", "hunger", "gender", "deliver",
    "sheer", "clever", "eager", "utter", "bitter", "temper", "thunder",
    "timber", "tender", "cancer", "cipher", "copper", "hacker", "tracker",
    "differ", "prefer", "refer", "transfer", "register", "render",
    "suffer", "wander", "whisper", "bother", "discover", "recover",
    "encounter", "administer", "trouser", "folder", "buffer", "counter",
}

STOPWORDS = {
    "the", "a", "an", "this", "that", "these", "those", "it", "its",
    "his", "her", "my", "your", "our", "their", "some", "any",
    "is", "are", "was", "were", "be", "been", "being",
}
CONJUNCTIONS = {"and", "or", "but", "nor", "yet", "so"}
PHRASE_PREPOSITIONS = {"to", "for", "at", "in", "with", "on"}
_CAPTURE_STOP = STOPWORDS | CONJUNCTIONS | {
    "than", "of", "for", "to", "at", "in", "with", "on", "by", "from", "as",
    "over", "about", "when", "while", "because", "since",
}

DEFAULT_PATTERN_FILE = "aspect_patterns.txt"


class PatternTableError(ValueError):
    """The aspect pattern file could not be parsed."""


@dataclass(frozen=True)
class AspectCandidate:
    phrase: str
    method: str  # COMP_ADJ, COMP_PHRASE, or PATTERN
    count_a: int = 0
    count_b: int = 0
    assigned: str | None = None


def is_comparative_token(token: str) -> bool:
    if token in IRREGULAR_COMPARATIVES:
        return True
    if len(token) < 5 or not token.endswith("er") or token in ER_BLOCKLIST:
        return False
    return len(token) - 2 >= 3


def extract_comparative_tokens(tokens: Sequence[str]) -> list[AspectCandidate]:
    """Method 1: every comparative token is itself a candidate phrase."""
    return [AspectCandidate(phrase=tok, method=COMP_ADJ)
            for tok in tokens if is_word_token(tok) and is_comparative_token(tok)]


def _object_starts(tokens: Sequence[str], objects: Sequence[Sequence[str]]) -> set[int]:
    starts: set[int] = set()
    for obj in objects:
        m = len(obj)
        if m == 0:
            continue
        for i in range(len(tokens) - m + 1):
            if all(tokens[i + j] == obj[j] for j in range(m)):
                starts.add(i)
    return starts


def _capture(tokens: Sequence[str], start: int, max_tokens: int,
             blocked_starts: set[int]) -> list[str]:
    """Up to ``max_tokens`` consecutive content tokens from ``start``,
    stopping at punctuation, stop/conjunction words, or an object mention.
    Leading stopwords are skipped."""
    i = start
    while i < len(tokens) and is_word_token(tokens[i]) and tokens[i] in STOPWORDS \
            and i not in blocked_starts:
        i += 1
    captured: list[str] = []
    while i < len(tokens) and len(captured) < max_tokens:
        tok = tokens[i]
        if not is_word_token(tok) or tok in _CAPTURE_STOP or i in blocked_starts:
            break
        captured.append(tok)
        i += 1
    return captured


def extract_comparative_phrases(tokens: Sequence[str],
                                objects: Sequence[Sequence[str]] = ()) -> list[AspectCandidate]:
    """Method 2: comparative token + preposition, then 1-3 content tokens."""
    blocked = _object_starts(tokens, objects)
    candidates = []
    for i, tok in enumerate(tokens):
        if not is_word_token(tok) or not is_comparative_token(tok):
            continue
        if i + 1 >= len(tokens) or tokens[i + 1] not in PHRASE_PREPOSITIONS:
            continue
        captured = _capture(tokens, i + 2, 3, blocked)
        if captured:
            candidates.append(AspectCandidate(phrase=" ".join(captured), method=COMP_PHRASE))
    return candidates


# --- pattern table ----------------------------------------------------------

_LIT = "lit"
_COMP = "comp"
_ALT = "alt"
_SLOT = "slot"


@dataclass(frozen=True)
class Pattern:
    raw: str
    parts: tuple[tuple[str, object], ...]  # (kind, payload); slot is last


def parse_pattern(line: str, lineno: int) -> Pattern:
    parts: list[tuple[str, object]] = []
    pieces = line.split()
    for piece in pieces:
        if piece.startswith("{ASPECT:") and piece.endswith("}"):
            digits = piece[len("{ASPECT:"):-1]
            if not digits.isdigit() or not 1 <= int(digits) <= 4:
                raise PatternTableError(
                    f"line {lineno}: bad capture slot {piece!r} (use {{ASPECT:1}}..{{ASPECT:4}})")
            parts.append((_SLOT, int(digits)))
        elif piece == "<comp>":
            parts.append((_COMP, None))
        elif piece.startswith("<") and piece.endswith(">"):
            alternatives = tuple(alt for alt in piece[1:-1].split("|") if alt)
            if not alternatives:
                raise PatternTableError(f"line {lineno}: empty alternative group {piece!r}")
            parts.append((_ALT, frozenset(a.lower() for a in alternatives)))
        else:
            if not piece.replace("'", "").isalnum():
                raise PatternTableError(f"line {lineno}: bad literal token {piece!r}")
            parts.append((_LIT, piece.lower()))
    slots = [i for i, (kind, _p) in enumerate(parts) if kind == _SLOT]
    if len(slots) != 1:
        raise PatternTableError(f"line {lineno}: exactly one {{ASPECT:n}} slot is required")
    if slots[0] != len(parts) - 1:
        raise PatternTableError(f"line {lineno}: the {{ASPECT:n}} slot must come last")
    if len(parts) < 2:
        raise PatternTableError(f"line {lineno}: pattern needs at least one token before the slot")
    return Pattern(raw=line, parts=tuple(parts))


def parse_pattern_table(text: str) -> list[Pattern]:
    patterns = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        patterns.append(parse_pattern(line, lineno))
    return patterns


def load_pattern_table(path: str | Path | None = None) -> list[Pattern]:
    """Parse the pattern file at ``path``, or the bundled default table."""
    if path is None:
        text = resources.files("versus").joinpath(f"data/{DEFAULT_PATTERN_FILE}") \
            .read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_pattern_table(text)


def extract_pattern_aspects(tokens: Sequence[str], patterns: Sequence[Pattern],
                            objects: Sequence[Sequence[str]] = ()) -> list[AspectCandidate]:
    """Method 3: hand-crafted patterns with a trailing capture slot."""
    blocked = _object_starts(tokens, objects)
    candidates = []
    n = len(tokens)
    for pattern in patterns:
        fixed = pattern.parts[:-1]
        _kind, slot_max = pattern.parts[-1]
        for start in range(max(0, n - len(fixed) + 1)):
            if not _fixed_parts_match(tokens, start, fixed):
                continue
            captured = _capture(tokens, start + len(fixed), int(slot_max), blocked)
            if captured:
                candidates.append(AspectCandidate(phrase=" ".join(captured), method=PATTERN))
    return candidates


def _fixed_parts_match(tokens: Sequence[str], start: int,
                       fixed: Sequence[tuple[str, object]]) -> bool:
    for offset, (kind, payload) in enumerate(fixed):
        tok = tokens[start + offset]
        if not is_word_token(tok):
            return False
        if kind == _LIT and tok != payload:
            return False
        if kind == _COMP and not is_comparative_token(tok):
            return False
        if kind == _ALT and tok not in payload:
            return False
    return True


def extract_all(tokens: Sequence[str], patterns: Sequence[Pattern],
                objects: Sequence[Sequence[str]] = ()) -> list[AspectCandidate]:
    """Union of the three extraction methods on one sentence."""
    return (extract_comparative_tokens(tokens)
            + extract_comparative_phrases(tokens, objects)
            + extract_pattern_aspects(tokens, patterns, objects))


def rank_aspects(per_sentence: Iterable[tuple[Sequence[AspectCandidate], str]],
                 totals: tuple[float, float] = (0.0, 0.0),
                 k: int = 10,
                 exclude: Iterable[str] = ()) -> list[AspectCandidate]:
    """Pool per-sentence candidates, dedupe by phrase, assign each phrase
    to the object whose winning sentences contain it more often, and return
    the top ``k`` by total count (phrase as tie-break). Phrases in
    ``exclude`` (the user's own aspects) are dropped.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    excluded = {phrase.strip().lower() for phrase in exclude}
    counts: dict[str, list[int]] = {}  # phrase -> [count_a, count_b]
    methods: dict[str, str] = {}
    for candidates, winner in per_sentence:
        seen = []
        for candidate in candidates:
            if candidate.phrase in seen:
                continue
            seen.append(candidate.phrase)
            if candidate.phrase in excluded:
                continue
            tally = counts.setdefault(candidate.phrase, [0, 0])
            methods.setdefault(candidate.phrase, candidate.method)
            if winner == OBJECT_A:
                tally[0] += 1
            elif winner == OBJECT_B:
                tally[1] += 1

    ranked = sorted(counts, key=lambda phrase: (-sum(counts[phrase]), phrase))
    total_a, total_b = totals
    results = []
    for phrase in ranked[:k]:
        count_a, count_b = counts[phrase]
        if count_a > count_b:
            assigned = OBJECT_A
        elif count_b > count_a:
            assigned = OBJECT_B
        elif total_b > total_a:
            assigned = OBJECT_B
        else:
            assigned = OBJECT_A
        results.append(AspectCandidate(phrase=phrase, method=methods[phrase],
                                       count_a=count_a, count_b=count_b,
                                       assigned=assigned))
    return results
