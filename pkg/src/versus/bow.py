"""Trainable bag-of-words classifier over midspan tokens.

Multinomial logistic regression on raw token counts, L2-regularized,
trained by full-batch gradient descent from an all-zeros start, so a
given training set always produces the same model. Serialization is a
versioned JSON file with weights written as decimal strings for exact
round-trips.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from versus.classify import (
    Classification,
    ComparisonLabel,
    MODEL_BOW,
    Midspan,
    extract_midspan,
)

CLASS_ORDER = (
    ComparisonLabel.BETTER,
    ComparisonLabel.WORSE,
    ComparisonLabel.EQUAL,
    ComparisonLabel.NONE,
)

MODEL_FORMAT = "versus-bow"
MODEL_VERSION = 1


@dataclass
class TrainConfig:
    max_epochs: int = 500
    learning_rate: float = 0.5
    l2: float = 1e-3
    tol: float = 1e-9


@dataclass
class BowModel:
    vocabulary: dict[str, int]
    weights: np.ndarray  # shape (4, |vocabulary| + 1); last column is the bias
    epochs_run: int = 0
    l2: float = 0.0
    loss_history: tuple[float, ...] = ()  # per-epoch loss, not serialized

    def features(self, tokens: Iterable[str]) -> np.ndarray:
        """Raw token-count vector plus the constant bias feature."""
        x = np.zeros(len(self.vocabulary) + 1)
        for tok in tokens:
            idx = self.vocabulary.get(tok)
            if idx is not None:
                x[idx] += 1.0
        x[-1] = 1.0
        return x


def _softmax(scores: np.ndarray) -> np.ndarray:
    shifted = scores - scores.max(axis=-1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=-1, keepdims=True)


def _loss_and_grad(weights: np.ndarray, x: np.ndarray, y: np.ndarray,
                   l2: float) -> tuple[float, np.ndarray]:
    """Mean cross-entropy plus L2 penalty (bias column excluded)."""
    n = x.shape[0]
    probs = _softmax(x @ weights.T)
    reg_mask = np.ones_like(weights)
    reg_mask[:, -1] = 0.0
    data_loss = -np.log(probs[np.arange(n), y]).mean()
    loss = data_loss + 0.5 * l2 * float((weights[:, :-1] ** 2).sum())
    onehot = np.zeros_like(probs)
    onehot[np.arange(n), y] = 1.0
    grad = (probs - onehot).T @ x / n + l2 * weights * reg_mask
    return float(loss), grad


def train_bow(examples: Sequence[tuple[Sequence[str], ComparisonLabel]],
              config: TrainConfig | None = None) -> BowModel:
    """Fit the model on (midspan tokens, label) pairs.

    Every class must be present in the training data. Gradient descent
    uses backtracking on the step size, so the loss never increases from
    one epoch to the next; training stops once the improvement drops
    below config.tol or max_epochs is reached.
    """
    config = config or TrainConfig()
    present = {label for _tokens, label in examples}
    missing = [label.value for label in CLASS_ORDER if label not in present]
    if missing:
        raise ValueError(f"training data is missing classes: {', '.join(missing)}")

    vocabulary: dict[str, int] = {}
    for tokens, _label in examples:
        for tok in tokens:
            if tok not in vocabulary:
                vocabulary[tok] = len(vocabulary)
    vocabulary = {tok: i for i, tok in enumerate(sorted(vocabulary))}

    n = len(examples)
    dim = len(vocabulary) + 1
    x = np.zeros((n, dim))
    y = np.zeros(n, dtype=int)
    class_index = {label: i for i, label in enumerate(CLASS_ORDER)}
    for row, (tokens, label) in enumerate(examples):
        for tok in tokens:
            x[row, vocabulary[tok]] += 1.0
        x[row, -1] = 1.0
        y[row] = class_index[label]

    weights = np.zeros((len(CLASS_ORDER), dim))
    loss, grad = _loss_and_grad(weights, x, y, config.l2)
    history = [loss]
    step = config.learning_rate
    epochs = 0
    for _ in range(config.max_epochs):
        accepted = None
        while step >= 1e-12:
            trial = weights - step * grad
            new_loss, new_grad = _loss_and_grad(trial, x, y, config.l2)
            if new_loss <= loss:
                accepted = (trial, new_loss, new_grad)
                break
            step /= 2.0
        if accepted is None:
            break
        epochs += 1
        improved = loss - accepted[1]
        weights, loss, grad = accepted
        history.append(loss)
        if improved < config.tol:
            break
    return BowModel(vocabulary=vocabulary, weights=weights, epochs_run=epochs,
                    l2=config.l2, loss_history=tuple(history))


def classify_bow(model: BowModel, midspan: Midspan) -> Classification:
    """Softmax over class scores; ties resolve in CLASS_ORDER order.
    Out-of-vocabulary tokens are ignored."""
    probs = _softmax(model.weights @ model.features(midspan.tokens))
    best = int(np.argmax(probs))
    return Classification(CLASS_ORDER[best], float(probs[best]), MODEL_BOW)


def class_probabilities(model: BowModel, midspan: Midspan) -> dict[ComparisonLabel, float]:
    probs = _softmax(model.weights @ model.features(midspan.tokens))
    return {label: float(p) for label, p in zip(CLASS_ORDER, probs)}


def save_model(model: BowModel, path: str | Path) -> None:
    payload = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "classes": [label.value for label in CLASS_ORDER],
        "vocabulary": model.vocabulary,
        "weights": [[repr(float(w)) for w in row] for row in model.weights],
        "epochs_run": model.epochs_run,
        "l2": repr(model.l2),
    }
    Path(path).write_text(json.dumps(payload, ensure_ascii=False, indent=1), encoding="utf-8")


def load_model(path: str | Path) -> BowModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("format") != MODEL_FORMAT:
        raise ValueError(f"{path}: not a {MODEL_FORMAT} file")
    if payload.get("version") != MODEL_VERSION:
        raise ValueError(f"{path}: unsupported version {payload.get('version')!r}")
    if payload.get("classes") != [label.value for label in CLASS_ORDER]:
        raise ValueError(f"{path}: unexpected class order")
    weights = np.array([[float(w) for w in row] for row in payload["weights"]])
    vocabulary = {str(tok): int(i) for tok, i in payload["vocabulary"].items()}
    if weights.shape != (len(CLASS_ORDER), len(vocabulary) + 1):
        raise ValueError(f"{path}: weight matrix shape {weights.shape} does not match vocabulary")
    return BowModel(vocabulary=vocabulary, weights=weights,
                    epochs_run=int(payload.get("epochs_run", 0)),
                    l2=float(payload.get("l2", 0.0)))


# --- training data ---------------------------------------------------------

_BETTER_TEMPLATES = (
    "{a} is better than {b} for {t}",
    "{a} is faster than {b}",
    "{a} is cheaper than {b} in the long run",
    "{a} feels nicer than {b} overall",
    "{a} is safer than {b} when it comes to {t}",
    "most reviews say {a} is easier than {b}",
    "in my team {a} is clearly stronger than {b} at {t}",
)
_WORSE_TEMPLATES = (
    "{a} is worse than {b} at {t}",
    "{a} is slower than {b}",
    "{a} is weaker than {b} in {t}",
    "{a} is harder to set up than {b}",
    "honestly {a} is inferior to {b}",
    "{a} performed worse than {b} in our {t} tests",
)
_EQUAL_TEMPLATES = (
    "{a} is as good as {b}",
    "{a} is similar to {b} for {t}",
    "{a} is roughly equal to {b}",
    "for {t} {a} is about the same as {b}",
)
_NONE_TEMPLATES = (
    "{a} and {b} are both popular for {t}",
    "we installed {a} alongside {b} last week",
    "{a} works together with {b} on most systems",
    "the manual covers {a} and {b} in chapter two",
    "{a} was released years before {b}",
)
_PAIRS = (
    ("python", "matlab"), ("coffee", "tea"), ("mp3", "wma"),
    ("bike", "car"), ("vim", "emacs"), ("react", "angular"),
    ("trains", "planes"), ("android", "ios"),
)
_TOPICS = (
    "speed", "price", "comfort", "syntax", "memory", "battery life",
    "travel", "plotting", "deployment", "maintenance",
)

_TEMPLATES = {
    ComparisonLabel.BETTER: _BETTER_TEMPLATES,
    ComparisonLabel.WORSE: _WORSE_TEMPLATES,
    ComparisonLabel.EQUAL: _EQUAL_TEMPLATES,
    ComparisonLabel.NONE: _NONE_TEMPLATES,
}


def generate_training_records(per_class: int = 50, seed: int = 0) -> list[dict]:
    """Synthetic patterned training records covering all four classes.

    Each record is {"text", "object_a", "object_b", "label"}, the same
    line format the ``train`` CLI command reads.
    """
    rng = random.Random(seed)
    records = []
    for label in CLASS_ORDER:
        templates = _TEMPLATES[label]
        for i in range(per_class):
            template = templates[i % len(templates)]
            a, b = rng.choice(_PAIRS)
            if rng.random() < 0.5:
                a, b = b, a
            text = template.format(a=a, b=b, t=rng.choice(_TOPICS))
            records.append({"text": text, "object_a": a, "object_b": b,
                            "label": label.value})
    rng.shuffle(records)
    return records


def records_to_examples(records: Iterable[dict]) -> list[tuple[tuple[str, ...], ComparisonLabel]]:
    """Convert training records to (midspan tokens, label) pairs."""
    examples = []
    for lineno, record in enumerate(records, start=1):
        try:
            midspan = extract_midspan(record["text"], record["object_a"], record["object_b"])
            label = ComparisonLabel(record["label"])
        except (KeyError, ValueError) as exc:
            raise ValueError(f"training record {lineno}: {exc}") from exc
        examples.append((midspan.tokens, label))
    return examples


def load_training_file(path: str | Path) -> list[tuple[tuple[str, ...], ComparisonLabel]]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for lineno, line in enumerate(handle, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
    return records_to_examples(records)


_TOY_MARKERS = {
    ComparisonLabel.BETTER: "alpha",
    ComparisonLabel.WORSE: "bravo",
    ComparisonLabel.EQUAL: "charlie",
    ComparisonLabel.NONE: "delta",
}
_TOY_FILLERS = ("the", "of", "with", "and", "is", "quite", "some", "very")


def toy_training_set(per_class: int = 20, seed: int = 7) -> list[tuple[tuple[str, ...], ComparisonLabel]]:
    """Linearly separable 4-class set: one disjoint marker token per class
    plus shared filler tokens."""
    rng = random.Random(seed)
    examples = []
    for label, marker in _TOY_MARKERS.items():
        for _ in range(per_class):
            tokens = [rng.choice(_TOY_FILLERS) for _ in range(rng.randrange(0, 5))]
            tokens.insert(rng.randrange(0, len(tokens) + 1), marker)
            examples.append((tuple(tokens), label))
    rng.shuffle(examples)
    return examples
