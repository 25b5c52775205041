import json
from pathlib import Path

import pytest

from versus.corpus import SentenceStore
from versus.index import Index
from versus.pipeline import ComparisonEngine

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def minicorpus_path() -> Path:
    return DATA_DIR / "minicorpus.jsonl"


@pytest.fixture(scope="session")
def topics_path() -> Path:
    return DATA_DIR / "eval_topics.jsonl"


@pytest.fixture(scope="session")
def store(minicorpus_path) -> SentenceStore:
    s = SentenceStore()
    with open(minicorpus_path, encoding="utf-8") as handle:
        s.ingest(handle)
    return s


@pytest.fixture(scope="session")
def index(store) -> Index:
    return Index.build(store)


@pytest.fixture(scope="session")
def engine(index) -> ComparisonEngine:
    return ComparisonEngine(index)


@pytest.fixture(scope="session")
def topics(topics_path) -> list[dict]:
    return [json.loads(line) for line in topics_path.read_text().splitlines() if line.strip()]
