"""HTTP facade: compare, context, and health endpoints.

The service is read-only: one immutable index (plus optional BoW model)
is shared by all requests. Errors use a uniform envelope
{"error": {"code", "message", "details"}}. Configuration comes from a
JSON file with environment-variable overrides (env > file > defaults).
"""

from __future__ import annotations

import json
import logging
import os
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from versus.bow import load_model
from versus.corpus import SentenceStore, UnknownSentenceError
from versus.index import INDEX_FILENAME, Index, RetrievalLimits
from versus.pipeline import (
    ComparisonEngine,
    ComparisonQuery,
    ConfigurationError,
    QueryError,
    result_to_dict,
)
from versus.rank import RankingConfig

log = logging.getLogger(__name__)

ENV_PREFIX = "VERSUS_"
DEFAULT_CONTEXT_WINDOW = 3


@dataclass
class ServiceConfig:
    host: str = "127.0.0.1"
    port: int = 8080
    index_dir: str | None = None
    model_path: str | None = None
    gamma: float = 0.8
    delta: float = 0.1
    fallback_fast: int = 500
    fallback_full: int = 10000
    cors_origins: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        if not 1 <= self.port <= 65535:
            raise ValueError(f"port must be in 1..65535, got {self.port}")


_FIELD_TYPES = {
    "host": str, "port": int, "index_dir": str, "model_path": str,
    "gamma": float, "delta": float, "fallback_fast": int, "fallback_full": int,
}


def load_service_config(path: str | Path | None = None,
                        env: dict | None = None) -> ServiceConfig:
    """Merge defaults, the JSON config file, and VERSUS_* env overrides."""
    env = os.environ if env is None else env
    values: dict = {}
    if path is not None:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        if not isinstance(data, dict):
            raise ValueError(f"{path}: config must be a JSON object")
        for key in list(_FIELD_TYPES) + ["cors_origins"]:
            if key in data:
                values[key] = data[key]
    for key, caster in _FIELD_TYPES.items():
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = caster(raw)
    raw = env.get(ENV_PREFIX + "CORS_ORIGINS")
    if raw is not None:
        values["cors_origins"] = [origin.strip() for origin in raw.split(",") if origin.strip()]
    return ServiceConfig(**values)


def _error(status: int, code: str, message: str, details=None) -> JSONResponse:
    body = {"error": {"code": code, "message": message}}
    if details is not None:
        body["error"]["details"] = details
    return JSONResponse(status_code=status, content=body)


def load_engine(config: ServiceConfig) -> tuple[ComparisonEngine | None, SentenceStore | None]:
    """Load store, index, and model per the config. Configured paths must
    exist; an unset index_dir just leaves the engine absent."""
    if config.index_dir is None:
        return None, None
    index_dir = Path(config.index_dir)
    if not index_dir.is_dir():
        raise FileNotFoundError(f"index directory not found: {index_dir}")
    store = SentenceStore.load(index_dir)
    index = Index.load(index_dir / INDEX_FILENAME, store)
    bow_model = None
    if config.model_path is not None:
        model_path = Path(config.model_path)
        if not model_path.is_file():
            raise FileNotFoundError(f"model file not found: {model_path}")
        bow_model = load_model(model_path)
    engine = ComparisonEngine(
        index,
        bow_model=bow_model,
        ranking=RankingConfig(gamma=config.gamma, delta=config.delta),
        limits=RetrievalLimits(fallback_fast=config.fallback_fast,
                               fallback_full=config.fallback_full),
    )
    return engine, store


def create_app(config: ServiceConfig | None = None,
               engine: ComparisonEngine | None = None,
               store: SentenceStore | None = None) -> FastAPI:
    """Build the application. Pass an engine directly (tests), or a config
    whose paths are loaded at startup."""
    config = config or ServiceConfig()
    if engine is None and config.index_dir is not None:
        engine, store = load_engine(config)
    if engine is not None and store is None:
        store = engine.index.store

    app = FastAPI(title="versus", docs_url=None, redoc_url=None)
    if config.cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(config.cors_origins),
            allow_methods=["GET", "POST"],
            allow_headers=["*"],
        )

    @app.exception_handler(Exception)
    async def on_unhandled(request: Request, exc: Exception) -> JSONResponse:
        incident = uuid.uuid4().hex
        log.exception("unhandled error (incident %s)", incident)
        return _error(500, "internal", "internal error", {"id": incident})

    @app.post("/api/compare")
    async def handle_compare(request: Request):
        if engine is None:
            return _error(503, "index_unavailable", "no index is loaded")
        try:
            payload = await request.json()
        except Exception:
            return _error(400, "invalid_body", "request body is not valid JSON")
        try:
            query = ComparisonQuery.from_payload(payload)
        except QueryError as exc:
            details = [{"field": field_, "message": message}
                       for field_, message in exc.problems]
            return _error(400, "invalid_query", "invalid comparison query", details)
        try:
            result = engine.compare(query)
        except ConfigurationError as exc:
            return _error(503, "model_unavailable", str(exc))
        return result_to_dict(result)

    @app.get("/api/context/{sentence_id}")
    async def handle_context(sentence_id: int, window: str = str(DEFAULT_CONTEXT_WINDOW)):
        if store is None:
            return _error(503, "index_unavailable", "no corpus is loaded")
        try:
            target = store.get(sentence_id)
        except UnknownSentenceError:
            return _error(404, "unknown_sentence", f"no sentence with id {sentence_id}")
        if window.strip().upper() == "FULL":
            sentences = store.document_sentences(target.document_id)
        else:
            try:
                width = int(window)
                if width < 0:
                    raise ValueError
            except ValueError:
                return _error(400, "invalid_window",
                              "window must be a non-negative integer or FULL")
            sentences = list(store.get_context(sentence_id, width).sentences)
        return {
            "document_id": target.document_id,
            "target_id": sentence_id,
            "sentences": [
                {
                    "sentence_id": record.sentence_id,
                    "position": record.position,
                    "text": record.text,
                    "is_target": record.sentence_id == sentence_id,
                }
                for record in sentences
            ],
        }

    @app.get("/api/health")
    async def handle_health():
        if store is None:
            return {"index": "absent", "model": "absent", "documents": 0,
                    "sentences": 0, "tokens": 0}
        stats = store.stats()
        return {
            "index": "loaded" if engine is not None else "absent",
            "model": "loaded" if engine is not None and engine.bow_model is not None
                     else "absent",
            "documents": stats.document_count,
            "sentences": stats.sentence_count,
            "tokens": stats.token_count,
        }

    return app


def run(config: ServiceConfig) -> None:
    """Start the HTTP server (blocking)."""
    import uvicorn

    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
