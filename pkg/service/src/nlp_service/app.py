"""HTTP endpoints implementing the provider wire protocol.

POST /similarity  {"text_a", "text_b"}            -> {"score"}
POST /polarity    {"text"}                        -> {"label", "confidence"}
POST /relation    {"event_a", "context_a",
                   "event_b", "context_b"}        -> {"relation"}
GET  /health                                      -> {"status", "models"}

Models load before the app starts serving, so a reachable endpoint is a
ready endpoint; /health double-checks via an explicit ready flag.
Cosines are clamped to [0, 1]: the callers' score contract is unsigned,
and clamping preserves order around the decision threshold.
"""

from __future__ import annotations

import logging

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .backends import (
    build_relation_prompt,
    make_embedding_backend,
    make_generation_backend,
    make_sentiment_backend,
    normalize_relation_reply,
)
from .config import ServiceConfig

logger = logging.getLogger("nlp_service")


class SimilarityRequest(BaseModel):
    text_a: str
    text_b: str


class PolarityRequest(BaseModel):
    text: str


class RelationRequest(BaseModel):
    event_a: str
    context_a: str = ""
    event_b: str
    context_b: str = ""


def create_app(config: ServiceConfig | None = None) -> FastAPI:
    config = config or ServiceConfig()
    app = FastAPI(title="nlp-service", version="0.1.0")

    state = {"ready": False}
    embedding = make_embedding_backend(config.embedding_model)
    sentiment = make_sentiment_backend(config.sentiment_model)
    generation = make_generation_backend(config.generation_model)
    state["ready"] = True

    def validate_text(value: str, field: str) -> str:
        trimmed = value.strip()
        if not trimmed:
            raise HTTPException(status_code=400, detail=f"{field} must be non-empty")
        if len(value) > config.max_input_chars:
            raise HTTPException(
                status_code=413,
                detail=f"{field} exceeds {config.max_input_chars} characters",
            )
        return value

    def ensure_ready() -> None:
        if not state["ready"]:
            raise HTTPException(status_code=503, detail="models are still loading")

    @app.get("/health")
    def health():
        models = [embedding.name, sentiment.name]
        if generation is not None:
            models.append(generation.name)
        return {"status": "ok" if state["ready"] else "loading", "models": models}

    @app.post("/similarity")
    def similarity(request: SimilarityRequest):
        ensure_ready()
        text_a = validate_text(request.text_a, "text_a")
        text_b = validate_text(request.text_b, "text_b")
        try:
            vec_a = embedding.encode(text_a)
            vec_b = embedding.encode(text_b)
            score = float(np.clip(np.dot(vec_a, vec_b), 0.0, 1.0))
        except HTTPException:
            raise
        except Exception as exc:  # model failure surfaces as 500 with message
            logger.exception("embedding failure")
            raise HTTPException(status_code=500, detail=f"embedding failure: {exc}")
        return {"score": score}

    @app.post("/polarity")
    def polarity(request: PolarityRequest):
        ensure_ready()
        text = validate_text(request.text, "text")
        try:
            label, confidence = sentiment.classify(text)
        except Exception as exc:
            logger.exception("sentiment failure")
            raise HTTPException(status_code=500, detail=f"sentiment failure: {exc}")
        return {"label": label, "confidence": float(confidence)}

    @app.post("/relation")
    def relation(request: RelationRequest):
        ensure_ready()
        if generation is None:
            raise HTTPException(status_code=503, detail="no generation model configured")
        event_a = validate_text(request.event_a, "event_a")
        event_b = validate_text(request.event_b, "event_b")
        prompt = build_relation_prompt(event_a, event_b)
        try:
            reply = generation.complete(prompt)
        except Exception as exc:
            logger.exception("generation failure")
            raise HTTPException(status_code=500, detail=f"generation failure: {exc}")
        return {"relation": normalize_relation_reply(reply)}

    return app
