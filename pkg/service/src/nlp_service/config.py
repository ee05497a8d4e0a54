"""Service deployment configuration."""

from __future__ import annotations

import os

from pydantic import BaseModel, Field, field_validator


class ServiceConfig(BaseModel):
    embedding_model: str = "bundled-lexical"
    sentiment_model: str = "bundled-lexicon"
    generation_model: str | None = None
    host: str = "127.0.0.1"
    port: int = Field(default=8400, ge=1, le=65535)
    max_input_chars: int = Field(default=4000, gt=0)

    @field_validator("embedding_model", "sentiment_model")
    @classmethod
    def _non_empty(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("model id must be non-empty")
        return value

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        env = {
            "embedding_model": os.environ.get("NLP_SERVICE_EMBEDDING"),
            "sentiment_model": os.environ.get("NLP_SERVICE_SENTIMENT"),
            "generation_model": os.environ.get("NLP_SERVICE_GENERATION"),
            "host": os.environ.get("NLP_SERVICE_HOST"),
            "port": os.environ.get("NLP_SERVICE_PORT"),
            "max_input_chars": os.environ.get("NLP_SERVICE_MAX_INPUT"),
        }
        values = {k: v for k, v in env.items() if v is not None}
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
