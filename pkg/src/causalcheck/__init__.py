"""Causal-reasoning verdict engine for claim/evidence fact-checking."""

from .events import ClaimCase, Event, EvidenceItem, Provenance, Triple, VerdictLabel
from .matching import (
    DEFAULT_THETA,
    MatchConfig,
    MatchKind,
    MatchVerdict,
    classify_pair,
    classify_triple_pair,
    select_comparison_text,
)
from .reasoner import (
    ReasonerConfig,
    VerdictEngine,
    VerdictResult,
    build_cross_links,
    predict_verdict,
)
from .relations import (
    Relation,
    chain_relation,
    compose,
    is_contradictory,
    negate,
    parse_relation,
)

__version__ = "0.1.0"

__all__ = [
    "ClaimCase",
    "DEFAULT_THETA",
    "Event",
    "EvidenceItem",
    "MatchConfig",
    "MatchKind",
    "MatchVerdict",
    "Provenance",
    "ReasonerConfig",
    "Relation",
    "Triple",
    "VerdictEngine",
    "VerdictLabel",
    "VerdictResult",
    "build_cross_links",
    "chain_relation",
    "classify_pair",
    "classify_triple_pair",
    "compose",
    "is_contradictory",
    "negate",
    "parse_relation",
    "predict_verdict",
    "select_comparison_text",
]
