"""Classify event pairs as Similar, Dissimilar, or Opposite.

Two signals feed the decision: a similarity score in [0, 1] and a binary
polarity label per text.  A pair is Similar when the score clears the
threshold and polarities agree, Opposite when the score clears the
threshold but polarities differ, and Dissimilar otherwise.  A score
exactly at the threshold counts as Dissimilar: both published rules use
strict inequalities, so the boundary has to be assigned somewhere and the
conservative side is to not match.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .events import Event, Triple

DEFAULT_THETA = 0.54


class MatchKind(Enum):
    SIMILAR = "similar"
    DISSIMILAR = "dissimilar"
    OPPOSITE = "opposite"


@dataclass(frozen=True)
class MatchVerdict:
    kind: MatchKind
    score: float
    polarities: tuple[str, str]  # ("P"|"N", "P"|"N")


@dataclass(frozen=True)
class MatchConfig:
    theta: float = DEFAULT_THETA
    # Opposites are most reliably detected on full rendered triples; event
    # pairs still use event-level comparison for plain similarity.
    opposites_on_triples: bool = True

    def __post_init__(self):
        if not 0.0 < self.theta < 1.0:
            raise ValueError(f"theta must lie strictly inside (0, 1), got {self.theta}")


def _normalize(text: str) -> str:
    return " ".join(text.casefold().split())


def select_comparison_text(e1: Event, e2: Event) -> tuple[str, str]:
    """Pick the texts a similarity provider should compare.

    Identical spans (after case-fold and whitespace collapse) are compared
    bare; otherwise each span is concatenated with its sentence context so
    the surrounding words can disambiguate it.
    """
    if _normalize(e1.span) == _normalize(e2.span):
        return e1.span, e2.span
    return _with_context(e1), _with_context(e2)


def _with_context(e: Event) -> str:
    if _normalize(e.context) == _normalize(e.span):
        return e.span
    return f"{e.span} {e.context}"


def classify_texts(text_a: str, text_b: str, sim_provider, pol_provider, cfg: MatchConfig) -> MatchVerdict:
    """Apply the threshold rules to two already-selected texts."""
    score = sim_provider.score(text_a, text_b)
    pol_a = pol_provider.polarity(text_a).label
    pol_b = pol_provider.polarity(text_b).label
    if score > cfg.theta:
        kind = MatchKind.SIMILAR if pol_a == pol_b else MatchKind.OPPOSITE
    else:
        kind = MatchKind.DISSIMILAR
    return MatchVerdict(kind=kind, score=score, polarities=(pol_a, pol_b))


def classify_pair(e1: Event, e2: Event, sim_provider, pol_provider, cfg: MatchConfig) -> MatchVerdict:
    """Classify two events, choosing bare-span vs span-plus-context texts."""
    text_a, text_b = select_comparison_text(e1, e2)
    return classify_texts(text_a, text_b, sim_provider, pol_provider, cfg)


def classify_triple_pair(t1: Triple, t2: Triple, sim_provider, pol_provider, cfg: MatchConfig) -> MatchVerdict:
    """Classify two triples by their rendered "subject relation object" text."""
    return classify_texts(t1.render(), t2.render(), sim_provider, pol_provider, cfg)
