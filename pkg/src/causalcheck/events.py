"""Shared domain model: events, triples, claim cases, verdict labels."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from .relations import Relation, parse_relation, surface_form


@dataclass(frozen=True)
class Provenance:
    """Where an assertion came from: the claim or the i-th evidence item."""

    kind: str  # "claim" | "evidence"
    index: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("claim", "evidence"):
            raise ValueError(f"unknown provenance kind: {self.kind!r}")
        if self.kind == "evidence" and self.index is None:
            raise ValueError("evidence provenance requires an index")

    @classmethod
    def claim(cls) -> "Provenance":
        return cls("claim")

    @classmethod
    def evidence(cls, index: int) -> "Provenance":
        return cls("evidence", index)

    def describe(self) -> str:
        if self.kind == "claim":
            return "claim"
        return f"evidence[{self.index}]"


CLAIM = Provenance.claim()


@dataclass(frozen=True)
class Event:
    """A text span denoting an event plus the sentence it came from.

    An empty context collapses to the span itself, so synthetic inputs can
    be built from bare spans.
    """

    span: str
    context: str = ""
    source: Provenance = CLAIM

    def __post_init__(self):
        if not self.span.strip():
            raise ValueError("event span must be non-empty")
        if not self.context:
            object.__setattr__(self, "context", self.span)

    @classmethod
    def from_json(cls, data: Any, source: Provenance = CLAIM) -> "Event":
        if isinstance(data, str):
            return cls(span=data, source=source)
        return cls(span=data["span"], context=data.get("context", ""), source=source)

    def to_json(self) -> dict:
        return {"span": self.span, "context": self.context}


@dataclass(frozen=True)
class Triple:
    """(subject event, relation, object event) with provenance.

    A stored triple never carries ``no_relation``: pairs without a link are
    simply absent.
    """

    subject: Event
    relation: Relation
    object: Event
    provenance: Provenance = CLAIM

    def __post_init__(self):
        if self.relation is Relation.NO_RELATION:
            raise ValueError("stored triples must carry an informative relation")

    @classmethod
    def from_json(cls, data: dict, provenance: Provenance = CLAIM) -> "Triple":
        return cls(
            subject=Event.from_json(data["subject"], source=provenance),
            relation=parse_relation(data["relation"]),
            object=Event.from_json(data["object"], source=provenance),
            provenance=provenance,
        )

    def to_json(self) -> dict:
        return {
            "subject": self.subject.to_json(),
            "relation": self.relation.value,
            "object": self.object.to_json(),
        }

    def render(self) -> str:
        """Space-joined "subject relation object" surface string."""
        return f"{self.subject.span} {surface_form(self.relation)} {self.object.span}"


class VerdictLabel(Enum):
    SUPPORTED = "Supported"
    REFUTED = "Refuted"
    CONFLICTING = "Conflicting"
    ABSTAIN = "Abstain"

    def __str__(self) -> str:
        return self.value


@dataclass
class EvidenceItem:
    text: str
    triples: list[Triple] = field(default_factory=list)


@dataclass
class ClaimCase:
    """One claim with its evidence items, ready for the verdict engine."""

    id: str
    claim_text: str
    claim_triples: list[Triple]
    evidence_items: list[EvidenceItem] = field(default_factory=list)
    gold_label: Optional[VerdictLabel] = None

    def __post_init__(self):
        if not self.claim_triples:
            raise ValueError(f"case {self.id}: at least one claim triple is required")
        if self.gold_label is VerdictLabel.ABSTAIN:
            raise ValueError("Abstain is never a gold label")

    @classmethod
    def from_json(cls, data: dict) -> "ClaimCase":
        evidence = [
            EvidenceItem(
                text=item["text"],
                triples=[
                    Triple.from_json(t, provenance=Provenance.evidence(i))
                    for t in item.get("triples", [])
                ],
            )
            for i, item in enumerate(data.get("evidence", []))
        ]
        gold = data.get("label")
        return cls(
            id=str(data["id"]),
            claim_text=data["claim"],
            claim_triples=[Triple.from_json(t) for t in data.get("claim_triples", [])],
            evidence_items=evidence,
            gold_label=VerdictLabel(gold) if gold else None,
        )

    def to_json(self) -> dict:
        out: dict = {
            "id": self.id,
            "claim": self.claim_text,
            "claim_triples": [t.to_json() for t in self.claim_triples],
            "evidence": [
                {"text": item.text, "triples": [t.to_json() for t in item.triples]}
                for item in self.evidence_items
            ],
        }
        if self.gold_label is not None:
            out["label"] = self.gold_label.value
        return out
