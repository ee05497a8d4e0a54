"""Parse raw fact-checking corpora and filter them into claim cases.

Two record shapes are supported: QA-style corpora whose answers carry an
``answer_type`` (extractive / abstractive / boolean / unanswerable), and
Wikipedia-style corpora whose evidence carries an ``evidence_kind`` (text
or table-cell).  Filtering runs in three steps, in order:

1. drop uninformative evidence units (boolean / unanswerable answers, or
   table-cell evidence) and any claim left with no usable unit;
2. drop claims whose label the reasoner cannot produce
   (not-enough-evidence / not-enough-info);
3. drop claims whose claim text yields no relation triples.

The emitted report records the count after every step so the chosen order
stays visible in the output rather than hidden in code.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, TextIO, Union

from .events import ClaimCase, Event, EvidenceItem, Provenance, Triple, VerdictLabel
from .relations import Relation

AVERITEC = "averitec"
FEVEROUS = "feverous"

_INFORMATIVE_ANSWER_TYPES = {"extractive", "abstractive"}
_DROPPED_ANSWER_TYPES = {"boolean", "unanswerable"}
_UNHANDLED_LABELS = {"not enough evidence", "not enough info"}

_LABEL_MAP = {
    "supported": VerdictLabel.SUPPORTED,
    "supports": VerdictLabel.SUPPORTED,
    "refuted": VerdictLabel.REFUTED,
    "refutes": VerdictLabel.REFUTED,
    "conflicting evidence/cherrypicking": VerdictLabel.CONFLICTING,
    "conflicting evidence/cherry-picking": VerdictLabel.CONFLICTING,
    "conflicting": VerdictLabel.CONFLICTING,
}


class IngestError(ValueError):
    pass


@dataclass
class RawEvidence:
    text: str
    answer_type: Optional[str] = None
    evidence_kind: Optional[str] = None
    triples: Optional[list[dict]] = None


@dataclass
class RawClaimRecord:
    index: int
    claim: str
    label: str
    evidence: list[RawEvidence]
    claim_triples: Optional[list[dict]] = None
    record_id: Optional[str] = None
    extras: dict = field(default_factory=dict)


@dataclass
class FilterReport:
    """Per-step attrition counts, shaped like a filtering-steps table."""

    dataset: str
    total_claims: int = 0
    total_evidence_units: int = 0
    answer_type_counts: dict = field(default_factory=dict)
    evidence_kind_counts: dict = field(default_factory=dict)
    after_unit_filter: int = 0
    after_label_filter: int = 0
    after_relation_filter: int = 0
    label_distribution: dict = field(default_factory=dict)

    def steps(self) -> list[tuple[str, int]]:
        return [
            ("total_claims", self.total_claims),
            ("with_informative_evidence", self.after_unit_filter),
            ("with_handled_label", self.after_label_filter),
            ("with_claim_relations", self.after_relation_filter),
        ]

    def validate(self) -> None:
        counts = [count for _, count in self.steps()]
        if any(b > a for a, b in zip(counts, counts[1:])):
            raise IngestError(f"filter counts must be non-increasing, got {counts}")

    def to_json(self) -> dict:
        return {
            "dataset": self.dataset,
            "total_claims": self.total_claims,
            "total_evidence_units": self.total_evidence_units,
            "answer_type_counts": dict(sorted(self.answer_type_counts.items())),
            "evidence_kind_counts": dict(sorted(self.evidence_kind_counts.items())),
            "steps": {name: count for name, count in self.steps()},
            "label_distribution": dict(sorted(self.label_distribution.items())),
        }


def map_labels(dataset_kind: str, label_string: str) -> VerdictLabel:
    """Map a dataset label string onto a verdict label, case-insensitively."""
    key = " ".join(label_string.strip().lower().split())
    try:
        return _LABEL_MAP[key]
    except KeyError:
        raise IngestError(
            f"unmapped {dataset_kind} label {label_string!r}; "
            "unhandled labels must be filtered before mapping"
        ) from None


def parse_records(source: Union[str, TextIO], dataset_kind: str = AVERITEC) -> list[RawClaimRecord]:
    """Parse a JSON array of claim records, preserving unknown fields."""
    if dataset_kind not in (AVERITEC, FEVEROUS):
        raise IngestError(f"unknown dataset kind: {dataset_kind!r}")
    text = source if isinstance(source, str) else source.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IngestError(f"malformed JSON at byte offset {exc.pos}: {exc.msg}") from exc
    if not isinstance(data, list):
        raise IngestError("top-level JSON value must be an array of claim records")

    records = []
    for i, raw in enumerate(data):
        if not isinstance(raw, dict):
            raise IngestError(f"record {i}: expected an object, got {type(raw).__name__}")
        for field_name in ("claim", "label", "evidence"):
            if field_name not in raw:
                raise IngestError(f"record {i}: missing mandatory field {field_name!r}")
        triples = raw.get("triples") or {}
        evidence_triples = triples.get("evidence") or []
        evidence = []
        for j, item in enumerate(raw["evidence"]):
            evidence.append(
                RawEvidence(
                    text=item["text"],
                    answer_type=item.get("answer_type"),
                    evidence_kind=item.get("evidence_kind"),
                    triples=evidence_triples[j] if j < len(evidence_triples) else None,
                )
            )
        known = {"claim", "label", "evidence", "triples", "id"}
        records.append(
            RawClaimRecord(
                index=i,
                claim=raw["claim"],
                label=raw["label"],
                evidence=evidence,
                claim_triples=triples.get("claim"),
                record_id=str(raw["id"]) if "id" in raw else None,
                extras={k: v for k, v in raw.items() if k not in known},
            )
        )
    return records


def parse_averitec(source: Union[str, TextIO]) -> list[RawClaimRecord]:
    return parse_records(source, AVERITEC)


def parse_feverous(source: Union[str, TextIO]) -> list[RawClaimRecord]:
    return parse_records(source, FEVEROUS)


def _unit_is_informative(unit: RawEvidence, dataset_kind: str) -> bool:
    if dataset_kind == AVERITEC:
        if unit.answer_type is None:
            return True
        return unit.answer_type.lower() not in _DROPPED_ANSWER_TYPES
    return (unit.evidence_kind or "text").lower() == "text"


def _claim_triples(record: RawClaimRecord, relation_provider) -> list[Triple]:
    if record.claim_triples is not None:
        return [Triple.from_json(t, provenance=Provenance.claim()) for t in record.claim_triples]
    if relation_provider is None:
        return []
    return extract_within_text(record.claim, Provenance.claim(), relation_provider)


def extract_within_text(text: str, provenance: Provenance, relation_provider) -> list[Triple]:
    """Fallback single-text extraction: the whole text is one event pair
    candidate per clause split on connective punctuation."""
    parts = [p.strip() for p in text.replace(";", ",").split(",") if p.strip()]
    triples = []
    for i in range(len(parts) - 1):
        a = Event(parts[i], text, provenance)
        b = Event(parts[i + 1], text, provenance)
        rel = relation_provider.relation(a, b)
        if rel is not Relation.NO_RELATION:
            triples.append(Triple(a, rel, b, provenance))
    return triples


def filter_cases(
    records: list[RawClaimRecord],
    dataset_kind: str,
    relation_provider=None,
) -> tuple[list[ClaimCase], FilterReport]:
    """Apply the three filtering steps and build reasoner-ready cases."""
    if dataset_kind not in (AVERITEC, FEVEROUS):
        raise IngestError(f"unknown dataset kind: {dataset_kind!r}")

    report = FilterReport(dataset=dataset_kind)
    report.total_claims = len(records)
    answer_types: Counter = Counter()
    evidence_kinds: Counter = Counter()
    for record in records:
        report.total_evidence_units += len(record.evidence)
        for unit in record.evidence:
            if unit.answer_type:
                answer_types[unit.answer_type.lower()] += 1
            if unit.evidence_kind:
                evidence_kinds[unit.evidence_kind.lower()] += 1
    report.answer_type_counts = dict(answer_types)
    report.evidence_kind_counts = dict(evidence_kinds)

    # step 1: uninformative units, then claims with nothing left
    survivors: list[tuple[RawClaimRecord, list[RawEvidence]]] = []
    for record in records:
        kept = [u for u in record.evidence if _unit_is_informative(u, dataset_kind)]
        if kept:
            survivors.append((record, kept))
    report.after_unit_filter = len(survivors)

    # step 2: labels the reasoner cannot produce
    labelled: list[tuple[RawClaimRecord, list[RawEvidence], VerdictLabel]] = []
    for record, kept in survivors:
        normalized = " ".join(record.label.strip().lower().split())
        if normalized in _UNHANDLED_LABELS:
            continue
        labelled.append((record, kept, map_labels(dataset_kind, record.label)))
    report.after_label_filter = len(labelled)

    # step 3: claims without relation triples in the claim text
    cases: list[ClaimCase] = []
    for record, kept, gold in labelled:
        claim_triples = _claim_triples(record, relation_provider)
        if not claim_triples:
            continue
        case_id = record.record_id or f"case-{record.index:04d}"
        items = []
        for j, unit in enumerate(kept):
            prov = Provenance.evidence(j)
            if unit.triples is not None:
                triples = [Triple.from_json(t, provenance=prov) for t in unit.triples]
            elif relation_provider is not None:
                triples = extract_within_text(unit.text, prov, relation_provider)
            else:
                triples = []
            items.append(EvidenceItem(text=unit.text, triples=triples))
        cases.append(
            ClaimCase(
                id=case_id,
                claim_text=record.claim,
                claim_triples=claim_triples,
                evidence_items=items,
                gold_label=gold,
            )
        )
    report.after_relation_filter = len(cases)
    report.label_distribution = dict(Counter(c.gold_label.value for c in cases))
    report.validate()
    return cases, report


def cases_to_records(cases: list[ClaimCase]) -> list[RawClaimRecord]:
    """Re-express cases in the raw record shape, for re-filtering."""
    records = []
    for i, case in enumerate(cases):
        records.append(
            RawClaimRecord(
                index=i,
                claim=case.claim_text,
                label=case.gold_label.value if case.gold_label else "Supported",
                evidence=[
                    RawEvidence(text=item.text, triples=[t.to_json() for t in item.triples])
                    for item in case.evidence_items
                ],
                claim_triples=[t.to_json() for t in case.claim_triples],
                record_id=case.id,
            )
        )
    return records


def load_cases(source: Union[str, TextIO]) -> list[ClaimCase]:
    """Load the canonical cases.json produced by the ingest command."""
    text = source if isinstance(source, str) else source.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise IngestError(f"malformed cases JSON at byte offset {exc.pos}: {exc.msg}") from exc
    if not isinstance(data, list):
        raise IngestError("cases file must hold a JSON array")
    cases = []
    for i, entry in enumerate(data):
        try:
            cases.append(ClaimCase.from_json(entry))
        except (KeyError, TypeError, ValueError) as exc:
            raise IngestError(f"invalid case at index {i}: {exc}") from exc
    return cases


def dump_cases(cases: list[ClaimCase]) -> str:
    return json.dumps([c.to_json() for c in cases], indent=2, sort_keys=True, ensure_ascii=False)
