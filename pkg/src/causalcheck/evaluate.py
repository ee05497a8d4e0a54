"""Precision / recall / F1 under the strict and tolerant regimes.

The two regimes differ only in recall.  Tolerant treats abstentions as
out of scope: recall is the share of cases answered at all, precision the
share of answered cases that were right.  Strict expects an answer
everywhere, so every abstention is a false negative and recall becomes
correct over total.  Any ratio with a zero denominator is defined as 0.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .events import VerdictLabel


class EvalMode(Enum):
    STRICT = "strict"
    TOLERANT = "tolerant"


class Aggregation(Enum):
    MICRO = "micro"
    MACRO = "macro"


@dataclass(frozen=True)
class EvalConfig:
    mode: EvalMode = EvalMode.TOLERANT
    aggregation: Aggregation = Aggregation.MICRO


@dataclass
class Metrics:
    precision: float
    recall: float
    f1: float
    total: int
    answered: int
    correct: int
    abstained: int
    mode: EvalMode
    aggregation: Aggregation
    per_label: Optional[dict] = None

    def to_json(self) -> dict:
        out = {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "total": self.total,
            "answered": self.answered,
            "correct": self.correct,
            "abstained": self.abstained,
            "mode": self.mode.value,
            "aggregation": self.aggregation.value,
        }
        if self.per_label is not None:
            out["per_label"] = self.per_label
        return out


def _ratio(num: float, den: float) -> float:
    return num / den if den else 0.0


def _harmonic(p: float, r: float) -> float:
    return _ratio(2 * p * r, p + r)


_LABEL_ORDER = [VerdictLabel.SUPPORTED, VerdictLabel.REFUTED, VerdictLabel.CONFLICTING]


def score(predictions: list[tuple[VerdictLabel, VerdictLabel]], cfg: EvalConfig) -> Metrics:
    """Score (predicted, gold) pairs; gold labels must never be Abstain."""
    for predicted, gold in predictions:
        if gold is VerdictLabel.ABSTAIN:
            raise ValueError("gold labels must never be Abstain")

    total = len(predictions)
    answered = sum(1 for p, _ in predictions if p is not VerdictLabel.ABSTAIN)
    correct = sum(1 for p, g in predictions if p is not VerdictLabel.ABSTAIN and p is g)
    abstained = total - answered

    per_label = None
    if cfg.aggregation is Aggregation.MICRO:
        precision = _ratio(correct, answered)
        if cfg.mode is EvalMode.TOLERANT:
            recall = _ratio(answered, total)
        else:
            recall = _ratio(correct, total)
    else:
        labels = [lab for lab in _LABEL_ORDER if any(g is lab for _, g in predictions)]
        per_label = {}
        precisions, recalls = [], []
        for lab in labels:
            predicted_l = sum(1 for p, _ in predictions if p is lab)
            correct_l = sum(1 for p, g in predictions if p is lab and g is lab)
            if cfg.mode is EvalMode.TOLERANT:
                denom = sum(
                    1 for p, g in predictions if g is lab and p is not VerdictLabel.ABSTAIN
                )
            else:
                denom = sum(1 for _, g in predictions if g is lab)
            p_l = _ratio(correct_l, predicted_l)
            r_l = _ratio(correct_l, denom)
            per_label[lab.value] = {
                "precision": p_l,
                "recall": r_l,
                "f1": _harmonic(p_l, r_l),
                "support": sum(1 for _, g in predictions if g is lab),
            }
            precisions.append(p_l)
            recalls.append(r_l)
        precision = _ratio(sum(precisions), len(precisions))
        recall = _ratio(sum(recalls), len(recalls))

    return Metrics(
        precision=precision,
        recall=recall,
        f1=_harmonic(precision, recall),
        total=total,
        answered=answered,
        correct=correct,
        abstained=abstained,
        mode=cfg.mode,
        aggregation=cfg.aggregation,
        per_label=per_label,
    )


@dataclass(frozen=True)
class ReportEntry:
    test_set: str
    source: str
    metrics: Metrics

    def row_label(self) -> str:
        suffix = "(S)" if self.metrics.mode is EvalMode.STRICT else "(T)"
        return f"{self.test_set} {suffix}"


def render_report(entries: list[ReportEntry], fmt: str = "csv") -> str:
    """Render metrics rows; byte-stable for identical inputs."""
    if not entries:
        raise ValueError("cannot render an empty report")
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["test_set", "knowledge_source", "precision", "recall", "f1"])
        for entry in entries:
            m = entry.metrics
            writer.writerow(
                [entry.row_label(), entry.source, f"{m.precision:.4f}", f"{m.recall:.4f}", f"{m.f1:.4f}"]
            )
        return buffer.getvalue()
    if fmt == "text":
        rows = [("Test Set", "Knowledge Source", "P", "R", "F1")]
        for entry in entries:
            m = entry.metrics
            rows.append(
                (entry.row_label(), entry.source, f"{m.precision:.4f}", f"{m.recall:.4f}", f"{m.f1:.4f}")
            )
        widths = [max(len(row[i]) for row in rows) for i in range(5)]
        lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip() for row in rows]
        lines.insert(1, "-" * max(len(line) for line in lines))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format: {fmt!r}")


def write_report(entries: list[ReportEntry], path: str, fmt: str = "csv") -> None:
    content = render_report(entries, fmt)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(content)
