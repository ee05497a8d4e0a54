"""Rule-based verdict engine over claim/evidence relation triples.

Three checks fire over a case, in this order:

1. causal loop: a bounded path from the claim's subject event to its
   object event, through evidence events, whose folded relation equals
   the claim relation;
2. alignment / misalignment: an evidence triple whose endpoints match the
   claim's (directly, through opposites, or through a linking path) and
   whose relation equals, or is disjoint with, the claim relation;
3. cherry-picking: two evidence triples asserting the same relation over
   one matching and one opposing endpoint pair.

Signals aggregate with precedence Conflicting > Refuted > Supported >
Abstain: a cherry-picking flag, or support and refutation arriving
together, means the evidence set is internally conflicting.  Every fired
check appends replayable steps to the derivation trace; a case with an
empty trace is exactly an abstention.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Optional

from .events import ClaimCase, Event, Triple, VerdictLabel
from .matching import (
    DEFAULT_THETA,
    MatchConfig,
    MatchKind,
    MatchVerdict,
    classify_pair,
    classify_triple_pair,
)
from .relations import Relation, chain_relation, is_contradictory, negate, parse_relation, surface_form


class RuleKind(Enum):
    ALIGNMENT = "Alignment"
    MISALIGNMENT = "Misalignment"
    CAUSAL_LOOP = "CausalLoop"
    CHERRY_PICKING = "CherryPicking"
    CROSS_LINK = "CrossLink"
    MATCH_DECISION = "MatchDecision"


@dataclass(frozen=True)
class Premise:
    """One replayable ingredient of a trace step.

    ``kind`` is one of claim, evidence, cross-link, equivalence, opposite,
    dissimilar.  Chain replay folds the relations of evidence and
    cross-link premises; an opposite premise negates the final relation of
    the fold; claim premises state the assertion under test.
    """

    kind: str
    subject: str
    object: str
    relation: Optional[Relation] = None
    note: str = ""

    def clause(self) -> str:
        if self.relation is not None:
            text = f"'{self.subject}' --{surface_form(self.relation)}--> '{self.object}'"
        elif self.kind == "equivalence":
            text = f"'{self.subject}' = '{self.object}'"
        elif self.kind == "opposite":
            text = f"'{self.subject}' opposite of '{self.object}'"
        else:
            text = f"'{self.subject}' vs '{self.object}'"
        if self.note:
            text += f" [{self.note}]"
        return text

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "subject": self.subject,
            "object": self.object,
            "relation": self.relation.value if self.relation else None,
            "note": self.note,
        }


@dataclass
class TraceStep:
    rule: RuleKind
    premises: list[Premise]
    inferred: Optional[str]
    sentence: str

    def to_json(self) -> dict:
        return {
            "rule": self.rule.value,
            "premises": [p.to_json() for p in self.premises],
            "inferred": self.inferred,
            "sentence": self.sentence,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TraceStep":
        premises = [
            Premise(
                kind=p["kind"],
                subject=p["subject"],
                object=p["object"],
                relation=parse_relation(p["relation"]) if p.get("relation") else None,
                note=p.get("note", ""),
            )
            for p in data.get("premises", [])
        ]
        return cls(
            rule=RuleKind(data["rule"]),
            premises=premises,
            inferred=data.get("inferred"),
            sentence=data["sentence"],
        )


@dataclass
class VerdictResult:
    label: VerdictLabel
    trace: list[TraceStep] = field(default_factory=list)

    def render_text(self) -> str:
        if not self.trace:
            return "no rule fired"
        return "\n".join(step.sentence for step in self.trace)

    def to_json(self) -> dict:
        return {"label": self.label.value, "trace": [s.to_json() for s in self.trace]}


@dataclass(frozen=True)
class ReasonerConfig:
    theta: float = DEFAULT_THETA
    max_hops: int = 4
    cherry_loose: bool = False
    opposites_on_triples: bool = True

    def match_config(self) -> MatchConfig:
        return MatchConfig(theta=self.theta, opposites_on_triples=self.opposites_on_triples)


@dataclass
class LinkSet:
    """Claim-to-evidence connections discovered before the rules run."""

    equivalences: dict[tuple, MatchVerdict] = field(default_factory=dict)
    opposites: dict[tuple, MatchVerdict] = field(default_factory=dict)
    cross_triples: list[Triple] = field(default_factory=list)


def _key(event: Event) -> tuple[str, str]:
    return (event.span, event.context)


def _dedup_events(events) -> list[Event]:
    seen = set()
    out = []
    for e in events:
        k = _key(e)
        if k not in seen:
            seen.add(k)
            out.append(e)
    return out


def build_cross_links(
    claim_triples: list[Triple],
    evidence_triples: list[Triple],
    relation_provider,
    similarity,
    polarity,
    config: ReasonerConfig | None = None,
) -> LinkSet:
    """Classify every (claim event, evidence event) pair and link the rest.

    Similar pairs become equivalence links; all other pairs are put to the
    relation provider in both directions, and informative answers become
    cross triples.  Provider failures propagate: a case is never reasoned
    over partially discovered links.
    """
    config = config or ReasonerConfig()
    match_cfg = config.match_config()
    links = LinkSet()
    claim_events = _dedup_events(e for t in claim_triples for e in (t.subject, t.object))
    evidence_events = _dedup_events(e for t in evidence_triples for e in (t.subject, t.object))
    for c in claim_events:
        for e in evidence_events:
            if _key(c) == _key(e):
                continue
            verdict = classify_pair(c, e, similarity, polarity, match_cfg)
            pair = (_key(c), _key(e))
            if verdict.kind is MatchKind.SIMILAR:
                links.equivalences[pair] = verdict
                continue
            if verdict.kind is MatchKind.OPPOSITE:
                links.opposites[pair] = verdict
            for src, dst in ((c, e), (e, c)):
                rel = relation_provider.relation(src, dst)
                if rel is not Relation.NO_RELATION:
                    links.cross_triples.append(
                        Triple(subject=src, relation=rel, object=dst, provenance=dst.source if dst.source.kind == "evidence" else src.source)
                    )
    return links


@dataclass(frozen=True)
class _Edge:
    dst: tuple
    relation: Optional[Relation]
    premise: Premise


class _CaseContext:
    """Per-case working state: match memos, links, and the link graph."""

    def __init__(self, case: ClaimCase, similarity, polarity, relation_provider, config: ReasonerConfig):
        self.case = case
        self.similarity = similarity
        self.polarity = polarity
        self.config = config
        self.match_cfg = config.match_config()
        self._pair_memo: dict[tuple, MatchVerdict] = {}
        self._triple_memo: dict[tuple, MatchVerdict] = {}
        self.evidence_triples: list[tuple[int, Triple]] = [
            (i, t) for i, item in enumerate(case.evidence_items) for t in item.triples
        ]
        self.links = build_cross_links(
            case.claim_triples,
            [t for _, t in self.evidence_triples],
            relation_provider,
            similarity,
            polarity,
            config,
        )
        self.adjacency: dict[tuple, list[_Edge]] = {}
        self._build_graph()

    # -- matching memos ------------------------------------------------------

    def pair_verdict(self, a: Event, b: Event) -> MatchVerdict:
        key = (_key(a), _key(b))
        if key not in self._pair_memo:
            self._pair_memo[key] = classify_pair(a, b, self.similarity, self.polarity, self.match_cfg)
        return self._pair_memo[key]

    def similar(self, a: Event, b: Event) -> bool:
        if _key(a) == _key(b):
            return True
        return self.pair_verdict(a, b).kind is MatchKind.SIMILAR

    def triple_verdict(self, t1: Triple, t2: Triple) -> MatchVerdict:
        key = (t1, t2)
        if key not in self._triple_memo:
            self._triple_memo[key] = classify_triple_pair(
                t1, t2, self.similarity, self.polarity, self.match_cfg
            )
        return self._triple_memo[key]

    def opposite_pair(self, a: Event, b: Event, t_a: Triple, t_b: Triple) -> bool:
        """Opposite endpoints: event-level verdict, or the rendered-triple
        comparison when event-level similarity did not already match."""
        if _key(a) == _key(b):
            return False
        verdict = self.pair_verdict(a, b)
        if verdict.kind is MatchKind.OPPOSITE:
            return True
        if verdict.kind is MatchKind.SIMILAR:
            return False
        if not self.config.opposites_on_triples:
            return False
        return self.triple_verdict(t_a, t_b).kind is MatchKind.OPPOSITE

    # -- link graph ------------------------------------------------------------

    def _add_edge(self, src: tuple, edge: _Edge) -> None:
        self.adjacency.setdefault(src, []).append(edge)

    def _build_graph(self) -> None:
        for i, t in self.evidence_triples:
            premise = Premise(
                kind="evidence",
                subject=t.subject.span,
                object=t.object.span,
                relation=t.relation,
                note=f"evidence {i}",
            )
            self._add_edge(_key(t.subject), _Edge(_key(t.object), t.relation, premise))
        for t in self.links.cross_triples:
            premise = Premise(
                kind="cross-link",
                subject=t.subject.span,
                object=t.object.span,
                relation=t.relation,
                note="cross-link",
            )
            self._add_edge(_key(t.subject), _Edge(_key(t.object), t.relation, premise))
        for (ka, kb), verdict in self.links.equivalences.items():
            note = f"similarity {verdict.score:.2f}"
            pa = Premise(kind="equivalence", subject=ka[0], object=kb[0], note=note)
            pb = Premise(kind="equivalence", subject=kb[0], object=ka[0], note=note)
            self._add_edge(ka, _Edge(kb, None, pa))
            self._add_edge(kb, _Edge(ka, None, pb))

    def paths(self, start: tuple, goal: tuple) -> list[list[_Edge]]:
        """All simple paths from start to goal within the hop bound."""
        if start == goal:
            return []
        results: list[list[_Edge]] = []
        max_hops = self.config.max_hops

        def dfs(node: tuple, visited: set, taken: list[_Edge]) -> None:
            for edge in self.adjacency.get(node, []):
                if edge.dst in visited:
                    continue
                taken.append(edge)
                if edge.dst == goal:
                    results.append(list(taken))
                elif len(taken) < max_hops:
                    visited.add(edge.dst)
                    dfs(edge.dst, visited, taken)
                    visited.remove(edge.dst)
                taken.pop()

        dfs(start, {start}, [])
        return results


def _fold(path: list[_Edge]) -> Optional[Relation]:
    rels = [e.relation for e in path if e.relation is not None]
    if not rels:
        return None
    return chain_relation(rels)


class VerdictEngine:
    """Applies the rule checks to claim cases and renders derivations.

    Pure given its providers; a single instance can evaluate cases from
    multiple workers concurrently.
    """

    def __init__(self, similarity, polarity, relation, config: ReasonerConfig | None = None):
        self.similarity = similarity
        self.polarity = polarity
        self.relation = relation
        self.config = config or ReasonerConfig()

    def predict(self, case: ClaimCase) -> VerdictResult:
        if not case.claim_triples:
            raise ValueError(f"case {case.id}: reasoner requires at least one claim triple")
        ctx = _CaseContext(case, self.similarity, self.polarity, self.relation, self.config)
        signals: list[str] = []
        steps: list[TraceStep] = []
        emitted: set[str] = set()
        for claim_triple in case.claim_triples:
            self._check_causal_loop(ctx, claim_triple, signals, steps, emitted)
            self._check_alignment(ctx, claim_triple, signals, steps, emitted)
        self._check_cherry_picking(ctx, signals, steps, emitted)
        return VerdictResult(label=_aggregate(signals), trace=steps)

    # -- the rule checks -------------------------------------------------------

    def _check_causal_loop(self, ctx, claim_triple, signals, steps, emitted):
        a, r1, b = claim_triple.subject, claim_triple.relation, claim_triple.object
        for path in ctx.paths(_key(a), _key(b)):
            inferred = _fold(path)
            if inferred is None or inferred is not r1:
                continue
            signals.append("supported")
            premises = [p.premise for p in path]
            self._emit_premises(premises, steps, emitted)
            conclusion = f"'{a.span}' --{surface_form(r1)}--> '{b.span}' supported through a causal loop"
            steps.append(_rule_step(RuleKind.CAUSAL_LOOP, premises, inferred, conclusion))

    def _check_alignment(self, ctx, claim_triple, signals, steps, emitted):
        a, r1, b = claim_triple.subject, claim_triple.relation, claim_triple.object
        for idx, ev_triple in ctx.evidence_triples:
            c, r2, d = ev_triple.subject, ev_triple.relation, ev_triple.object
            subj_similar = ctx.similar(a, c)
            obj_similar = ctx.similar(b, d)
            obj_opposite = not obj_similar and ctx.opposite_pair(b, d, claim_triple, ev_triple)
            effective_r2 = negate(r2) if obj_opposite else r2

            ev_premise = Premise(
                kind="evidence", subject=c.span, object=d.span, relation=r2, note=f"evidence {idx}"
            )
            claim_premise = Premise(
                kind="claim", subject=a.span, object=b.span, relation=r1, note="claim"
            )

            def endpoint_premises() -> list[Premise]:
                out = []
                if subj_similar:
                    out.append(Premise(kind="equivalence", subject=a.span, object=c.span))
                if obj_similar:
                    out.append(Premise(kind="equivalence", subject=b.span, object=d.span))
                if obj_opposite:
                    out.append(Premise(kind="opposite", subject=b.span, object=d.span))
                return out

            if subj_similar and (obj_similar or obj_opposite):
                premises = [claim_premise, ev_premise] + endpoint_premises()
                self._conclude_alignment(
                    ctx, signals, steps, emitted, premises, a, r1, b,
                    inferred=effective_r2, transitively=False,
                )
            elif obj_similar or obj_opposite:
                for path in ctx.paths(_key(a), _key(c)):
                    rels = [e.relation for e in path if e.relation is not None]
                    inferred = chain_relation(rels + [effective_r2])
                    premises = (
                        [claim_premise]
                        + [p.premise for p in path]
                        + [ev_premise]
                        + endpoint_premises()
                    )
                    self._conclude_alignment(
                        ctx, signals, steps, emitted, premises, a, r1, b,
                        inferred=inferred, transitively=True,
                    )
            elif subj_similar:
                for path in ctx.paths(_key(d), _key(b)):
                    rels = [e.relation for e in path if e.relation is not None]
                    inferred = chain_relation([r2] + rels)
                    premises = (
                        [claim_premise, ev_premise]
                        + [p.premise for p in path]
                        + endpoint_premises()
                    )
                    self._conclude_alignment(
                        ctx, signals, steps, emitted, premises, a, r1, b,
                        inferred=inferred, transitively=True,
                    )

    def _conclude_alignment(self, ctx, signals, steps, emitted, premises, a, r1, b, inferred, transitively):
        arrow = surface_form(r1)
        if inferred is r1:
            signals.append("supported")
            how = "through transitivity" if transitively else "by matching evidence"
            conclusion = f"'{a.span}' --{arrow}--> '{b.span}' confirmed {how}"
            rule = RuleKind.ALIGNMENT
        elif is_contradictory(inferred, r1):
            signals.append("refuted")
            conclusion = (
                f"'{a.span}' --{surface_form(inferred)}--> '{b.span}' contradicts"
                f" the claim '{a.span}' --{arrow}--> '{b.span}'"
            )
            rule = RuleKind.MISALIGNMENT
        else:
            return
        self._emit_premises([p for p in premises if p.kind != "claim"], steps, emitted)
        steps.append(_rule_step(rule, premises, inferred, conclusion))

    def _check_cherry_picking(self, ctx, signals, steps, emitted):
        loose = ctx.config.cherry_loose
        for (i, t1), (j, t2) in combinations(ctx.evidence_triples, 2):
            if t1.relation is not t2.relation:
                continue
            subj_v = ctx.pair_verdict(t1.subject, t2.subject)
            obj_v = ctx.pair_verdict(t1.object, t2.object)
            subj_sim = ctx.similar(t1.subject, t2.subject)
            obj_sim = ctx.similar(t1.object, t2.object)
            subj_opp = not subj_sim and ctx.opposite_pair(t1.subject, t2.subject, t1, t2)
            obj_opp = not obj_sim and ctx.opposite_pair(t1.object, t2.object, t1, t2)

            flagged = (subj_sim and obj_opp) or (obj_sim and subj_opp)
            mode = "opposite"
            if not flagged and loose:
                flagged = (subj_sim and _loose_mismatch(obj_v)) or (
                    obj_sim and _loose_mismatch(subj_v)
                )
                mode = "dissimilar with differing polarity"
            if not flagged:
                continue

            signals.append("conflicting")
            premises = [
                Premise(kind="evidence", subject=t1.subject.span, object=t1.object.span,
                        relation=t1.relation, note=f"evidence {i}"),
                Premise(kind="evidence", subject=t2.subject.span, object=t2.object.span,
                        relation=t2.relation, note=f"evidence {j}"),
            ]
            if subj_sim:
                premises.append(Premise(kind="equivalence", subject=t1.subject.span, object=t2.subject.span))
                premises.append(Premise(kind="opposite" if obj_opp else "dissimilar",
                                        subject=t1.object.span, object=t2.object.span,
                                        note=f"polarity {obj_v.polarities[0]}/{obj_v.polarities[1]}"))
            else:
                premises.append(Premise(kind="equivalence", subject=t1.object.span, object=t2.object.span))
                premises.append(Premise(kind="opposite" if subj_opp else "dissimilar",
                                        subject=t1.subject.span, object=t2.subject.span,
                                        note=f"polarity {subj_v.polarities[0]}/{subj_v.polarities[1]}"))
            conclusion = (
                f"evidence {i} and evidence {j} reuse '{surface_form(t1.relation)}'"
                f" over {mode} endpoints: possible cherry-picking"
            )
            steps.append(_rule_step(RuleKind.CHERRY_PICKING, premises, "cherry-picking", conclusion))

    # -- trace helpers ---------------------------------------------------------

    @staticmethod
    def _emit_premises(premises: list[Premise], steps: list[TraceStep], emitted: set[str]) -> None:
        for premise in premises:
            if premise.kind not in ("cross-link", "equivalence", "opposite"):
                continue
            clause = premise.clause()
            if clause in emitted:
                continue
            emitted.add(clause)
            rule = RuleKind.CROSS_LINK if premise.kind == "cross-link" else RuleKind.MATCH_DECISION
            inferred = premise.relation.value if premise.relation else premise.kind
            steps.append(TraceStep(rule=rule, premises=[premise], inferred=inferred,
                                   sentence=f"{clause} [{rule.value}]"))


def _loose_mismatch(verdict: MatchVerdict) -> bool:
    return verdict.kind is MatchKind.DISSIMILAR and verdict.polarities[0] != verdict.polarities[1]


def _rule_step(rule: RuleKind, premises: list[Premise], inferred, conclusion: str) -> TraceStep:
    inferred_value = inferred.value if isinstance(inferred, Relation) else inferred
    sentence = ", ".join(p.clause() for p in premises) + f" ⟹ {conclusion} [{rule.value}]"
    return TraceStep(rule=rule, premises=premises, inferred=inferred_value, sentence=sentence)


def _aggregate(signals: list[str]) -> VerdictLabel:
    kinds = set(signals)
    if "conflicting" in kinds or {"supported", "refuted"} <= kinds:
        return VerdictLabel.CONFLICTING
    if "refuted" in kinds:
        return VerdictLabel.REFUTED
    if "supported" in kinds:
        return VerdictLabel.SUPPORTED
    return VerdictLabel.ABSTAIN


def predict_verdict(case: ClaimCase, similarity, polarity, relation,
                    config: ReasonerConfig | None = None) -> VerdictResult:
    return VerdictEngine(similarity, polarity, relation, config).predict(case)
