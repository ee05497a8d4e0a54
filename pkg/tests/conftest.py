"""Shared fixtures: injected providers, worked scenarios, synthetic cases."""

import hashlib

from causalcheck.events import ClaimCase, Event, EvidenceItem, Provenance, Triple, VerdictLabel
from causalcheck.providers import PolarityResult
from causalcheck.relations import Relation


class MapSimilarity:
    """Injected similarity scores keyed by unordered text pair."""

    def __init__(self, scores=None, default=0.1):
        self.scores = {frozenset(k): v for k, v in (scores or {}).items()}
        self.default = default

    def score(self, text_a, text_b):
        if text_a == text_b:
            return 1.0
        return self.scores.get(frozenset((text_a, text_b)), self.default)


class MapPolarity:
    def __init__(self, labels=None, default="P"):
        self.labels = labels or {}
        self.default = default

    def polarity(self, text):
        return PolarityResult(label=self.labels.get(text, self.default), confidence=0.9)


class MapRelation:
    """Injected cross-text relations keyed by ordered span pair."""

    def __init__(self, mapping=None):
        self.mapping = mapping or {}

    def relation(self, event_a, event_b):
        return self.mapping.get((event_a.span, event_b.span), Relation.NO_RELATION)


def _case(case_id, claim_text, claim_triples, evidence):
    """evidence: list of (text, [(subj, rel, obj), ...])."""
    claim = [
        Triple(
            Event(s, claim_text, Provenance.claim()),
            r,
            Event(o, claim_text, Provenance.claim()),
            Provenance.claim(),
        )
        for s, r, o in claim_triples
    ]
    items = []
    for i, (text, triples) in enumerate(evidence):
        prov = Provenance.evidence(i)
        items.append(
            EvidenceItem(
                text=text,
                triples=[
                    Triple(Event(s, text, prov), r, Event(o, text, prov), prov)
                    for s, r, o in triples
                ],
            )
        )
    return ClaimCase(id=case_id, claim_text=claim_text, claim_triples=claim, evidence_items=items)


class WorkedExample:
    def __init__(self, name, case, sim_scores, polarities, relations, expected, trace_must_contain):
        self.name = name
        self.case = case
        self.sim_scores = sim_scores
        self.polarities = polarities
        self.relations = relations
        self.expected = expected
        self.trace_must_contain = trace_must_contain

    def providers(self):
        return (
            MapSimilarity(self.sim_scores),
            MapPolarity(self.polarities),
            MapRelation(self.relations),
        )


def worked_examples():
    """The five hand-traced scenarios with injected oracle providers."""
    examples = []

    # 1. match-fixing: full claim confirmed through a claim-to-evidence
    # cause link plus an equivalent endpoint.
    claim_ctx = "A sumo wrestler committed match-fixing, ending his career in 2011."
    ev_ctx = "He was forced to retire in 2011 after an investigation found him guilty of match-fixing."
    examples.append(
        WorkedExample(
            name="match_fixing_alignment",
            case=_case(
                "worked-1",
                claim_ctx,
                [("committed match-fixing", Relation.CAUSE, "ending")],
                [(ev_ctx, [("investigation", Relation.CAUSE, "retire")])],
            ),
            sim_scores={(f"ending {claim_ctx}", f"retire {ev_ctx}"): 0.6709},
            polarities={},
            relations={("committed match-fixing", "investigation"): Relation.CAUSE},
            expected=VerdictLabel.SUPPORTED,
            trace_must_contain=[
                "'committed match-fixing' --causes--> 'investigation'",
                "'investigation' --causes--> 'retire'",
                "confirmed through transitivity",
            ],
        )
    )

    # 2. exercise: the evidence chain folds to prevents, clashing with the
    # claimed causes.
    claim_ctx = "Daily exercise causes muscle fatigue over time."
    ev_ctx = (
        "Daily low-intensity exercise activates recovery processes, "
        "preventing chronic muscle fatigue and improving stamina."
    )
    examples.append(
        WorkedExample(
            name="exercise_misalignment",
            case=_case(
                "worked-2",
                claim_ctx,
                [("exercising daily", Relation.CAUSE, "muscle fatigue")],
                [
                    (
                        ev_ctx,
                        [
                            ("daily low-intensity exercise", Relation.CAUSE, "recovery processes"),
                            ("recovery processes", Relation.PREVENT, "chronic muscle fatigue"),
                        ],
                    )
                ],
            ),
            sim_scores={
                (f"exercising daily {claim_ctx}", f"daily low-intensity exercise {ev_ctx}"): 0.70,
                (f"muscle fatigue {claim_ctx}", f"chronic muscle fatigue {ev_ctx}"): 0.80,
            },
            polarities={},
            relations={},
            expected=VerdictLabel.REFUTED,
            trace_must_contain=[
                "'recovery processes' --prevents--> 'chronic muscle fatigue'",
                "contradicts the claim 'exercising daily' --causes--> 'muscle fatigue'",
            ],
        )
    )

    # 3. infrastructure: closed causal loop through two cross links.
    claim_ctx = "Poor infrastructure causes economic decline."
    ev_ctx = "Transportation inefficiencies lead to supply chain disruptions and reduced economic activity."
    examples.append(
        WorkedExample(
            name="infrastructure_causal_loop",
            case=_case(
                "worked-3",
                claim_ctx,
                [("poor infrastructure", Relation.CAUSE, "economic decline")],
                [(ev_ctx, [("transportation inefficiencies", Relation.CAUSE, "supply chain disruptions")])],
            ),
            sim_scores={},
            polarities={},
            relations={
                ("poor infrastructure", "transportation inefficiencies"): Relation.CAUSE,
                ("supply chain disruptions", "economic decline"): Relation.CAUSE,
            },
            expected=VerdictLabel.SUPPORTED,
            trace_must_contain=[
                "'poor infrastructure' --causes--> 'transportation inefficiencies'",
                "'transportation inefficiencies' --causes--> 'supply chain disruptions'",
                "'supply chain disruptions' --causes--> 'economic decline'",
                "supported through a causal loop",
            ],
        )
    )

    # 4. population testing: two evidence items reuse the same relation
    # over one equivalent and one opposite endpoint pair.
    claim_ctx = "Population-wide testing would identify hidden carriers."
    ev1_ctx = (
        "Frequent testing would identify hidden carriers, helping "
        "health workers be more effective at contact tracing."
    )
    ev2_ctx = (
        "Frequent testing would identify many such individuals, "
        "unnecessarily sidelining them from work and society."
    )
    obj1_text = f"better contact tracing {ev1_ctx}"
    obj2_text = f"sidelining workers {ev2_ctx}"
    examples.append(
        WorkedExample(
            name="testing_cherry_picking",
            case=_case(
                "worked-4",
                claim_ctx,
                [("testing the population", Relation.CAUSE, "identify hidden carriers")],
                [
                    (ev1_ctx, [("frequent testing", Relation.CAUSE, "better contact tracing")]),
                    (ev2_ctx, [("frequent testing", Relation.CAUSE, "sidelining workers")]),
                ],
            ),
            sim_scores={(obj1_text, obj2_text): 0.61},
            polarities={obj1_text: "P", obj2_text: "N"},
            relations={},
            expected=VerdictLabel.CONFLICTING,
            trace_must_contain=[
                "'frequent testing' --causes--> 'better contact tracing'",
                "'frequent testing' --causes--> 'sidelining workers'",
                "possible cherry-picking",
            ],
        )
    )

    # 5. vaccine: cause followed by prevent folds to the claimed prevent.
    claim_ctx = "Taking the vaccine prevented infection."
    ev_ctx = "The vaccine triggered an immune response that blocked the virus from spreading."
    examples.append(
        WorkedExample(
            name="vaccine_prevention_chain",
            case=_case(
                "worked-5",
                claim_ctx,
                [("taking the vaccine", Relation.PREVENT, "infection")],
                [
                    (
                        ev_ctx,
                        [
                            ("the vaccine", Relation.CAUSE, "immune response"),
                            ("immune response", Relation.PREVENT, "the virus spreading"),
                        ],
                    )
                ],
            ),
            sim_scores={
                (f"taking the vaccine {claim_ctx}", f"the vaccine {ev_ctx}"): 0.80,
                (f"infection {claim_ctx}", f"the virus spreading {ev_ctx}"): 0.70,
            },
            polarities={},
            relations={},
            expected=VerdictLabel.SUPPORTED,
            trace_must_contain=[
                "'the vaccine' --causes--> 'immune response'",
                "'immune response' --prevents--> 'the virus spreading'",
                "'taking the vaccine' --prevents--> 'infection'",
            ],
        )
    )
    return examples


# -- seeded synthetic cases for the oracle-equivalence suite ---------------


def _hash_float(tag: str, seed: int) -> float:
    digest = hashlib.md5(f"{seed}|{tag}".encode()).digest()
    return int.from_bytes(digest[:8], "big") / 2**64


class HashSimilarity:
    """Deterministic pseudo-random scores, skewed low so synthetic link
    graphs stay sparse."""

    def __init__(self, seed: int):
        self.seed = seed

    def score(self, text_a, text_b):
        if text_a == text_b:
            return 1.0
        lo, hi = sorted((text_a, text_b))
        return _hash_float(f"sim|{lo}|{hi}", self.seed) ** 3


class HashPolarity:
    def __init__(self, seed: int):
        self.seed = seed

    def polarity(self, text):
        label = "P" if _hash_float(f"pol|{text}", self.seed) < 0.5 else "N"
        return PolarityResult(label=label, confidence=0.8)


class HashRelation:
    KINDS = [
        Relation.CAUSE,
        Relation.PREVENT,
        Relation.INTEND,
        Relation.ENABLE,
        Relation.NO_RELATION,
        Relation.NO_RELATION,
        Relation.NO_RELATION,
        Relation.NO_RELATION,
    ]

    def __init__(self, seed: int):
        self.seed = seed

    def relation(self, event_a, event_b):
        tag = f"rel|{event_a.span}|{event_a.context}|{event_b.span}|{event_b.context}"
        return self.KINDS[int(_hash_float(tag, self.seed) * len(self.KINDS))]


_SPANS = ["alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf", "hotel"]
_RELS = [Relation.CAUSE, Relation.PREVENT, Relation.INTEND, Relation.ENABLE]


def synthetic_case(seed: int):
    """One seeded random case (1 claim triple, up to 3 evidence triples)
    plus matching deterministic providers."""
    import random

    rng = random.Random(seed)
    spans = rng.sample(_SPANS, rng.randint(4, len(_SPANS)))

    def event(prov):
        span = rng.choice(spans)
        if rng.random() < 0.5:
            return Event(span, source=prov)
        return Event(span, f"reports describe how {span} unfolded", prov)

    def triple(prov):
        while True:
            s, o = event(prov), event(prov)
            if (s.span, s.context) != (o.span, o.context):
                return Triple(s, rng.choice(_RELS), o, prov)

    claim = [triple(Provenance.claim())]
    items = []
    for i in range(rng.randint(0, 3)):
        prov = Provenance.evidence(i)
        items.append(EvidenceItem(text=f"evidence item {i}", triples=[triple(prov)]))
    case = ClaimCase(
        id=f"synth-{seed}",
        claim_text="synthetic claim",
        claim_triples=claim,
        evidence_items=items,
    )
    return case, HashSimilarity(seed), HashPolarity(seed), HashRelation(seed)
