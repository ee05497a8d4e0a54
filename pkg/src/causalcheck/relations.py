"""Fine-grained event-relation vocabulary and its algebra.

Six relation kinds connect an ordered pair of events.  Four of them are
assertable by extractors (cause, prevent, intend, enable); ``not_cause``
exists as the negation target of the weaker positives and as the
super-property of ``prevent``; ``no_relation`` is the absorbing "no
information" element.

The composition table answers: given r1 on (A, X) and r2 on (X, B), what
holds for (A, B)?  Cells not fixed by the disjointness/negation axioms
follow a min-strength rule over Cause > Enable > Intend, and blocking an
upstream event blocks its downstream consequences.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable


class Relation(Enum):
    CAUSE = "cause"
    PREVENT = "prevent"
    INTEND = "intend"
    ENABLE = "enable"
    NOT_CAUSE = "not_cause"
    NO_RELATION = "no_relation"

    def __str__(self) -> str:
        return self.value


#: Relations that move a chain "forward": a chain of these stays positive.
POSITIVE_KINDS = frozenset({Relation.CAUSE, Relation.ENABLE, Relation.INTEND})

#: Kinds a cross-text relation extractor is allowed to return.
EXTRACTABLE_KINDS = frozenset(
    {Relation.CAUSE, Relation.PREVENT, Relation.INTEND, Relation.ENABLE, Relation.NO_RELATION}
)

_STRENGTH = {Relation.CAUSE: 3, Relation.ENABLE: 2, Relation.INTEND: 1}

_NEGATE = {
    Relation.CAUSE: Relation.PREVENT,
    Relation.PREVENT: Relation.CAUSE,
    Relation.INTEND: Relation.NOT_CAUSE,
    Relation.ENABLE: Relation.NOT_CAUSE,
    Relation.NOT_CAUSE: Relation.NO_RELATION,
    Relation.NO_RELATION: Relation.NO_RELATION,
}

# Pairs that violate a disjointness axiom when asserted on the same
# ordered event pair.  prevent/not_cause is absent: prevent entails
# not_cause rather than contradicting it.
_CONTRADICTORY_PAIRS = frozenset(
    frozenset(p)
    for p in [
        (Relation.CAUSE, Relation.PREVENT),
        (Relation.INTEND, Relation.PREVENT),
        (Relation.ENABLE, Relation.PREVENT),
        (Relation.CAUSE, Relation.NOT_CAUSE),
        (Relation.INTEND, Relation.NOT_CAUSE),
        (Relation.ENABLE, Relation.NOT_CAUSE),
    ]
)


def negate(r: Relation) -> Relation:
    """Relation holding toward the negated object event.

    cause <-> prevent swap; the weak positives (intend, enable) degrade to
    not_cause; not_cause and no_relation carry no information about the
    negated event.
    """
    return _NEGATE[r]


def _build_compose_table() -> dict[tuple[Relation, Relation], Relation]:
    table: dict[tuple[Relation, Relation], Relation] = {}
    for r1 in Relation:
        for r2 in Relation:
            if r1 is Relation.NO_RELATION or r2 is Relation.NO_RELATION:
                out = Relation.NO_RELATION
            elif r1 is Relation.NOT_CAUSE or r2 is Relation.NOT_CAUSE:
                # Absence of causation is not chainable information.
                out = Relation.NO_RELATION
            elif r1 is Relation.PREVENT and r2 is Relation.PREVENT:
                out = Relation.CAUSE  # double negation
            elif r1 is Relation.PREVENT:
                # Blocking an upstream event blocks its downstream consequence.
                out = Relation.PREVENT
            elif r2 is Relation.PREVENT:
                # positive then prevent == negated positive-then-cause
                out = negate(r1)
            else:
                # positive * positive: the weakest modality in the chain wins
                out = min(r1, r2, key=_STRENGTH.__getitem__)
            table[(r1, r2)] = out
    return table


_COMPOSE = _build_compose_table()


def compose(r1: Relation, r2: Relation) -> Relation:
    """Relation inferred for (A, B) given r1 on (A, X) and r2 on (X, B)."""
    return _COMPOSE[(r1, r2)]


def is_contradictory(r1: Relation, r2: Relation) -> bool:
    """True iff asserting both on the same ordered pair violates disjointness."""
    return frozenset((r1, r2)) in _CONTRADICTORY_PAIRS


def chain_relation(path: Iterable[Relation]) -> Relation:
    """Left fold of ``compose`` over a non-empty relation path."""
    it = iter(path)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("chain_relation requires a non-empty path") from None
    for r in it:
        acc = compose(acc, r)
    return acc


_ALIASES = {
    "cause": Relation.CAUSE,
    "causes": Relation.CAUSE,
    "direct-cause": Relation.CAUSE,
    "direct cause": Relation.CAUSE,
    "prevent": Relation.PREVENT,
    "prevents": Relation.PREVENT,
    "intend": Relation.INTEND,
    "intends": Relation.INTEND,
    "intends-to-cause": Relation.INTEND,
    "intend-to-cause": Relation.INTEND,
    "intends to cause": Relation.INTEND,
    "enable": Relation.ENABLE,
    "enables": Relation.ENABLE,
    "not_cause": Relation.NOT_CAUSE,
    "not-cause": Relation.NOT_CAUSE,
    "does-not-cause": Relation.NOT_CAUSE,
    "does not cause": Relation.NOT_CAUSE,
    "no_relation": Relation.NO_RELATION,
    "no-relation": Relation.NO_RELATION,
    "no relation": Relation.NO_RELATION,
}


def parse_relation(text: str) -> Relation:
    """Parse a serialized relation kind, accepting ontology-style aliases."""
    key = " ".join(text.strip().lower().split())
    try:
        return _ALIASES[key]
    except KeyError:
        raise ValueError(f"unknown relation kind: {text!r}") from None


_SURFACE = {
    Relation.CAUSE: "causes",
    Relation.PREVENT: "prevents",
    Relation.INTEND: "intends to cause",
    Relation.ENABLE: "enables",
    Relation.NOT_CAUSE: "does not cause",
    Relation.NO_RELATION: "is unrelated to",
}


def surface_form(r: Relation) -> str:
    """Natural-language verb phrase for rendering triples as text."""
    return _SURFACE[r]
