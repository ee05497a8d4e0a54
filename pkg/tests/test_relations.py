import itertools
from functools import reduce

import pytest

from causalcheck.relations import (
    EXTRACTABLE_KINDS,
    POSITIVE_KINDS,
    Relation,
    chain_relation,
    compose,
    is_contradictory,
    negate,
    parse_relation,
    surface_form,
)

C, P, I, E = Relation.CAUSE, Relation.PREVENT, Relation.INTEND, Relation.ENABLE
NC, NR = Relation.NOT_CAUSE, Relation.NO_RELATION

# Hand-enumerated oracle table, written cell by cell from the axioms:
# double negation, prevent-blocks-downstream, weakest-positive, and
# not_cause / no_relation absorption.  Kept independent of the
# implementation's table construction on purpose.
HAND_TABLE = {
    (C, C): C, (C, P): P, (C, I): I, (C, E): E, (C, NC): NR, (C, NR): NR,
    (P, C): P, (P, P): C, (P, I): P, (P, E): P, (P, NC): NR, (P, NR): NR,
    (I, C): I, (I, P): NC, (I, I): I, (I, E): I, (I, NC): NR, (I, NR): NR,
    (E, C): E, (E, P): NC, (E, I): I, (E, E): E, (E, NC): NR, (E, NR): NR,
    (NC, C): NR, (NC, P): NR, (NC, I): NR, (NC, E): NR, (NC, NC): NR, (NC, NR): NR,
    (NR, C): NR, (NR, P): NR, (NR, I): NR, (NR, E): NR, (NR, NC): NR, (NR, NR): NR,
}


def oracle_fold(path):
    return reduce(lambda a, b: HAND_TABLE[(a, b)], path)


class TestNegate:
    def test_cause_prevent_swap(self):
        assert negate(C) is P
        assert negate(P) is C

    def test_weak_positives_degrade(self):
        assert negate(I) is NC
        assert negate(E) is NC

    def test_no_information_kinds(self):
        assert negate(NC) is NR
        assert negate(NR) is NR

    def test_double_negation_restores_cause_prevent(self):
        assert negate(negate(C)) is C
        assert negate(negate(P)) is P


class TestCompose:
    def test_total_over_all_36_pairs(self):
        for r1, r2 in itertools.product(Relation, Relation):
            assert isinstance(compose(r1, r2), Relation)

    def test_matches_hand_enumerated_table(self):
        for pair, expected in HAND_TABLE.items():
            assert compose(*pair) is expected, pair

    def test_transitivity_of_cause(self):
        assert compose(C, C) is C

    def test_cause_then_prevent_is_prevent(self):
        assert compose(C, P) is P

    def test_double_prevent_is_cause(self):
        assert compose(P, P) is C

    def test_enable_then_cause_keeps_enable(self):
        assert compose(E, C) is E

    def test_no_relation_absorbs(self):
        for r in Relation:
            assert compose(r, NR) is NR
            assert compose(NR, r) is NR

    def test_prevent_second_position_acts_as_negated_cause(self):
        for r1 in POSITIVE_KINDS:
            assert compose(r1, P) is negate(compose(r1, C))


class TestContradiction:
    DISJOINT = [(C, P), (I, P), (E, P), (C, NC), (I, NC), (E, NC)]

    def test_listed_pairs_contradict(self):
        for r1, r2 in self.DISJOINT:
            assert is_contradictory(r1, r2)

    def test_symmetric(self):
        for r1, r2 in itertools.product(Relation, Relation):
            assert is_contradictory(r1, r2) == is_contradictory(r2, r1)

    def test_irreflexive_over_assertable_kinds(self):
        for r in (C, P, I, E):
            assert not is_contradictory(r, r)

    def test_prevent_entails_not_cause_so_no_conflict(self):
        assert not is_contradictory(P, NC)

    def test_no_relation_never_contradicts(self):
        for r in Relation:
            assert not is_contradictory(r, NR)

    def test_exactly_the_listed_pairs(self):
        expected = {frozenset(p) for p in self.DISJOINT}
        found = {
            frozenset((r1, r2))
            for r1, r2 in itertools.product(Relation, Relation)
            if is_contradictory(r1, r2)
        }
        assert found == expected


class TestChainRelation:
    def test_cause_chain(self):
        assert chain_relation([C, C, C]) is C

    def test_double_prevent(self):
        assert chain_relation([P, P]) is C

    def test_singleton(self):
        assert chain_relation([C]) is C

    def test_empty_path_rejected(self):
        with pytest.raises(ValueError):
            chain_relation([])

    def test_agrees_with_oracle_fold_up_to_length_4(self):
        for n in range(1, 5):
            for path in itertools.product(Relation, repeat=n):
                assert chain_relation(path) is oracle_fold(path), path

    def test_prevent_parity(self):
        # Over paths of assertable positives and prevents: whenever the
        # chain keeps information (is not no_relation), it lands on the
        # negative side (prevent or not_cause) iff the prevent count is odd.
        kinds = [C, E, I, P]
        for n in range(1, 5):
            for path in itertools.product(kinds, repeat=n):
                result = chain_relation(path)
                if result is NR:
                    continue
                odd = path.count(P) % 2 == 1
                assert (result in (P, NC)) == odd, path
                if not odd:
                    assert result in POSITIVE_KINDS, path


class TestParsing:
    def test_canonical_round_trip(self):
        for r in Relation:
            assert parse_relation(r.value) is r

    def test_ontology_aliases(self):
        assert parse_relation("direct-cause") is C
        assert parse_relation("intends-to-cause") is I
        assert parse_relation("enables") is E
        assert parse_relation("does-not-cause") is NC

    def test_case_and_whitespace_insensitive(self):
        assert parse_relation("  Prevents ") is P
        assert parse_relation("No Relation") is NR

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            parse_relation("correlates")

    def test_extractable_kinds(self):
        assert NC not in EXTRACTABLE_KINDS
        assert len(EXTRACTABLE_KINDS) == 5

    def test_surface_forms(self):
        assert surface_form(C) == "causes"
        assert surface_form(NC) == "does not cause"
