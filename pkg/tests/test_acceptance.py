"""Acceptance gate: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the PASS lines.
"""

import itertools
import json
import random
import time
from contextlib import contextmanager

from click.testing import CliRunner

from conftest import synthetic_case, worked_examples
from oracle_reasoner import OracleReasoner
from test_cli import lexical_corpus
from test_evaluate import random_predictions
from test_ingest import synthetic_corpus
from test_relations import HAND_TABLE, oracle_fold

from causalcheck.cli import main as cli_main
from causalcheck.evaluate import EvalConfig, EvalMode, score
from causalcheck.events import VerdictLabel
from causalcheck.ingest import AVERITEC, cases_to_records, filter_cases, parse_averitec
from causalcheck.matching import MatchConfig, MatchKind, classify_texts
from causalcheck.providers import PolarityResult
from causalcheck.reasoner import VerdictEngine, predict_verdict
from causalcheck.relations import (
    POSITIVE_KINDS,
    Relation,
    chain_relation,
    compose,
    negate,
)


@contextmanager
def criterion(name):
    started = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[ACCEPTANCE] {name}: FAIL")
        raise
    elapsed = time.perf_counter() - started
    print(f"[ACCEPTANCE] {name}: PASS ({elapsed:.2f}s)")


def test_worked_example_suite():
    with criterion("worked-example suite (5/5 scenarios, < 1 s)"):
        started = time.perf_counter()
        outcomes = []
        for example in worked_examples():
            sim, pol, rel = example.providers()
            result = VerdictEngine(sim, pol, rel).predict(example.case)
            outcomes.append((example.name, result.label is example.expected))
            text = result.render_text()
            for fragment in example.trace_must_contain:
                assert fragment in text, (example.name, fragment)
        assert all(ok for _, ok in outcomes), outcomes
        assert len(outcomes) == 5
        assert time.perf_counter() - started < 1.0


def test_algebra_suite():
    with criterion("relation algebra (36 cells, parity on 1554 paths, < 1 s)"):
        started = time.perf_counter()
        # all 36 cells defined and matching the hand-enumerated oracle table
        for r1, r2 in itertools.product(Relation, Relation):
            assert compose(r1, r2) is HAND_TABLE[(r1, r2)]
        # double negation restores the cause/prevent pair
        assert negate(negate(Relation.CAUSE)) is Relation.CAUSE
        assert negate(negate(Relation.PREVENT)) is Relation.PREVENT
        # exhaustive path check against the independent fold oracle,
        # including all 6^4 = 1296 paths of length four
        total = 0
        for n in range(1, 5):
            for path in itertools.product(Relation, repeat=n):
                assert chain_relation(path) is oracle_fold(path)
                total += 1
        assert total == 6 + 36 + 216 + 1296
        # prevent-parity over assertable-relation paths
        assertable = [Relation.CAUSE, Relation.ENABLE, Relation.INTEND, Relation.PREVENT]
        for n in range(1, 5):
            for path in itertools.product(assertable, repeat=n):
                result = chain_relation(path)
                if result is Relation.NO_RELATION:
                    continue
                odd = path.count(Relation.PREVENT) % 2 == 1
                negative = result in (Relation.PREVENT, Relation.NOT_CAUSE)
                assert negative == odd, path
                if not odd:
                    assert result in POSITIVE_KINDS
        assert time.perf_counter() - started < 1.0


class _Score:
    def __init__(self, value):
        self.value = value

    def score(self, a, b):
        return self.value


class _Pol:
    def __init__(self, labels):
        self.labels = labels

    def polarity(self, text):
        return PolarityResult(self.labels[text], 1.0)


def test_matching_suite():
    with criterion("matching partition (101 x 4 grid, published scores, boundary)"):
        cfg = MatchConfig(theta=0.54)
        for i in range(101):
            value = i / 100.0
            for pa, pb in (("P", "P"), ("N", "N"), ("P", "N"), ("N", "P")):
                verdict = classify_texts("a", "b", _Score(value), _Pol({"a": pa, "b": pb}), cfg)
                if value > 0.54 and pa == pb:
                    expected = MatchKind.SIMILAR
                elif value > 0.54:
                    expected = MatchKind.OPPOSITE
                else:
                    expected = MatchKind.DISSIMILAR
                assert verdict.kind is expected, (value, pa, pb)
        # published events-only vs events-with-context scores
        same_pol = _Pol({"a": "P", "b": "P"})
        assert classify_texts("a", "b", _Score(0.3235), same_pol, cfg).kind is MatchKind.DISSIMILAR
        assert classify_texts("a", "b", _Score(0.7632), same_pol, cfg).kind is MatchKind.SIMILAR
        # the boundary score classifies as dissimilar
        assert classify_texts("a", "b", _Score(0.54), same_pol, cfg).kind is MatchKind.DISSIMILAR


def test_reasoner_oracle_equivalence():
    with criterion("reasoner vs brute-force enumerator (500/500 cases, < 10 s)"):
        started = time.perf_counter()
        agreements = 0
        for seed in range(500):
            case, sim, pol, rel = synthetic_case(seed)
            engine_label = predict_verdict(case, sim, pol, rel).label
            oracle_label = OracleReasoner(sim, pol, rel).predict_label(case)
            assert engine_label is oracle_label, f"seed {seed}"
            agreements += 1
        assert agreements == 500
        assert time.perf_counter() - started < 10.0


def test_metrics_fixtures():
    with criterion("metrics fixtures (tolerant/strict values, recall ordering x1000)"):
        S, R, C, A = (
            VerdictLabel.SUPPORTED,
            VerdictLabel.REFUTED,
            VerdictLabel.CONFLICTING,
            VerdictLabel.ABSTAIN,
        )
        fixture = (
            [(S, S), (S, S), (R, R), (C, C)]
            + [(S, R), (R, S)]
            + [(A, S), (A, R), (A, S), (A, C)]
        )
        tolerant = score(fixture, EvalConfig(mode=EvalMode.TOLERANT))
        assert abs(tolerant.precision - 0.6667) < 1e-4
        assert abs(tolerant.recall - 0.6) < 1e-4
        assert abs(tolerant.f1 - 0.6316) < 1e-4
        strict = score(fixture, EvalConfig(mode=EvalMode.STRICT))
        assert abs(strict.precision - 0.6667) < 1e-4
        assert abs(strict.recall - 0.4) < 1e-4
        assert abs(strict.f1 - 0.5) < 1e-4
        rng = random.Random(2024)
        for _ in range(1000):
            preds = random_predictions(rng, rng.randint(0, 25))
            s = score(preds, EvalConfig(mode=EvalMode.STRICT))
            t = score(preds, EvalConfig(mode=EvalMode.TOLERANT))
            assert s.recall <= t.recall + 1e-12


def test_ingest_fixture():
    with criterion("ingest attrition counts exact and filtering idempotent"):
        records = parse_averitec(json.dumps(synthetic_corpus()))
        cases, report = filter_cases(records, AVERITEC)
        assert report.total_claims == 12
        assert report.after_unit_filter == 9
        assert report.after_label_filter == 7
        assert report.after_relation_filter == 4
        assert report.label_distribution == {"Supported": 2, "Refuted": 1, "Conflicting": 1}
        again, report2 = filter_cases(cases_to_records(cases), AVERITEC)
        assert [c.to_json() for c in again] == [c.to_json() for c in cases]
        assert report2.after_relation_filter == len(cases)


def test_reason_command_determinism(tmp_path):
    with criterion("cmd_reason byte-identical across 3 runs and jobs 1 vs 8"):
        runner = CliRunner()
        raw = tmp_path / "raw.json"
        raw.write_text(json.dumps(lexical_corpus()), encoding="utf-8")
        result = runner.invoke(cli_main, [
            "ingest", "--dataset", "averitec", "--input", str(raw),
            "--out", str(tmp_path / "cases.json"),
        ], catch_exceptions=False)
        assert result.exit_code == 0, result.output
        outputs = []
        for run, jobs in (("r1", "1"), ("r2", "1"), ("r3", "1"), ("r4", "8")):
            out = tmp_path / f"preds-{run}.json"
            result = runner.invoke(cli_main, [
                "reason", "--cases", str(tmp_path / "cases.json"),
                "--out", str(out), "--jobs", jobs,
            ], catch_exceptions=False)
            assert result.exit_code == 0, result.output
            outputs.append(out.read_bytes())
        assert len(set(outputs)) == 1
