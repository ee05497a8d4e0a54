"""Command-line entry point: ingest, reason, explain, eval, check-provider.

Configuration resolves with precedence flags > environment > config file >
defaults; ``show-config`` prints the resolved values so any reported
number can be tied to the exact settings that produced it.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path

import click

from . import evaluate, ingest
from .events import VerdictLabel
from .matching import DEFAULT_THETA
from .providers import (
    SERVICE_URL_ENV,
    TIMEOUT_ENV,
    CueRelationExtractor,
    HttpProviderClient,
    LexicalSimilarity,
    LexiconPolarity,
    ProviderError,
    run_conformance,
)
from .reasoner import ReasonerConfig, TraceStep, VerdictEngine, VerdictResult


@dataclass
class RunConfig:
    provider: str = "lexical"
    service_url: str | None = None
    theta: float = DEFAULT_THETA
    max_hops: int = 4
    cherry_loose: bool = False
    jobs: int = 1
    seed: int = 0
    timeout: float = 10.0

    _FILE_KEYS = {
        "provider": "provider",
        "service_url": "service_url",
        "theta": "similarity_threshold",
        "max_hops": "max_hops",
        "cherry_loose": "cherry_loose",
        "jobs": "jobs",
        "seed": "seed",
        "timeout": "timeout",
    }

    @classmethod
    def resolve(cls, config_path: str | None = None, **flags) -> "RunConfig":
        values = asdict(cls())
        if config_path:
            try:
                loaded = json.loads(Path(config_path).read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as exc:
                raise click.UsageError(f"cannot read config file {config_path}: {exc}")
            for attr, key in cls._FILE_KEYS.items():
                if key in loaded:
                    values[attr] = loaded[key]
        if os.environ.get(SERVICE_URL_ENV):
            values["service_url"] = os.environ[SERVICE_URL_ENV]
        if os.environ.get(TIMEOUT_ENV):
            values["timeout"] = float(os.environ[TIMEOUT_ENV])
        for attr, value in flags.items():
            if value is not None:
                values[attr] = value
        config = cls(**values)
        config.validate()
        return config

    def validate(self) -> None:
        if self.provider not in ("lexical", "http", "none"):
            raise click.UsageError(f"unknown provider {self.provider!r}")
        if not 0.0 < self.theta < 1.0:
            raise click.UsageError(f"theta must lie strictly inside (0, 1), got {self.theta}")
        if self.jobs < 1:
            raise click.UsageError("jobs must be at least 1")
        if self.max_hops < 1:
            raise click.UsageError("max-hops must be at least 1")

    def reasoner_config(self) -> ReasonerConfig:
        return ReasonerConfig(theta=self.theta, max_hops=self.max_hops, cherry_loose=self.cherry_loose)

    def build_providers(self):
        """Returns (similarity, polarity, relation) per the selection."""
        if self.provider == "http":
            url = self.service_url
            if not url:
                raise click.UsageError(
                    f"http provider needs --service-url or {SERVICE_URL_ENV}"
                )
            client = HttpProviderClient(base_url=url, timeout=self.timeout)
            return client, client, client
        return LexicalSimilarity(), LexiconPolarity(), CueRelationExtractor()


def provider_options(command):
    decorators = [
        click.option("--provider", type=click.Choice(["lexical", "http"]), default=None,
                     help="Similarity/polarity/relation backend."),
        click.option("--service-url", default=None, help="Base URL of the model-serving sidecar."),
        click.option("--theta", type=float, default=None,
                     help=f"Similarity threshold (default {DEFAULT_THETA})."),
        click.option("--max-hops", type=int, default=None,
                     help="Path length bound for chain searches (default 4)."),
        click.option("--cherry-loose/--cherry-strict", "cherry_loose", default=None,
                     help="Flag dissimilar endpoints with differing polarity as cherry-picking."),
        click.option("--jobs", type=int, default=None, help="Parallel case workers (default 1)."),
        click.option("--seed", type=int, default=None, help="Seed for sampled probe texts."),
        click.option("--timeout", type=float, default=None, help="Per-request timeout in seconds."),
        click.option("--config", "config_path", type=click.Path(), default=None,
                     help="JSON config file (similarity_threshold, provider, ...)."),
    ]
    for decorator in reversed(decorators):
        command = decorator(command)
    return command


@click.group()
@click.version_option(package_name="causalcheck")
def main():
    """Causal-reasoning verdict engine for claim/evidence fact-checking."""


@main.command("show-config")
@provider_options
def show_config(config_path, **flags):
    """Print the resolved run configuration."""
    config = RunConfig.resolve(config_path, **flags)
    click.echo(json.dumps(asdict(config), indent=2, sort_keys=True))


@main.command("ingest")
@click.option("--dataset", type=click.Choice([ingest.AVERITEC, ingest.FEVEROUS]), required=True)
@click.option("--input", "input_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--report", "report_path", type=click.Path(), default=None)
@click.option("--extract-relations", is_flag=True, default=False,
              help="Use the cue-word baseline to extract triples missing from the input.")
def cmd_ingest(dataset, input_path, out_path, report_path, extract_relations):
    """Parse and filter a raw corpus into reasoner-ready cases."""
    try:
        records = ingest.parse_records(Path(input_path).read_text(encoding="utf-8"), dataset)
        provider = CueRelationExtractor() if extract_relations else None
        cases, report = ingest.filter_cases(records, dataset, relation_provider=provider)
    except ingest.IngestError as exc:
        raise click.ClickException(str(exc))
    Path(out_path).write_text(ingest.dump_cases(cases) + "\n", encoding="utf-8")
    if report_path:
        Path(report_path).write_text(
            json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
    for name, count in report.steps():
        click.echo(f"{name}: {count}")


def _predict_all(engine: VerdictEngine, cases, jobs: int) -> list[VerdictResult]:
    if jobs == 1:
        return [engine.predict(case) for case in cases]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(engine.predict, cases))


@main.command("reason")
@click.option("--cases", "cases_path", type=click.Path(exists=True), required=True)
@click.option("--out", "out_path", type=click.Path(), required=True)
@click.option("--explain-dir", type=click.Path(), default=None,
              help="Also write one plain-text derivation file per case.")
@provider_options
def cmd_reason(cases_path, out_path, explain_dir, config_path, **flags):
    """Predict verdicts for a cases file and write predictions with traces."""
    config = RunConfig.resolve(config_path, **flags)
    try:
        cases = ingest.load_cases(Path(cases_path).read_text(encoding="utf-8"))
    except ingest.IngestError as exc:
        raise click.ClickException(str(exc))
    similarity, polarity, relation = config.build_providers()
    engine = VerdictEngine(similarity, polarity, relation, config.reasoner_config())
    try:
        results = _predict_all(engine, cases, config.jobs)
    except ProviderError as exc:
        raise click.ClickException(f"provider failure: {exc}")
    predictions = [
        {"id": case.id, "label": result.label.value, "trace": [s.to_json() for s in result.trace]}
        for case, result in zip(cases, results)
    ]
    Path(out_path).write_text(
        json.dumps(predictions, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )
    if explain_dir:
        directory = Path(explain_dir)
        directory.mkdir(parents=True, exist_ok=True)
        for case, result in zip(cases, results):
            (directory / f"{case.id}.txt").write_text(result.render_text() + "\n", encoding="utf-8")
    counts = {}
    for result in results:
        counts[result.label.value] = counts.get(result.label.value, 0) + 1
    click.echo(f"predicted {len(results)} case(s): " + json.dumps(counts, sort_keys=True))


def _load_predictions(preds_path: str) -> list[dict]:
    try:
        entries = json.loads(Path(preds_path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise click.ClickException(f"malformed predictions file: {exc}")
    if not isinstance(entries, list):
        raise click.ClickException("predictions file must hold a JSON array")
    return entries


@main.command("explain")
@click.option("--predictions", "preds_path", type=click.Path(exists=True), required=True)
@click.option("--id", "case_id", required=True)
def cmd_explain(preds_path, case_id):
    """Print the derivation trace of one predicted case."""
    entries = _load_predictions(preds_path)
    for entry in entries:
        if entry["id"] == case_id:
            trace = [TraceStep.from_json(raw) for raw in entry.get("trace", [])]
            if not trace:
                click.echo("no rule fired")
            for step in trace:
                click.echo(step.sentence)
            return
    raise click.ClickException(f"no prediction with id {case_id!r}")


@main.command("eval")
@click.option("--cases", "cases_path", type=click.Path(exists=True), required=True)
@click.option("--predictions", "preds_path", type=click.Path(exists=True), required=True)
@click.option("--mode", type=click.Choice(["strict", "tolerant"]), default="tolerant")
@click.option("--agg", type=click.Choice(["micro", "macro"]), default="micro")
@click.option("--out", "out_path", type=click.Path(), default=None)
@click.option("--test-set", default="cases", help="Row label for the report.")
@click.option("--source", default="lexical", help="Knowledge-source column for the report.")
def cmd_eval(cases_path, preds_path, mode, agg, out_path, test_set, source):
    """Score predictions against gold labels."""
    try:
        cases = ingest.load_cases(Path(cases_path).read_text(encoding="utf-8"))
    except ingest.IngestError as exc:
        raise click.ClickException(str(exc))
    entries = _load_predictions(preds_path)
    predicted_by_id = {entry["id"]: entry["label"] for entry in entries}
    pairs = []
    for case in cases:
        if case.gold_label is None:
            raise click.ClickException(f"case {case.id} has no gold label")
        if case.id not in predicted_by_id:
            raise click.ClickException(f"no prediction for case {case.id}")
        try:
            predicted = VerdictLabel(predicted_by_id[case.id])
        except ValueError:
            raise click.ClickException(
                f"case {case.id}: unknown predicted label {predicted_by_id[case.id]!r}"
            )
        pairs.append((predicted, case.gold_label))
    cfg = evaluate.EvalConfig(
        mode=evaluate.EvalMode(mode), aggregation=evaluate.Aggregation(agg)
    )
    metrics = evaluate.score(pairs, cfg)
    entry = evaluate.ReportEntry(test_set=test_set, source=source, metrics=metrics)
    click.echo(evaluate.render_report([entry], fmt="text"), nl=False)
    if out_path:
        evaluate.write_report([entry], out_path, fmt="csv")
    click.echo(json.dumps(metrics.to_json(), indent=2, sort_keys=True))


@main.command("check-provider")
@provider_options
def cmd_check_provider(config_path, **flags):
    """Run the provider conformance suite; nonzero exit on any violation."""
    config = RunConfig.resolve(config_path, **flags)
    similarity, polarity, relation = config.build_providers()
    try:
        issues = run_conformance(similarity, polarity, relation, seed=config.seed)
    except ProviderError as exc:
        raise click.ClickException(f"provider failure during conformance run: {exc}")
    if issues:
        for issue in issues:
            click.echo(f"VIOLATION {issue.check}: {issue.detail}")
        raise click.ClickException(f"{len(issues)} conformance violation(s)")
    click.echo("all conformance checks passed")


if __name__ == "__main__":
    main()
