"""Similarity, polarity, and cross-text relation providers.

Three small interfaces, duck-typed:

* similarity: ``score(text_a, text_b) -> float`` in [0, 1], reflexive and
  symmetric;
* polarity:   ``polarity(text) -> PolarityResult`` with label "P" or "N";
* relation:   ``relation(event_a, event_b) -> Relation`` restricted to the
  five extractable kinds.

The bundled lexical implementations keep the whole pipeline runnable
offline; ``HttpProviderClient`` talks to a model-serving sidecar over the
JSON wire protocol and implements all three interfaces at once.
"""

from __future__ import annotations

import json
import os
import random
import re
import string
import threading
import time
from collections import Counter, OrderedDict
from dataclasses import dataclass
from math import sqrt
from typing import Callable, Optional

import requests

from .events import Event
from .relations import EXTRACTABLE_KINDS, Relation

DEFAULT_TIMEOUT_SECS = 10.0
DEFAULT_RETRIES = 2
DEFAULT_BACKOFF_SECS = 0.25
CACHE_SIZE = 100_000

SERVICE_URL_ENV = "NLP_SERVICE_URL"
TIMEOUT_ENV = "NLP_TIMEOUT_SECS"


class ProviderError(Exception):
    """Base class for provider failures; never silently swallowed."""


class TransportError(ProviderError):
    pass


class ProviderTimeout(ProviderError):
    pass


class SchemaError(ProviderError):
    """Response violated the wire schema (bad JSON, missing field, bad enum)."""


class ScoreRangeError(ProviderError):
    """Numeric response fell outside its documented range."""


@dataclass(frozen=True)
class PolarityResult:
    label: str  # "P" | "N"
    confidence: float


_TOKEN_RE = re.compile(r"[a-z0-9']+")


def tokenize(text: str) -> list[str]:
    return [t.strip("'") for t in _TOKEN_RE.findall(text.lower()) if t.strip("'")]


class LexicalSimilarity:
    """Cosine similarity of L2-normalized term-frequency vectors."""

    def score(self, text_a: str, text_b: str) -> float:
        ta, tb = tokenize(text_a), tokenize(text_b)
        if not ta and not tb:
            return 1.0
        if not ta or not tb:
            return 0.0
        ca, cb = Counter(ta), Counter(tb)
        dot = sum(n * cb[w] for w, n in ca.items())
        norm = sqrt(sum(n * n for n in ca.values()) * sum(n * n for n in cb.values()))
        return min(1.0, max(0.0, dot / norm))


_POSITIVE_WORDS = frozenset("""
able advance aid benefit benefits best better boost calm clean comfort
confidence cure effective efficient empower encourage enjoy enrich fair
gain gains good grant grants grow growth happy heal health healthy help
helpful helps improve improved improvement improving increase increased
innovation progress protect protected protection recover recovery relief
reliable safe safety satisfaction secure stability stamina strong succeed
success successful support thrive win
""".split())

_NEGATIVE_WORDS = frozenset("""
abuse accident attack bad blame collapse corruption crash crime crisis
damage danger dangerous death deaths decline decrease disaster disease
disrupt disruption disruptions doubt drop fail failed failure failures
fatigue fear fraud guilty harm harmful hurt illness inefficiencies
inefficiency infection injury injustice kill loss losses poor problem
problems recession risk risks shortage sideline sidelined sidelining
threat unnecessarily unsafe violence weak worse worst wrong
""".split())

_NEGATION_TOKENS = frozenset(
    ["no", "not", "never", "without", "none", "nothing", "cannot", "nor", "neither"]
)
_NEGATION_WINDOW = 3


def _is_negation(token: str) -> bool:
    return token in _NEGATION_TOKENS or token.endswith("n't")


class LexiconPolarity:
    """Word-list polarity with a short negation window.

    A sentiment hit preceded by a negation token within three words counts
    for the other side.  Ties and texts with no hits default to P.
    """

    def polarity(self, text: str) -> PolarityResult:
        tokens = tokenize(text)
        pos = neg = 0
        for i, tok in enumerate(tokens):
            if tok in _POSITIVE_WORDS:
                hit_positive = True
            elif tok in _NEGATIVE_WORDS:
                hit_positive = False
            else:
                continue
            window = tokens[max(0, i - _NEGATION_WINDOW):i]
            if any(_is_negation(t) for t in window):
                hit_positive = not hit_positive
            if hit_positive:
                pos += 1
            else:
                neg += 1
        label = "N" if neg > pos else "P"
        total = pos + neg
        confidence = max(pos, neg) / total if total else 0.5
        return PolarityResult(label=label, confidence=confidence)


# Cue patterns checked in fixed order; on equal match position the earlier
# entry wins, keeping extraction deterministic.
_CUE_PATTERNS: list[tuple[Relation, re.Pattern]] = [
    (Relation.PREVENT, re.compile(r"\b(?:prevent|block|stop)\w*", re.I)),
    (Relation.ENABLE, re.compile(r"\b(?:enabl|allow|grant)\w*", re.I)),
    (Relation.INTEND, re.compile(r"\b(?:intend|aim)\w*|\bto\s+boost\b", re.I)),
    (
        Relation.CAUSE,
        re.compile(
            r"\b(?:caus|trigger)\w*|\blead(?:s|ing)?\s+to\b|\bled\s+to\b"
            r"|\bresult(?:s|ed|ing)?\s+in\b",
            re.I,
        ),
    ),
]


class CueRelationExtractor:
    """Deterministic cue-word stand-in for a learned cross-text extractor.

    Prefers cues located between the two spans when both occur in the same
    context sentence; otherwise the leftmost cue in the concatenated
    contexts wins.  No cue means no relation.
    """

    def relation(self, event_a: Event, event_b: Event) -> Relation:
        segment = self._between_spans(event_a, event_b)
        if segment:
            found = self._first_cue(segment)
            if found is not None:
                return found
        if event_a.context == event_b.context:
            text = event_a.context
        else:
            text = f"{event_a.context} {event_b.context}"
        found = self._first_cue(text)
        return found if found is not None else Relation.NO_RELATION

    @staticmethod
    def _between_spans(event_a: Event, event_b: Event) -> Optional[str]:
        for ctx in (event_a.context, event_b.context):
            low = ctx.lower()
            ia = low.find(event_a.span.lower())
            ib = low.find(event_b.span.lower())
            if ia < 0 or ib < 0 or ia == ib:
                continue
            if ia < ib:
                return ctx[ia + len(event_a.span):ib]
            return ctx[ib + len(event_b.span):ia]
        return None

    @staticmethod
    def _first_cue(text: str) -> Optional[Relation]:
        best: tuple[int, int] | None = None
        best_rel = None
        for order, (rel, pattern) in enumerate(_CUE_PATTERNS):
            m = pattern.search(text)
            if m and (best is None or (m.start(), order) < best):
                best = (m.start(), order)
                best_rel = rel
        return best_rel


class LruCache:
    """Thread-safe bounded LRU map used for provider response caching."""

    def __init__(self, max_entries: int = CACHE_SIZE):
        self._data: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self._max = max_entries

    def get_or_call(self, key, fn: Callable):
        with self._lock:
            if key in self._data:
                self._data.move_to_end(key)
                return self._data[key]
        value = fn()
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self._max:
                self._data.popitem(last=False)
        return value

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)


class HttpProviderClient:
    """JSON-over-HTTP client for the sidecar's /similarity, /polarity and
    /relation endpoints.

    Failed transports are retried with exponential backoff; schema and
    range violations are surfaced immediately.  Responses are cached by
    (endpoint, request body), so the quadratic pair re-queries of the
    cherry-picking check hit the network once per distinct request.
    """

    def __init__(
        self,
        base_url: str,
        timeout: float = DEFAULT_TIMEOUT_SECS,
        retries: int = DEFAULT_RETRIES,
        backoff: float = DEFAULT_BACKOFF_SECS,
        session: Optional[requests.Session] = None,
        cache_size: int = CACHE_SIZE,
    ):
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout
        self.retries = retries
        self.backoff = backoff
        self._session = session or requests.Session()
        self._cache = LruCache(cache_size)

    @classmethod
    def from_env(cls, **kwargs) -> "HttpProviderClient":
        url = os.environ.get(SERVICE_URL_ENV)
        if not url:
            raise ValueError(f"{SERVICE_URL_ENV} is not set")
        timeout = float(os.environ.get(TIMEOUT_ENV, DEFAULT_TIMEOUT_SECS))
        return cls(base_url=url, timeout=timeout, **kwargs)

    # -- provider interfaces -------------------------------------------------

    def score(self, text_a: str, text_b: str) -> float:
        body = self._post("/similarity", {"text_a": text_a, "text_b": text_b})
        value = self._require_number(body, "score")
        if not 0.0 <= value <= 1.0:
            raise ScoreRangeError(f"/similarity score out of [0,1]: {value}")
        return value

    def polarity(self, text: str) -> PolarityResult:
        body = self._post("/polarity", {"text": text})
        label = body.get("label")
        if label not in ("P", "N"):
            raise SchemaError(f"/polarity label must be P or N, got {label!r}")
        confidence = self._require_number(body, "confidence")
        if not 0.0 <= confidence <= 1.0:
            raise ScoreRangeError(f"/polarity confidence out of [0,1]: {confidence}")
        return PolarityResult(label=label, confidence=confidence)

    def relation(self, event_a: Event, event_b: Event) -> Relation:
        body = self._post(
            "/relation",
            {
                "event_a": event_a.span,
                "context_a": event_a.context,
                "event_b": event_b.span,
                "context_b": event_b.context,
            },
        )
        raw = body.get("relation")
        if not isinstance(raw, str):
            raise SchemaError(f"/relation response missing relation string: {body!r}")
        try:
            rel = Relation(raw)
        except ValueError:
            raise SchemaError(f"/relation returned unknown kind {raw!r}") from None
        if rel not in EXTRACTABLE_KINDS:
            raise SchemaError(f"/relation returned non-extractable kind {raw!r}")
        return rel

    # -- plumbing ------------------------------------------------------------

    def _post(self, endpoint: str, payload: dict) -> dict:
        key = (endpoint, json.dumps(payload, sort_keys=True, ensure_ascii=False))
        return self._cache.get_or_call(key, lambda: self._post_uncached(endpoint, payload))

    def _post_uncached(self, endpoint: str, payload: dict) -> dict:
        url = self.base_url + endpoint
        last_error: ProviderError | None = None
        for attempt in range(self.retries + 1):
            if attempt:
                time.sleep(self.backoff * (2 ** (attempt - 1)))
            try:
                response = self._session.post(url, json=payload, timeout=self.timeout)
            except requests.Timeout as exc:
                last_error = ProviderTimeout(f"POST {endpoint} timed out after {self.timeout}s")
                last_error.__cause__ = exc
                continue
            except requests.RequestException as exc:
                last_error = TransportError(f"POST {endpoint} failed: {exc}")
                last_error.__cause__ = exc
                continue
            if response.status_code != 200:
                raise TransportError(
                    f"POST {endpoint} returned HTTP {response.status_code}: {response.text[:200]}"
                )
            try:
                body = response.json()
            except ValueError as exc:
                raise SchemaError(f"POST {endpoint} returned non-JSON body") from exc
            if not isinstance(body, dict):
                raise SchemaError(f"POST {endpoint} returned non-object JSON: {body!r}")
            return body
        assert last_error is not None
        raise last_error

    @staticmethod
    def _require_number(body: dict, field: str) -> float:
        value = body.get(field)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaError(f"field {field!r} must be a number, got {value!r}")
        return float(value)


# -- conformance ---------------------------------------------------------


@dataclass(frozen=True)
class ConformanceIssue:
    check: str
    detail: str


_FIXED_PROBES = [
    "earthquake deaths",
    "the vaccine triggered an immune response",
    "decline in employee morale",
    "improving overall stamina",
]


def _random_probes(seed: int, count: int = 5) -> list[str]:
    rng = random.Random(seed)
    words = ["".join(rng.choices(string.ascii_lowercase, k=rng.randint(3, 8))) for _ in range(30)]
    return [" ".join(rng.choices(words, k=rng.randint(2, 7))) for _ in range(count)]


def run_conformance(
    similarity=None,
    polarity=None,
    relation=None,
    texts: Optional[list[str]] = None,
    seed: int = 0,
) -> list[ConformanceIssue]:
    """Probe providers against their contracts; returns found violations.

    Provider errors raised while probing count as violations themselves,
    so a broken backend yields a report instead of aborting the suite.
    """
    issues: list[ConformanceIssue] = []
    probes = texts if texts is not None else _FIXED_PROBES + _random_probes(seed)
    # empty text is a documented precondition violation for remote
    # providers, not a conformance case
    probes = [t for t in probes if t.strip()]

    def call(fn, detail):
        try:
            return fn()
        except ScoreRangeError as exc:
            issues.append(ConformanceIssue("range", f"{detail}: {exc}"))
        except SchemaError as exc:
            issues.append(ConformanceIssue("schema", f"{detail}: {exc}"))
        except ProviderError as exc:
            issues.append(ConformanceIssue("provider-error", f"{detail}: {exc}"))
        return None

    if similarity is not None:
        for t in probes:
            s = call(lambda: similarity.score(t, t), f"score({t!r}, same)")
            if s is not None and abs(s - 1.0) > 1e-3:
                issues.append(ConformanceIssue("reflexivity", f"score({t!r}, same) = {s}"))
        for a, b in zip(probes, probes[1:]):
            ab = call(lambda: similarity.score(a, b), f"score({a!r}, {b!r})")
            ba = call(lambda: similarity.score(b, a), f"score({b!r}, {a!r})")
            if ab is None or ba is None:
                continue
            if abs(ab - ba) > 1e-9:
                issues.append(ConformanceIssue("symmetry", f"{ab} vs {ba} for ({a!r}, {b!r})"))
            if not 0.0 <= ab <= 1.0:
                issues.append(ConformanceIssue("range", f"score {ab} for ({a!r}, {b!r})"))
            if similarity.score(a, b) != ab:
                issues.append(ConformanceIssue("determinism", f"score({a!r}, {b!r}) varied"))

    if polarity is not None:
        for t in probes:
            result = call(lambda: polarity.polarity(t), f"polarity({t!r})")
            if result is None:
                continue
            if result.label not in ("P", "N"):
                issues.append(ConformanceIssue("polarity-enum", f"label {result.label!r} for {t!r}"))
            if not 0.0 <= result.confidence <= 1.0:
                issues.append(ConformanceIssue("polarity-range", f"confidence {result.confidence}"))
            if polarity.polarity(t) != result:
                issues.append(ConformanceIssue("determinism", f"polarity({t!r}) varied"))

    if relation is not None:
        events = [Event(span=t) for t in probes]
        for ea, eb in zip(events, events[1:]):
            rel = call(lambda: relation.relation(ea, eb), f"relation({ea.span!r}, {eb.span!r})")
            if rel is None:
                continue
            if rel not in EXTRACTABLE_KINDS:
                issues.append(
                    ConformanceIssue("relation-enum", f"{rel} for ({ea.span!r}, {eb.span!r})")
                )
            if relation.relation(ea, eb) is not rel:
                issues.append(ConformanceIssue("determinism", f"relation({ea.span!r}, ...) varied"))

    return issues
