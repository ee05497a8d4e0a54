"""Scoring backends: bundled deterministic ones plus optional learned ones.

Backend ids are deployment configuration:

* ``bundled-lexical`` / ``bundled-lexicon`` / ``bundled-scripted`` run
  fully offline from the shipped lexicons;
* ``hf:<model-id-or-path>`` loads a sentence-embedding, sentiment, or
  text-generation model (requires the ``models`` extra and local weights
  or hub access).
"""

from __future__ import annotations

import hashlib
import logging
import re
from collections import Counter

import numpy as np

from .lexicon import (
    COMMONSENSE_PAIRS,
    NEGATION_TOKENS,
    NEGATIVE_WORDS,
    POSITIVE_WORDS,
    SYNONYM_INDEX,
)

logger = logging.getLogger("nlp_service")

_TOKEN_RE = re.compile(r"[a-z0-9']+")

EMBEDDING_DIM = 2048
_WORD_WEIGHT = 1.0
_CHAR_WEIGHT = 0.25
_CHAR_N = 3
_STOPWORD_WEIGHT = 0.1

_STOPWORDS = frozenset("""
a about after an and any are as at be because been before but by can could
did do does for from had has have he her him his how i if in into is it its
me my no not of on or our she so some than that the their them then there
these they this those to up us was we were what when where which who will
with would you your
""".split())


def _tokens(text: str) -> list[str]:
    return [t.strip("'") for t in _TOKEN_RE.findall(text.lower()) if t.strip("'")]


class HashedLexicalEmbedding:
    """Deterministic sentence encoder over synonym-class and character
    n-gram features, sign-hashed into a fixed-width vector.

    A stand-in for a learned sentence embedding: it captures token overlap,
    morphological variation (via character n-grams), and the bundled
    thesaurus' synonym groups, and nothing more.
    """

    name = "bundled-lexical"
    dim = EMBEDDING_DIM

    def encode(self, text: str) -> np.ndarray:
        weights: Counter = Counter()
        counts: Counter = Counter()
        for token in _tokens(text):
            # function words carry little meaning; damp them so shared
            # content decides the cosine
            damp = _STOPWORD_WEIGHT if token in _STOPWORDS else 1.0
            word_key = f"w|{SYNONYM_INDEX.get(token, token)}"
            weights[word_key] += _WORD_WEIGHT * damp
            counts[word_key] += 1
            marked = f"<{token}>"
            for i in range(len(marked) - _CHAR_N + 1):
                char_key = f"c|{marked[i:i + _CHAR_N]}"
                weights[char_key] += _CHAR_WEIGHT * damp
                counts[char_key] += 1
        vector = np.zeros(self.dim, dtype=np.float64)
        for feature, total in weights.items():
            digest = hashlib.md5(feature.encode()).digest()
            index = int.from_bytes(digest[:4], "big") % self.dim
            sign = 1.0 if digest[4] % 2 == 0 else -1.0
            vector[index] += sign * total
        norm = np.linalg.norm(vector)
        return vector / norm if norm else vector


class SentenceTransformerEmbedding:
    def __init__(self, model_id: str):
        from sentence_transformers import SentenceTransformer

        self.name = model_id
        self._model = SentenceTransformer(model_id)
        self.dim = self._model.get_sentence_embedding_dimension()

    def encode(self, text: str) -> np.ndarray:
        vector = np.asarray(self._model.encode([text])[0], dtype=np.float64)
        norm = np.linalg.norm(vector)
        return vector / norm if norm else vector


class LexiconSentiment:
    """Word-list sentiment with a short negation window; ties lean P."""

    name = "bundled-lexicon"
    _WINDOW = 3

    def classify(self, text: str) -> tuple[str, float]:
        tokens = _tokens(text)
        positive = negative = 0
        for i, token in enumerate(tokens):
            if token in POSITIVE_WORDS:
                is_positive = True
            elif token in NEGATIVE_WORDS:
                is_positive = False
            else:
                continue
            window = tokens[max(0, i - self._WINDOW):i]
            if any(t in NEGATION_TOKENS or t.endswith("n't") for t in window):
                is_positive = not is_positive
            if is_positive:
                positive += 1
            else:
                negative += 1
        label = "N" if negative > positive else "P"
        total = positive + negative
        confidence = max(positive, negative) / total if total else 0.5
        return label, confidence


class HFSentiment:
    def __init__(self, model_id: str):
        from transformers import pipeline

        self.name = model_id
        self._pipeline = pipeline("sentiment-analysis", model=model_id)

    def classify(self, text: str) -> tuple[str, float]:
        result = self._pipeline(text, truncation=True)[0]
        label = "N" if result["label"].upper().startswith("NEG") else "P"
        return label, float(result["score"])


class ScriptedRelationModel:
    """Deterministic completion model for the relation prompt.

    Answers from a small commonsense pair table, then from cue words in
    the quoted event mentions, then "no relation".  Exists so the
    /relation endpoint is exercisable without a hosted LLM.
    """

    name = "bundled-scripted"

    _QUESTION_RE = re.compile(
        r"relation between \"(?P<a>.*?)\" and \"(?P<b>.*?)\"", re.S
    )
    _CUES = [
        ("prevent", re.compile(r"\b(?:prevent|block|stop)\w*", re.I)),
        ("enable", re.compile(r"\b(?:enabl|allow|grant)\w*", re.I)),
        ("intend", re.compile(r"\b(?:intend|aim)\w*", re.I)),
        ("cause", re.compile(r"\b(?:caus|trigger|kill)\w*|\blead(?:s|ing)?\s+to\b", re.I)),
    ]

    def complete(self, prompt: str) -> str:
        matches = list(self._QUESTION_RE.finditer(prompt))
        if not matches:
            return "no relation"
        question = matches[-1]
        event_a, event_b = question.group("a"), question.group("b")
        tokens_a, tokens_b = set(_tokens(event_a)), set(_tokens(event_b))
        for (key_a, key_b), reply in COMMONSENSE_PAIRS.items():
            if key_a in tokens_a and key_b in tokens_b:
                return reply
        for reply, pattern in self._CUES:
            if pattern.search(event_a) or pattern.search(event_b):
                return reply
        return "no relation"


class HFGeneration:
    def __init__(self, model_id: str):
        from transformers import pipeline

        self.name = model_id
        self._pipeline = pipeline("text-generation", model=model_id)

    def complete(self, prompt: str) -> str:
        output = self._pipeline(prompt, max_new_tokens=8, do_sample=False)
        return output[0]["generated_text"][len(prompt):]


def make_embedding_backend(model_id: str):
    if model_id == "bundled-lexical":
        return HashedLexicalEmbedding()
    if model_id.startswith("hf:"):
        return SentenceTransformerEmbedding(model_id[3:])
    raise ValueError(f"unknown embedding backend: {model_id!r}")


def make_sentiment_backend(model_id: str):
    if model_id == "bundled-lexicon":
        return LexiconSentiment()
    if model_id.startswith("hf:"):
        return HFSentiment(model_id[3:])
    raise ValueError(f"unknown sentiment backend: {model_id!r}")


def make_generation_backend(model_id: str | None):
    if model_id is None:
        return None
    if model_id == "bundled-scripted":
        return ScriptedRelationModel()
    if model_id.startswith("hf:"):
        return HFGeneration(model_id[3:])
    raise ValueError(f"unknown generation backend: {model_id!r}")


RELATION_REPLIES = {
    "cause": "cause",
    "causes": "cause",
    "direct cause": "cause",
    "direct-cause": "cause",
    "prevent": "prevent",
    "prevents": "prevent",
    "intend": "intend",
    "intends": "intend",
    "intends to cause": "intend",
    "intends-to-cause": "intend",
    "enable": "enable",
    "enables": "enable",
    "no relation": "no_relation",
    "no_relation": "no_relation",
    "no-relation": "no_relation",
    "none": "no_relation",
}


def normalize_relation_reply(reply: str) -> str:
    """Map a model reply onto the five relation strings; anything
    unrecognizable becomes no_relation (logged)."""
    cleaned = re.sub(r"[^a-z_\- ]", " ", reply.strip().lower())
    cleaned = " ".join(cleaned.split())
    if cleaned in RELATION_REPLIES:
        return RELATION_REPLIES[cleaned]
    first_line = cleaned.splitlines()[0] if cleaned else ""
    for candidate in (first_line, *first_line.split()):
        if candidate in RELATION_REPLIES:
            return RELATION_REPLIES[candidate]
    logger.warning("unparseable relation reply %r normalized to no_relation", reply)
    return "no_relation"


def build_relation_prompt(event_a: str, event_b: str) -> str:
    """Few-shot prompt: constrained label set, one worked exemplar."""
    return (
        "User: I am extracting refined causal relations between two given "
        "events. The relation can only be cause, intend, prevent, enable, "
        "or no relation. Answer only with the relation name and no "
        "explanation. What is the relation between \"earthquake\" and "
        "\"death\"?\n"
        "Assistant: cause\n"
        f"User: What is the relation between \"{event_a}\" and \"{event_b}\"?\n"
        "Assistant:"
    )
