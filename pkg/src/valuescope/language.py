"""Language metrics: lexicon sentiment, emotionality, unigram surprisal.

Sentiment scorers are pluggable: anything callable as ``scorer(text) -> float``
with output in [0, 1] works.  The built-in baseline counts polar lexicon
tokens.  Complexity is the mean negative log probability (nats) of a
partition's tokens under a smoothed corpus-wide unigram model.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Iterable, Sequence

from .corpus import Message, tokenize

SentimentScorer = Callable[[str], float]

NEUTRAL_SENTIMENT = 0.5


class PolarLexicon:
    """Positive and negative single-token term sets."""

    def __init__(self, positive: Iterable[str], negative: Iterable[str]):
        self.positive = self._normalize(positive, "positive")
        self.negative = self._normalize(negative, "negative")

    @staticmethod
    def _normalize(terms: Iterable[str], side: str) -> frozenset[str]:
        cleaned: set[str] = set()
        for term in terms:
            tokens = tokenize(term)
            if len(tokens) != 1:
                raise ValueError(
                    f"{side} sentiment term {term!r} must be a single token"
                )
            cleaned.add(tokens[0])
        return frozenset(cleaned)

    @classmethod
    def from_file(cls, path: str) -> "PolarLexicon":
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
        if not isinstance(raw, dict) or set(raw) != {"positive", "negative"}:
            raise ValueError(
                "sentiment lexicon must be a JSON object with exactly "
                "'positive' and 'negative' arrays"
            )
        return cls(raw["positive"], raw["negative"])

    @classmethod
    def default(cls) -> "PolarLexicon":
        data = (
            resources.files("valuescope.data")
            .joinpath("sentiment_lexicon.json")
            .read_text(encoding="utf-8")
        )
        raw = json.loads(data)
        return cls(raw["positive"], raw["negative"])


def score_sentiment(text: str, lexicon: PolarLexicon) -> float:
    """0.5 + (p - q) / (2 (p + q)); 0.5 when no polar token occurs."""
    p = q = 0
    for token in tokenize(text):
        if token in lexicon.positive:
            p += 1
        elif token in lexicon.negative:
            q += 1
    if p + q == 0:
        return NEUTRAL_SENTIMENT
    return 0.5 + (p - q) / (2.0 * (p + q))


class LexiconSentimentScorer:
    """Default scorer: polar token counting against a PolarLexicon."""

    def __init__(self, lexicon: PolarLexicon | None = None):
        self.lexicon = lexicon if lexicon is not None else PolarLexicon.default()

    def __call__(self, text: str) -> float:
        return score_sentiment(text, self.lexicon)


def emotionality(sentiments: Sequence[float]) -> float | None:
    """Mean absolute deviation from neutral; lives in [0, 0.5]."""
    if not sentiments:
        return None
    return sum(abs(s - NEUTRAL_SENTIMENT) for s in sentiments) / len(sentiments)


class ReferenceDictionary:
    """Unigram probabilities with a shared mass for unseen tokens."""

    def __init__(self, probabilities: dict[str, float], unseen: float):
        if unseen <= 0.0:
            raise ValueError("unseen probability must be positive")
        total = unseen
        for token, prob in probabilities.items():
            if prob <= 0.0:
                raise ValueError(f"probability for {token!r} must be positive")
            total += prob
        if total > 1.0 + 1e-9:
            raise ValueError(f"probabilities sum to {total}, above 1")
        self.probabilities = dict(probabilities)
        self.unseen = unseen
        self._surprisal_cache: dict[str, float] = {}

    @classmethod
    def from_counts(cls, counts: dict[str, int]) -> "ReferenceDictionary":
        """Add-one smoothing: p(w) = (count + 1) / (N + V + 1)."""
        if not counts:
            raise ValueError("reference dictionary needs at least one token")
        n = sum(counts.values())
        v = len(counts)
        denom = n + v + 1
        probabilities = {token: (c + 1) / denom for token, c in counts.items()}
        return cls(probabilities, 1.0 / denom)

    @classmethod
    def from_file(cls, path: str) -> "ReferenceDictionary":
        with open(path, encoding="utf-8") as handle:
            raw = json.load(handle)
        if not isinstance(raw, dict):
            raise ValueError("reference dictionary must be a JSON object")
        counts: dict[str, int] = {}
        for token, count in raw.items():
            if not isinstance(count, int) or count < 0:
                raise ValueError(f"bad count for token {token!r}: {count!r}")
            counts[str(token)] = count
        return cls.from_counts(counts)

    def probability(self, token: str) -> float:
        return self.probabilities.get(token, self.unseen)

    def surprisal(self, token: str) -> float:
        cached = self._surprisal_cache.get(token)
        if cached is None:
            cached = -math.log(self.probability(token))
            self._surprisal_cache[token] = cached
        return cached


def build_reference(tokens: Iterable[str]) -> ReferenceDictionary:
    counts = Counter(tokens)
    if not counts:
        raise ValueError("cannot build a reference dictionary from zero tokens")
    return ReferenceDictionary.from_counts(dict(counts))


def complexity(tokens: Sequence[str], reference: ReferenceDictionary) -> float | None:
    """Mean surprisal (nats) of ``tokens`` under ``reference``."""
    if not tokens:
        return None
    return sum(reference.surprisal(t) for t in tokens) / len(tokens)


@dataclass(frozen=True, slots=True)
class LanguageScores:
    sentiment: float | None
    emotionality: float | None
    complexity: float | None


def language_scores(
    messages: Sequence[Message],
    scorer: SentimentScorer,
    reference: ReferenceDictionary | None,
) -> LanguageScores:
    if not messages:
        return LanguageScores(None, None, None)
    sentiments = [scorer(m.text) for m in messages]
    tokens = [token for m in messages for token in tokenize(m.text)]
    return LanguageScores(
        sentiment=sum(sentiments) / len(sentiments),
        emotionality=emotionality(sentiments),
        complexity=complexity(tokens, reference) if reference is not None else None,
    )
