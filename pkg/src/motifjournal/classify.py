"""Text to label probabilities and salient-label selection.

The scoring backend contract is a 29-dimensional probability vector (11
topics + 18 emotions, independent, multi-label). Two backends honor it: a
bundled keyword lexicon (noisy-or combination) and a client for an external
inference endpoint.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Protocol

import httpx

from .domain import EMOTIONS, TOPICS, Emotion, Entry, Topic

DEFAULT_THRESHOLD = 0.2

_TOKEN_SPLIT = re.compile(r"[^a-z0-9]+")


class RemoteError(RuntimeError):
    """Remote classifier failure; carries the HTTP status when known."""

    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class RemoteTimeout(RemoteError):
    pass


class MalformedResponse(RemoteError):
    pass


class SubEntryError(RuntimeError):
    """Backend failure tagged with the failing sub-entry index."""

    def __init__(self, index: int, cause: Exception):
        super().__init__(f"sub-entry {index}: {cause}")
        self.index = index
        self.cause = cause


@dataclass(frozen=True)
class LabelProbs:
    """Independent probabilities for all 11 topics and 18 emotions."""

    topic_probs: dict[Topic, float]
    emotion_probs: dict[Emotion, float]

    def __post_init__(self) -> None:
        if set(self.topic_probs) != set(TOPICS):
            raise ValueError("topic_probs must cover all 11 topics")
        if set(self.emotion_probs) != set(EMOTIONS):
            raise ValueError("emotion_probs must cover all 18 emotions")
        for v in list(self.topic_probs.values()) + list(self.emotion_probs.values()):
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"probability {v} outside [0, 1]")

    @classmethod
    def zeros(cls) -> LabelProbs:
        return cls({t: 0.0 for t in TOPICS}, {e: 0.0 for e in EMOTIONS})


@dataclass(frozen=True)
class LabelSet:
    """Thresholded selection: at most one topic, up to four emotions in
    descending probability order."""

    topic: Topic | None
    emotions: tuple[Emotion, ...]

    def __post_init__(self) -> None:
        if len(self.emotions) > 4:
            raise ValueError("at most four emotions may be selected")

    def to_json(self) -> dict:
        return {
            "topic": self.topic.value if self.topic else None,
            "emotions": [e.value for e in self.emotions],
        }

    @classmethod
    def from_json(cls, obj: dict) -> LabelSet:
        topic = Topic(obj["topic"]) if obj.get("topic") else None
        emotions = tuple(Emotion(e) for e in obj.get("emotions", []))
        return cls(topic=topic, emotions=emotions)


_ALL_LABELS = {t.value for t in TOPICS} | {e.value for e in EMOTIONS}


@dataclass(frozen=True)
class Lexicon:
    """Keyword/phrase (lowercase, whitespace-normalized) -> weighted labels."""

    entries: dict[str, tuple[tuple[str, float], ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for keyword, labels in self.entries.items():
            if not keyword or keyword != " ".join(keyword.lower().split()):
                raise ValueError(
                    f"keyword {keyword!r} must be non-empty, lowercase, "
                    "whitespace-normalized"
                )
            for label, weight in labels:
                if label not in _ALL_LABELS:
                    raise ValueError(f"unknown label {label!r} for {keyword!r}")
                if not 0.0 < weight <= 1.0:
                    raise ValueError(f"weight {weight} for {keyword!r} outside (0, 1]")

    @classmethod
    def load(cls, path: str | Path) -> Lexicon:
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
        if raw.get("version") != 1:
            raise ValueError("unsupported lexicon version")
        entries: dict[str, tuple[tuple[str, float], ...]] = {}
        for item in raw["entries"]:
            entries[item["keyword"]] = tuple(
                (label, float(w)) for label, w in item["labels"]
            )
        return cls(entries=entries)


@lru_cache(maxsize=1)
def bundled_lexicon() -> Lexicon:
    path = resources.files("motifjournal") / "data" / "lexicon.json"
    return Lexicon.load(Path(str(path)))


def tokenize(text: str) -> list[str]:
    return [t for t in _TOKEN_SPLIT.split(text.lower()) if t]


def score_lexicon(text: str, lexicon: Lexicon) -> LabelProbs:
    """Noisy-or keyword scoring: per label, prob = 1 - prod(1 - w) over all
    matched occurrences. Single tokens and consecutive 2-word phrases match.
    """
    tokens = tokenize(text)
    hits: list[tuple[tuple[str, float], ...]] = []
    for token in tokens:
        labels = lexicon.entries.get(token)
        if labels:
            hits.append(labels)
    for a, b in zip(tokens, tokens[1:]):
        labels = lexicon.entries.get(f"{a} {b}")
        if labels:
            hits.append(labels)

    remaining: dict[str, float] = {}
    for labels in hits:
        for label, weight in labels:
            remaining[label] = remaining.get(label, 1.0) * (1.0 - weight)

    topic_probs = {t: 1.0 - remaining.get(t.value, 1.0) for t in TOPICS}
    emotion_probs = {e: 1.0 - remaining.get(e.value, 1.0) for e in EMOTIONS}
    return LabelProbs(topic_probs, emotion_probs)


def _validate_remote_payload(payload) -> LabelProbs:
    if not isinstance(payload, dict):
        raise MalformedResponse("response body is not a JSON object")
    for key in ("topic_probs", "emotion_probs"):
        if key not in payload or not isinstance(payload[key], dict):
            raise MalformedResponse(f"missing or invalid key {key!r}")
    try:
        topic_probs = {t: float(payload["topic_probs"][t.value]) for t in TOPICS}
        emotion_probs = {e: float(payload["emotion_probs"][e.value]) for e in EMOTIONS}
    except KeyError as exc:
        raise MalformedResponse(f"missing label {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise MalformedResponse(f"non-numeric probability: {exc}") from None
    for v in list(topic_probs.values()) + list(emotion_probs.values()):
        if not 0.0 <= v <= 1.0:
            raise MalformedResponse(f"probability {v} outside [0, 1]")
    return LabelProbs(topic_probs, emotion_probs)


def score_remote(text: str, endpoint: str, timeout: float = 10.0) -> LabelProbs:
    """POST {"text": ...} to an external classifier honoring the 29-label
    contract; validates completeness and ranges."""
    try:
        response = httpx.post(endpoint, json={"text": text}, timeout=timeout)
    except httpx.TimeoutException as exc:
        raise RemoteTimeout(f"classifier timed out: {exc}") from exc
    except httpx.HTTPError as exc:
        raise RemoteError(f"classifier unreachable: {exc}") from exc
    if not 200 <= response.status_code < 300:
        raise RemoteError(
            f"classifier returned HTTP {response.status_code}",
            status=response.status_code,
        )
    try:
        payload = response.json()
    except ValueError as exc:
        raise MalformedResponse(f"invalid JSON: {exc}") from exc
    return _validate_remote_payload(payload)


def select_labels(probs: LabelProbs, threshold: float = DEFAULT_THRESHOLD) -> LabelSet:
    """Pick the top topic and up to four emotions strictly above threshold.

    Ties break by enumeration order (the order of the Topic/Emotion enums).
    """
    if not 0.0 < threshold < 1.0:
        raise ValueError("threshold must be in (0, 1)")

    topic: Topic | None = None
    best = threshold
    for t in TOPICS:
        p = probs.topic_probs[t]
        if p > best:  # strict: first topic wins ties via >
            topic = t
            best = p

    qualifying = [(i, e) for i, e in enumerate(EMOTIONS) if probs.emotion_probs[e] > threshold]
    qualifying.sort(key=lambda ie: (-probs.emotion_probs[ie[1]], ie[0]))
    emotions = tuple(e for _, e in qualifying[:4])
    return LabelSet(topic=topic, emotions=emotions)


class Backend(Protocol):
    def score(self, text: str) -> LabelProbs: ...


@dataclass(frozen=True)
class LexiconBackend:
    lexicon: Lexicon

    def score(self, text: str) -> LabelProbs:
        return score_lexicon(text, self.lexicon)


@dataclass(frozen=True)
class RemoteBackend:
    endpoint: str
    timeout: float = 10.0

    def score(self, text: str) -> LabelProbs:
        return score_remote(text, self.endpoint, self.timeout)


def classify_entry(
    entry: Entry, backend: Backend, threshold: float = DEFAULT_THRESHOLD
) -> list[LabelSet]:
    """One LabelSet per sub-entry, in order. Backend errors re-raise as
    SubEntryError naming the failing index."""
    label_sets = []
    for index, sub in enumerate(entry.sub_entries):
        try:
            probs = backend.score(sub.text)
        except Exception as exc:
            raise SubEntryError(index, exc) from exc
        label_sets.append(select_labels(probs, threshold))
    return label_sets
