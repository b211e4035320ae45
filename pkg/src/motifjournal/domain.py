"""Core vocabularies and value types: topics, emotions, valence, colors, entries.

Everything here is immutable and pure; the rest of the package builds on
these types.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class Topic(str, Enum):
    EXERCISE = "exercise"
    FAMILY = "family"
    FOOD = "food"
    FRIENDS = "friends"
    GOD = "god"
    HEALTH = "health"
    LOVE = "love"
    RECREATION = "recreation"
    SCHOOL = "school"
    SLEEP = "sleep"
    WORK = "work"


class Emotion(str, Enum):
    AFRAID = "afraid"
    ANGRY = "angry"
    ANXIOUS = "anxious"
    ASHAMED = "ashamed"
    AWKWARD = "awkward"
    BORED = "bored"
    CALM = "calm"
    CONFUSED = "confused"
    DISGUSTED = "disgusted"
    EXCITED = "excited"
    FRUSTRATED = "frustrated"
    HAPPY = "happy"
    JEALOUS = "jealous"
    NOSTALGIC = "nostalgic"
    PROUD = "proud"
    SAD = "sad"
    SATISFIED = "satisfied"
    SURPRISED = "surprised"


class Valence(str, Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


TOPICS: tuple[Topic, ...] = tuple(Topic)
EMOTIONS: tuple[Emotion, ...] = tuple(Emotion)

_VALENCE_OF: dict[Emotion, Valence] = {
    Emotion.AFRAID: Valence.NEGATIVE,
    Emotion.ANGRY: Valence.NEGATIVE,
    Emotion.ANXIOUS: Valence.NEGATIVE,
    Emotion.ASHAMED: Valence.NEGATIVE,
    Emotion.DISGUSTED: Valence.NEGATIVE,
    Emotion.FRUSTRATED: Valence.NEGATIVE,
    Emotion.JEALOUS: Valence.NEGATIVE,
    Emotion.SAD: Valence.NEGATIVE,
    Emotion.AWKWARD: Valence.NEUTRAL,
    Emotion.BORED: Valence.NEUTRAL,
    Emotion.CALM: Valence.NEUTRAL,
    Emotion.CONFUSED: Valence.NEUTRAL,
    Emotion.NOSTALGIC: Valence.NEUTRAL,
    Emotion.SURPRISED: Valence.NEUTRAL,
    Emotion.EXCITED: Valence.POSITIVE,
    Emotion.HAPPY: Valence.POSITIVE,
    Emotion.PROUD: Valence.POSITIVE,
    Emotion.SATISFIED: Valence.POSITIVE,
}


class EmptyInput(ValueError):
    """Raised when an operation requiring a non-empty input receives none."""


@dataclass(frozen=True)
class Rgb:
    """A straight-alpha color. Channels are ints in [0, 255]."""

    r: int
    g: int
    b: int
    a: int = 255

    def __post_init__(self) -> None:
        for name in ("r", "g", "b", "a"):
            v = getattr(self, name)
            if not isinstance(v, int) or not 0 <= v <= 255:
                raise ValueError(f"channel {name}={v!r} outside [0, 255]")

    @property
    def rgb(self) -> tuple[int, int, int]:
        return (self.r, self.g, self.b)

    @property
    def rgba(self) -> tuple[int, int, int, int]:
        return (self.r, self.g, self.b, self.a)

    def hex(self) -> str:
        return f"#{self.r:02X}{self.g:02X}{self.b:02X}"

    @classmethod
    def from_hex(cls, s: str) -> Rgb:
        s = s.strip().lstrip("#")
        if len(s) != 6:
            raise ValueError(f"expected #RRGGBB, got {s!r}")
        return cls(int(s[0:2], 16), int(s[2:4], 16), int(s[4:6], 16))


# Channel values are multiples of 60, which guarantees every pair of
# distinct colors differs by >= 60 in at least one channel (the default
# distinctness floor). Chosen for common association: dark red for angry,
# gray for bored, golden yellow for happy, etc. Overridable via JSON file.
DEFAULT_EMOTION_COLORS: dict[Emotion, Rgb] = {
    Emotion.AFRAID: Rgb(120, 0, 180),
    Emotion.ANGRY: Rgb(180, 0, 0),
    Emotion.ANXIOUS: Rgb(240, 120, 0),
    Emotion.ASHAMED: Rgb(120, 60, 0),
    Emotion.AWKWARD: Rgb(180, 120, 60),
    Emotion.BORED: Rgb(120, 120, 120),
    Emotion.CALM: Rgb(120, 180, 240),
    Emotion.CONFUSED: Rgb(180, 60, 180),
    Emotion.DISGUSTED: Rgb(120, 120, 0),
    Emotion.EXCITED: Rgb(240, 60, 120),
    Emotion.FRUSTRATED: Rgb(240, 0, 60),
    Emotion.HAPPY: Rgb(240, 180, 0),
    Emotion.JEALOUS: Rgb(0, 120, 0),
    Emotion.NOSTALGIC: Rgb(180, 180, 120),
    Emotion.PROUD: Rgb(60, 0, 180),
    Emotion.SAD: Rgb(0, 60, 120),
    Emotion.SATISFIED: Rgb(0, 180, 120),
    Emotion.SURPRISED: Rgb(0, 240, 240),
}

DEFAULT_VALENCE_COLORS: dict[Valence, Rgb] = {
    Valence.NEGATIVE: Rgb(255, 0, 0),
    Valence.NEUTRAL: Rgb(255, 255, 0),
    Valence.POSITIVE: Rgb(0, 128, 0),
}


def _max_channel_distance(a: Rgb, b: Rgb) -> int:
    return max(abs(a.r - b.r), abs(a.g - b.g), abs(a.b - b.b))


class PaletteError(ValueError):
    """Raised when a palette violates completeness or distinctness."""


@dataclass(frozen=True)
class Palette:
    """Emotion-to-color and valence-to-color mappings.

    Construction validates totality over the 18 emotions and pairwise
    distinctness with a minimum max-channel-difference floor.
    """

    emotion_colors: dict[Emotion, Rgb] = field(
        default_factory=lambda: dict(DEFAULT_EMOTION_COLORS)
    )
    valence_colors: dict[Valence, Rgb] = field(
        default_factory=lambda: dict(DEFAULT_VALENCE_COLORS)
    )
    distinctness_floor: int = 60

    def __post_init__(self) -> None:
        missing = [e.value for e in EMOTIONS if e not in self.emotion_colors]
        if missing:
            raise PaletteError(f"palette missing emotions: {missing}")
        if set(self.valence_colors) != set(Valence):
            raise PaletteError("palette must map all three valences")
        emotions = list(EMOTIONS)
        for i, e1 in enumerate(emotions):
            for e2 in emotions[i + 1 :]:
                d = _max_channel_distance(
                    self.emotion_colors[e1], self.emotion_colors[e2]
                )
                if d < self.distinctness_floor:
                    raise PaletteError(
                        f"colors for {e1.value} and {e2.value} are too close "
                        f"(max-channel distance {d} < {self.distinctness_floor})"
                    )

    def color(self, e: Emotion) -> Rgb:
        return self.emotion_colors[e]

    def valence_color(self, v: Valence) -> Rgb:
        return self.valence_colors[v]

    @classmethod
    def load(cls, path: str | Path, distinctness_floor: int = 60) -> Palette:
        """Load an override palette from `{"emotion_colors": {name: "#RRGGBB"}}`.

        All 18 emotions must be present; distinctness is re-validated.
        """
        with open(path, encoding="utf-8") as f:
            raw = json.load(f)
        if not isinstance(raw, dict) or "emotion_colors" not in raw:
            raise PaletteError("palette file must be an object with 'emotion_colors'")
        colors: dict[Emotion, Rgb] = {}
        for key, value in raw["emotion_colors"].items():
            try:
                emotion = Emotion(key)
            except ValueError:
                raise PaletteError(f"unknown emotion {key!r} in palette file") from None
            colors[emotion] = Rgb.from_hex(value)
        return cls(emotion_colors=colors, distinctness_floor=distinctness_floor)


def palette_color(p: Palette, e: Emotion) -> Rgb:
    """Look up the configured color for an emotion."""
    return p.color(e)


def valence_of(e: Emotion) -> Valence:
    """Coarse negative/neutral/positive class of an emotion (total function)."""
    return _VALENCE_OF[e]


# Tie-break preference, highest first: positive beats negative beats neutral.
_VALENCE_TIE_ORDER = (Valence.NEUTRAL, Valence.NEGATIVE, Valence.POSITIVE)


def majority_valence(emotions) -> Valence:
    """Most frequent valence class over a multiset of emotions.

    Ties prefer positive over negative over neutral (documented fixed rule).
    """
    emotions = list(emotions)
    if not emotions:
        raise EmptyInput("majority_valence requires at least one emotion")
    counts = Counter(valence_of(e) for e in emotions)
    return max(
        _VALENCE_TIE_ORDER,
        key=lambda v: (counts.get(v, 0), _VALENCE_TIE_ORDER.index(v)),
    )


@dataclass(frozen=True)
class SubEntry:
    """One of up to three text passages in a journal entry.

    Ground-truth labels are optional; when present the text must be
    non-empty after trimming.
    """

    text: str
    topics: frozenset[Topic] | None = None
    emotions: frozenset[Emotion] | None = None

    def __post_init__(self) -> None:
        has_labels = self.topics is not None or self.emotions is not None
        if has_labels and not self.text.strip():
            raise ValueError("labeled sub-entry must have non-empty text")


@dataclass(frozen=True)
class Entry:
    """A journal entry: an id plus 1-3 ordered sub-entries."""

    id: str
    sub_entries: tuple[SubEntry, ...]

    def __post_init__(self) -> None:
        if not 1 <= len(self.sub_entries) <= 3:
            raise ValueError(
                f"entry must have 1-3 sub-entries, got {len(self.sub_entries)}"
            )
