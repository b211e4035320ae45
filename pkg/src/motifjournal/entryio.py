"""Parsing and serialization of the entry and label-set wire formats.

The entry schema is `{"id": str, "sub_entries": [{"text": str,
"topics": [str]?, "emotions": [str]?}]}`; unknown fields are rejected.
Errors carry the offending field path for diagnostics.
"""

from __future__ import annotations

import json

from .classify import LabelSet
from .domain import Emotion, Entry, SubEntry, Topic


class InputError(ValueError):
    """Malformed input; `path` names the offending field."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


_SUB_ENTRY_FIELDS = {"text", "topics", "emotions"}
_ENTRY_FIELDS = {"id", "sub_entries"}


def _parse_label_list(values, enum_cls, path: str):
    if not isinstance(values, list):
        raise InputError(path, "expected a list of strings")
    out = []
    for i, v in enumerate(values):
        try:
            out.append(enum_cls(v))
        except (ValueError, TypeError):
            raise InputError(f"{path}[{i}]", f"unknown {enum_cls.__name__.lower()} {v!r}") from None
    return out


def parse_sub_entry(obj, path: str) -> SubEntry:
    if not isinstance(obj, dict):
        raise InputError(path, "expected an object")
    unknown = set(obj) - _SUB_ENTRY_FIELDS
    if unknown:
        raise InputError(f"{path}.{sorted(unknown)[0]}", "unknown field")
    text = obj.get("text")
    if not isinstance(text, str):
        raise InputError(f"{path}.text", "expected a string")
    topics = None
    emotions = None
    if "topics" in obj:
        topics = frozenset(_parse_label_list(obj["topics"], Topic, f"{path}.topics"))
    if "emotions" in obj:
        emotions = frozenset(
            _parse_label_list(obj["emotions"], Emotion, f"{path}.emotions")
        )
    try:
        return SubEntry(text=text, topics=topics, emotions=emotions)
    except ValueError as exc:
        raise InputError(f"{path}.text", str(exc)) from None


def parse_entry(obj) -> Entry:
    if not isinstance(obj, dict):
        raise InputError("$", "expected an object")
    unknown = set(obj) - _ENTRY_FIELDS
    if unknown:
        raise InputError(sorted(unknown)[0], "unknown field")
    entry_id = obj.get("id")
    if not isinstance(entry_id, str) or not entry_id:
        raise InputError("id", "expected a non-empty string")
    subs = obj.get("sub_entries")
    if not isinstance(subs, list) or not 1 <= len(subs) <= 3:
        raise InputError("sub_entries", "expected a list of 1-3 sub-entries")
    parsed = tuple(
        parse_sub_entry(s, f"sub_entries[{i}]") for i, s in enumerate(subs)
    )
    return Entry(id=entry_id, sub_entries=parsed)


def entry_from_text(text: str, entry_id: str = "entry") -> Entry:
    """Split raw text into 1-3 sub-entries on blank lines."""
    paragraphs = [p.strip() for p in text.split("\n\n")]
    paragraphs = [p for p in paragraphs if p]
    if not paragraphs:
        raise InputError("$", "input text is empty")
    if len(paragraphs) > 3:
        raise InputError("$", f"{len(paragraphs)} paragraphs; an entry holds at most 3")
    return Entry(
        id=entry_id, sub_entries=tuple(SubEntry(text=p) for p in paragraphs)
    )


def parse_label_sets(obj) -> list[LabelSet]:
    """Parse the `{"label_sets": [{"topic", "emotions"}]}` wire format."""
    if not isinstance(obj, dict) or "label_sets" not in obj:
        raise InputError("label_sets", "missing key")
    raw = obj["label_sets"]
    if not isinstance(raw, list) or not 1 <= len(raw) <= 3:
        raise InputError("label_sets", "expected a list of 1-3 label sets")
    out = []
    for i, item in enumerate(raw):
        path = f"label_sets[{i}]"
        if not isinstance(item, dict):
            raise InputError(path, "expected an object")
        topic = item.get("topic")
        if topic is not None:
            try:
                topic = Topic(topic)
            except ValueError:
                raise InputError(f"{path}.topic", f"unknown topic {topic!r}") from None
        emotions = tuple(
            _parse_label_list(item.get("emotions", []), Emotion, f"{path}.emotions")
        )
        if len(emotions) > 4:
            raise InputError(f"{path}.emotions", "at most four emotions")
        out.append(LabelSet(topic=topic, emotions=emotions))
    return out


def label_sets_json(entry_id: str, label_sets: list[LabelSet]) -> dict:
    return {"id": entry_id, "label_sets": [ls.to_json() for ls in label_sets]}


def parse_dataset(obj) -> list[SubEntry]:
    """Flatten `{"entries": [entry...]}` into labeled sub-entries."""
    if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
        raise InputError("entries", "expected a list of entries")
    samples: list[SubEntry] = []
    for i, raw in enumerate(obj["entries"]):
        try:
            entry = parse_entry(raw)
        except InputError as exc:
            raise InputError(f"entries[{i}].{exc.path}", str(exc).split(": ", 1)[-1]) from None
        for j, sub in enumerate(entry.sub_entries):
            if sub.topics is None or sub.emotions is None:
                raise InputError(
                    f"entries[{i}].sub_entries[{j}]", "missing ground-truth labels"
                )
            samples.append(sub)
    return samples


def load_json(path) -> object:
    with open(path, encoding="utf-8") as f:
        return json.load(f)
