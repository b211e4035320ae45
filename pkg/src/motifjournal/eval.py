"""Quantitative evaluation: pooled multi-label confusion counts, F1 and
normalized accuracy, repeated held-out threshold sweeps, and pairwise
preference consistency / tallying.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from scipy import stats

from .classify import Backend, LabelSet, select_labels
from .domain import EMOTIONS, TOPICS, SubEntry
from .render import Rng


class EmptyDataset(ValueError):
    pass


class MissingLabels(ValueError):
    pass


class IncompleteMatrix(ValueError):
    pass


class NoRelevantPairs(ValueError):
    pass


@dataclass
class ConfusionCounts:
    """Pooled over all 29 labels across samples (micro-averaging)."""

    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def add(self, other: "ConfusionCounts") -> None:
        self.tp += other.tp
        self.fp += other.fp
        self.tn += other.tn
        self.fn += other.fn


@dataclass(frozen=True)
class MetricValue:
    """A metric plus a definedness flag; undefined metrics report 0.0."""

    value: float
    defined: bool = True


def confusion_for_sample(sample: SubEntry, predicted: LabelSet) -> ConfusionCounts:
    """Confusion contribution of one sample over its 29 binary labels."""
    if sample.topics is None or sample.emotions is None:
        raise MissingLabels("sample lacks ground-truth labels")
    c = ConfusionCounts()
    pred_topics = {predicted.topic} if predicted.topic else set()
    pred_emotions = set(predicted.emotions)
    for t in TOPICS:
        _tally(c, t in sample.topics, t in pred_topics)
    for e in EMOTIONS:
        _tally(c, e in sample.emotions, e in pred_emotions)
    return c


def _tally(c: ConfusionCounts, truth: bool, pred: bool) -> None:
    if truth and pred:
        c.tp += 1
    elif truth:
        c.fn += 1
    elif pred:
        c.fp += 1
    else:
        c.tn += 1


def f1(c: ConfusionCounts) -> MetricValue:
    """Harmonic mean of precision and recall; 0-with-flag when either
    denominator is zero."""
    if c.tp + c.fp == 0 or c.tp + c.fn == 0:
        return MetricValue(0.0, defined=False)
    precision = c.tp / (c.tp + c.fp)
    recall = c.tp / (c.tp + c.fn)
    if precision + recall == 0.0:
        return MetricValue(0.0, defined=False)
    return MetricValue(2.0 * precision * recall / (precision + recall))


def normalized_accuracy(c: ConfusionCounts) -> MetricValue:
    """Mean of true-positive and true-negative rates; 0-with-flag when a
    class is absent."""
    if c.tp + c.fn == 0 or c.tn + c.fp == 0:
        return MetricValue(0.0, defined=False)
    tpr = c.tp / (c.tp + c.fn)
    tnr = c.tn / (c.tn + c.fp)
    return MetricValue((tpr + tnr) / 2.0)


@dataclass(frozen=True)
class ThresholdMetrics:
    f1: MetricValue
    norm_acc: MetricValue
    counts: ConfusionCounts

    def to_json(self) -> dict:
        flags = []
        if not self.f1.defined:
            flags.append("f1_undefined")
        if not self.norm_acc.defined:
            flags.append("norm_acc_undefined")
        return {
            "f1": self.f1.value,
            "norm_acc": self.norm_acc.value,
            "flags": flags,
            "counts": {
                "tp": self.counts.tp,
                "fp": self.counts.fp,
                "tn": self.counts.tn,
                "fn": self.counts.fn,
            },
        }


def _shuffled(n: int, rng: Rng) -> list[int]:
    order = list(range(n))
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    return order


def cross_validate(
    dataset: list[SubEntry],
    backend: Backend,
    k_splits: int = 5,
    split_frac: float = 0.2,
    thresholds: tuple[float, ...] = (0.2,),
    seed: int = 0,
) -> dict[float, ThresholdMetrics]:
    """Repeated held-out evaluation: k seeded shuffles, each evaluating a
    held-out fraction split_frac of the samples, pooled per threshold.

    The lexicon backend has no trainable state, so "training" on the
    remaining samples is a no-op; this degenerates to repeated scoring of
    random subsets.
    """
    if not dataset:
        raise EmptyDataset("dataset is empty")
    if not 0.0 < split_frac < 1.0:
        raise ValueError("split_frac must be in (0, 1)")
    for sample in dataset:
        if sample.topics is None or sample.emotions is None:
            raise MissingLabels("every sample needs ground-truth labels")

    n = len(dataset)
    rng = Rng(seed)
    probs_cache: dict[int, object] = {}
    pooled = {th: ConfusionCounts() for th in thresholds}

    for _ in range(k_splits):
        order = _shuffled(n, rng)
        n_test = max(1, round(split_frac * n))
        for idx in order[:n_test]:
            if idx not in probs_cache:
                probs_cache[idx] = backend.score(dataset[idx].text)
            probs = probs_cache[idx]
            for th in thresholds:
                predicted = select_labels(probs, th)
                pooled[th].add(confusion_for_sample(dataset[idx], predicted))

    return {
        th: ThresholdMetrics(f1(c), normalized_accuracy(c), c)
        for th, c in pooled.items()
    }


@dataclass(frozen=True)
class PreferenceMatrix:
    """Complete pairwise preferences over n items: for every unordered pair
    (a, b) with a < b, the index of the chosen item."""

    n_items: int
    winners: dict[tuple[int, int], int]

    def __post_init__(self) -> None:
        expected = {(a, b) for a, b in combinations(range(self.n_items), 2)}
        if set(self.winners) != expected:
            raise IncompleteMatrix(
                f"need all {len(expected)} pairs for {self.n_items} items"
            )
        for (a, b), w in self.winners.items():
            if w not in (a, b):
                raise IncompleteMatrix(f"winner {w} not in pair ({a}, {b})")

    def prefers(self, a: int, b: int) -> bool:
        """True when a was chosen over b."""
        key = (a, b) if a < b else (b, a)
        return self.winners[key] == a


@dataclass(frozen=True)
class ConsistencyResult:
    consistent: bool
    violations: tuple[tuple[int, int, int], ...]


def consistency_check(m: PreferenceMatrix) -> ConsistencyResult:
    """Transitivity test: a violation is a directed 3-cycle, reported as
    (a, b, c) meaning a > b > c > a with a the smallest index."""
    violations = []
    for a, b, c in combinations(range(m.n_items), 3):
        if m.prefers(a, b) and m.prefers(b, c) and m.prefers(c, a):
            violations.append((a, b, c))
        elif m.prefers(a, c) and m.prefers(c, b) and m.prefers(b, a):
            violations.append((a, c, b))
    return ConsistencyResult(consistent=not violations, violations=tuple(violations))


@dataclass(frozen=True)
class FactorStats:
    rate: float
    ci_low: float
    ci_high: float
    p_value: float
    n: int


def preference_tally(
    matrices: list[PreferenceMatrix],
    factor_pairs: list[tuple[int, int]],
) -> FactorStats:
    """Fraction of relevant pairs where the "with" item won, with a normal
    95% CI and a two-sided one-sample t-test against 0.5.

    The unit of analysis is one (matrix, pair) observation.
    """
    if len(matrices) < 2:
        raise ValueError("need at least two matrices")
    observations: list[float] = []
    for m in matrices:
        for with_item, without_item in factor_pairs:
            observations.append(1.0 if m.prefers(with_item, without_item) else 0.0)
    if not observations:
        raise NoRelevantPairs("no relevant pairs found")

    n = len(observations)
    rate = sum(observations) / n
    half = 1.96 * math.sqrt(max(rate * (1.0 - rate), 0.0) / n)
    if all(o == observations[0] for o in observations):
        p_value = 1.0 if rate == 0.5 else 0.0
    else:
        p_value = float(stats.ttest_1samp(observations, 0.5).pvalue)
    return FactorStats(
        rate=rate,
        ci_low=max(0.0, rate - half),
        ci_high=min(1.0, rate + half),
        p_value=p_value,
        n=n,
    )
