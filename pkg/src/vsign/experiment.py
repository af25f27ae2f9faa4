"""Benchmark protocols and result reporting.

Two protocols over labeled feature vectors:

* within-session: per session, split the vectors uniformly at random
  (seeded) into ceil(test_fraction * n) test and the rest train, stratified
  so every subject keeps at least one training example; classify the test
  vectors with KNN; repeat for a number of runs.
* cross-session: train on one whole session, test on another, k = 1.

Reports serialize to CSV (columns method,k,metric,session,run,accuracy with
a trailing mean row per setting) or to an equivalent JSON document;
accuracies print with three decimals.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .classify import ClassifierConfig, LabeledVector, knn_classify
from .errors import EmptyTrainingSetError, InsufficientExamplesError
from .metrics import metric_code, resolve_metric


@dataclass(frozen=True)
class ExperimentConfig:
    method: str = "M3"
    k: int = 1
    metric: str = "hassanat"
    test_fraction: float = 0.34
    runs: int = 10
    seed: int = 0
    normalize: bool = True

    def __post_init__(self):
        object.__setattr__(self, "method", str(self.method).upper())
        object.__setattr__(self, "metric", resolve_metric(self.metric))
        if not 0.0 < self.test_fraction < 1.0:
            raise ValueError("test_fraction must be in (0, 1)")
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


@dataclass(frozen=True)
class ResultRow:
    method: str
    k: int
    metric: str  # short code: ED/MD/HD
    session: int
    accuracies: tuple[float, ...]

    @property
    def mean(self) -> float:
        return sum(self.accuracies) / len(self.accuracies)


@dataclass(frozen=True)
class ResultTable:
    rows: tuple[ResultRow, ...] = field(default_factory=tuple)


def split_session(labels: list[str], test_fraction: float, rng: np.random.Generator):
    """Stratified random split of one session's items into train /test.

    Walks a random permutation, taking items into the test set while the
    target size is unmet and the item's subject still has at least two
    untaken examples, so each subject keeps a training example.
    """
    n = len(labels)
    target = math.ceil(test_fraction * n)
    remaining: dict[str, int] = {}
    for lab in labels:
        remaining[lab] = remaining.get(lab, 0) + 1
    test_idx: list[int] = []
    for i in rng.permutation(n):
        if len(test_idx) == target:
            break
        lab = labels[int(i)]
        if remaining[lab] >= 2:
            test_idx.append(int(i))
            remaining[lab] -= 1
    test_set = set(test_idx)
    train_idx = [i for i in range(n) if i not in test_set]
    return train_idx, sorted(test_idx)


def _check_counts(labels: list[str], minimum: int = 2) -> None:
    counts: dict[str, int] = {}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    for lab in sorted(counts):
        if counts[lab] < minimum:
            raise InsufficientExamplesError(f"subject {lab} has {counts[lab]} example(s), needs {minimum}")


def run_experiment(dataset: list[tuple], cfg: ExperimentConfig = ExperimentConfig()) -> ResultTable:
    """Within-session identification accuracy, one ResultRow per session.

    ``dataset`` holds (FeatureVector, SubjectMeta) pairs. Each session is
    split and scored cfg.runs times with per-run seeded generators derived
    from (cfg.seed, session, run), so one seed fixes the whole table.
    """
    if not dataset:
        raise EmptyTrainingSetError("dataset is empty")
    knn_cfg = ClassifierConfig(k=cfg.k, metric=cfg.metric, normalize=cfg.normalize)
    sessions = sorted({meta.session for _, meta in dataset})
    rows = []
    for session in sessions:
        items = [(vec, meta) for vec, meta in dataset if meta.session == session]
        labels = [meta.label for _, meta in items]
        _check_counts(labels)
        accuracies = []
        for run in range(cfg.runs):
            rng = np.random.default_rng([cfg.seed, session, run])
            train_idx, test_idx = split_session(labels, cfg.test_fraction, rng)
            train = [LabeledVector(items[i][0], labels[i]) for i in train_idx]
            correct = 0
            for i in test_idx:
                predicted, _ = knn_classify(train, items[i][0], knn_cfg)
                correct += predicted == labels[i]
            accuracies.append(correct / len(test_idx))
        rows.append(
            ResultRow(
                method=cfg.method,
                k=cfg.k,
                metric=metric_code(cfg.metric),
                session=session,
                accuracies=tuple(accuracies),
            )
        )
    return ResultTable(rows=tuple(rows))


def run_validation(
    train: list[LabeledVector], test: list[tuple], metric: str = "hassanat", normalize: bool = True
) -> float:
    """Cross-session accuracy: nearest neighbor (k = 1) over a fixed split.

    ``train`` holds labeled vectors from the enrollment session, ``test``
    holds (FeatureVector, true_label) pairs from the probe session.
    """
    if not train:
        raise EmptyTrainingSetError("validation training set is empty")
    if not test:
        raise EmptyTrainingSetError("validation test set is empty")
    cfg = ClassifierConfig(k=1, metric=metric, normalize=normalize)
    correct = 0
    for vec, true_label in test:
        predicted, _ = knn_classify(train, vec, cfg)
        correct += predicted == true_label
    return correct / len(test)


def emit_report(table: ResultTable, fmt: str = "csv") -> str:
    """Serialize a result table; accuracies print with three decimals."""
    if fmt == "csv":
        lines = ["method,k,metric,session,run,accuracy"]
        for row in table.rows:
            for run, acc in enumerate(row.accuracies, start=1):
                lines.append(f"{row.method},{row.k},{row.metric},{row.session},{run},{acc:.3f}")
            lines.append(f"{row.method},{row.k},{row.metric},{row.session},mean,{row.mean:.3f}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "rows": [
                {
                    "method": row.method,
                    "k": row.k,
                    "metric": row.metric,
                    "session": row.session,
                    "accuracies": [round(a, 3) for a in row.accuracies],
                    "mean": round(row.mean, 3),
                }
                for row in table.rows
            ]
        }
        return json.dumps(doc, indent=2) + "\n"
    raise ValueError(f"unknown report format {fmt!r}; use csv or json")


def parse_report(doc: str) -> ResultTable:
    """Rebuild a ResultTable from its JSON emission."""
    data = json.loads(doc)
    rows = tuple(
        ResultRow(
            method=r["method"],
            k=int(r["k"]),
            metric=r["metric"],
            session=int(r["session"]),
            accuracies=tuple(float(a) for a in r["accuracies"]),
        )
        for r in data["rows"]
    )
    return ResultTable(rows=rows)
