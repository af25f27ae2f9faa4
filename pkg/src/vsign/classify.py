"""Feature vectors, min-max normalization and the KNN matcher.

Feature vectors carry a method tag that fixes their length:

* M1: 7 landmark geometry features (distances and triangle areas).
* M2: 16 moment features (Hu 1-7 plus eccentricity, upper then lower finger).
* M3: 23 features, the M1 block followed by the M2 block.

Template stores are JSON lines, one ``{"label", "method", "values"}`` record
per line; normalization stats persist alongside as a JSON object with
per-dimension ``min`` and ``max`` arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyTrainingSetError,
    MethodMismatchError,
)
from .metrics import pairwise, resolve_metric

#: Method tag -> required vector length.
METHOD_DIMS = {"M1": 7, "M2": 16, "M3": 23}

#: Normalized values are clipped to this window before matching.
CLAMP_LO, CLAMP_HI = -0.5, 1.5


def resolve_method(name: str) -> str:
    key = str(name).strip().upper()
    if key not in METHOD_DIMS:
        raise ValueError(f"unknown method {name!r}; use one of M1, M2, M3")
    return key


@dataclass(frozen=True)
class FeatureVector:
    method: str
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "method", resolve_method(self.method))
        vals = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", vals)
        want = METHOD_DIMS[self.method]
        if vals.shape != (want,):
            raise DimensionMismatchError(f"{self.method} vector needs {want} values, got shape {vals.shape}")
        if not np.isfinite(vals).all():
            raise ValueError(f"{self.method} vector contains non-finite values")


@dataclass(frozen=True)
class LabeledVector:
    vector: FeatureVector
    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be a non-empty string")


@dataclass(frozen=True)
class NormalizationStats:
    lo: np.ndarray
    hi: np.ndarray

    def to_json(self) -> str:
        return json.dumps({"min": self.lo.tolist(), "max": self.hi.tolist()}) + "\n"

    @classmethod
    def from_json(cls, doc: str) -> "NormalizationStats":
        data = json.loads(doc)
        return cls(lo=np.asarray(data["min"], dtype=np.float64), hi=np.asarray(data["max"], dtype=np.float64))


@dataclass(frozen=True)
class ClassifierConfig:
    k: int = 1
    metric: str = "hassanat"
    normalize: bool = True

    def __post_init__(self):
        if self.k < 1 or self.k % 2 == 0:
            raise ValueError(f"k must be a positive odd number, got {self.k}")
        object.__setattr__(self, "metric", resolve_metric(self.metric))


class Neighbor(NamedTuple):
    index: int
    label: str
    distance: float


def concat_features(geometric: FeatureVector, signature: FeatureVector) -> FeatureVector:
    """Fuse an M1 vector and an M2 vector into an M3 vector, M1 block first."""
    if geometric.method != "M1" or signature.method != "M2":
        raise MethodMismatchError(f"need (M1, M2), got ({geometric.method}, {signature.method})")
    return FeatureVector("M3", np.concatenate([geometric.values, signature.values]))


def _train_matrix(train: list[LabeledVector]) -> np.ndarray:
    if not train:
        raise EmptyTrainingSetError("training set is empty")
    dims = {lv.vector.values.shape[0] for lv in train}
    if len(dims) != 1:
        raise DimensionMismatchError(f"training vectors disagree on length: {sorted(dims)}")
    return np.stack([lv.vector.values for lv in train])


def fit_normalizer(train: list[LabeledVector]) -> NormalizationStats:
    """Per-dimension min and max over a non-empty training set."""
    mat = _train_matrix(train)
    return NormalizationStats(lo=mat.min(axis=0), hi=mat.max(axis=0))


def normalize(values, stats: NormalizationStats) -> np.ndarray:
    """Map values to (v - min) / (max - min), clipped to [-0.5, 1.5].

    Dimensions whose training min equals their max map to 0.
    """
    values = np.asarray(values, dtype=np.float64)
    if values.shape[-1] != stats.lo.shape[0]:
        raise DimensionMismatchError(f"vector length {values.shape[-1]} vs stats length {stats.lo.shape[0]}")
    span = stats.hi - stats.lo
    flat = span == 0
    safe = np.where(flat, 1.0, span)
    out = (values - stats.lo) / safe
    out = np.where(flat, 0.0, out)
    return np.clip(out, CLAMP_LO, CLAMP_HI)


def knn_classify(
    train: list[LabeledVector], query: FeatureVector, cfg: ClassifierConfig = ClassifierConfig()
) -> tuple[str, list[Neighbor]]:
    """Majority vote over the k nearest training vectors.

    Distance ties are broken by training-set order (stable sort). Vote ties
    go to the label with the smallest summed distance, then to the earliest
    (nearest) neighbor whose label is still tied. Returns the winning label
    and the k neighbors in match order.
    """
    mat = _train_matrix(train)
    if cfg.k > len(train):
        raise ValueError(f"k={cfg.k} exceeds training size {len(train)}")
    q = query.values
    if q.shape[0] != mat.shape[1]:
        raise DimensionMismatchError(f"query length {q.shape[0]} vs training length {mat.shape[1]}")
    if cfg.normalize:
        stats = fit_normalizer(train)
        mat = normalize(mat, stats)
        q = normalize(q, stats)
    dists = pairwise(mat, q[None, :], cfg.metric)[:, 0]
    order = np.argsort(dists, kind="stable")[: cfg.k]
    neighbors = [Neighbor(int(i), train[int(i)].label, float(dists[int(i)])) for i in order]

    counts: dict[str, int] = {}
    sums: dict[str, float] = {}
    for nb in neighbors:
        counts[nb.label] = counts.get(nb.label, 0) + 1
        sums[nb.label] = sums.get(nb.label, 0.0) + nb.distance
    top = max(counts.values())
    tied = [lab for lab, c in counts.items() if c == top]
    if len(tied) > 1:
        low = min(sums[lab] for lab in tied)
        tied = [lab for lab in tied if sums[lab] == low]
    if len(tied) > 1:
        for nb in neighbors:
            if nb.label in tied:
                tied = [nb.label]
                break
    return tied[0], neighbors


# --- template store (JSON lines) -------------------------------------------


def to_record(lv: LabeledVector) -> dict:
    return {"label": lv.label, "method": lv.vector.method, "values": lv.vector.values.tolist()}


def from_record(rec: dict) -> LabeledVector:
    return LabeledVector(vector=FeatureVector(rec["method"], rec["values"]), label=str(rec["label"]))


def save_templates(path, templates: list[LabeledVector]) -> None:
    lines = [json.dumps(to_record(lv)) for lv in templates]
    Path(path).write_text("\n".join(lines) + ("\n" if lines else ""))


def load_templates(path) -> list[LabeledVector]:
    out = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if line:
            out.append(from_record(json.loads(line)))
    return out
