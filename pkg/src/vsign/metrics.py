"""Distance metrics between feature vectors: Euclidean, Manhattan, Hassanat.

The Hassanat distance sums one bounded term per dimension:

    D_i = 1 - (1 + min_i) / (1 + max_i)                        if min_i >= 0
    D_i = 1 - (1 + min_i + |min_i|) / (1 + max_i + |min_i|)    otherwise

where min_i/max_i are the smaller/larger of the two coordinates. Each term
lies in [0, 1), which makes the sum insensitive to per-dimension scale.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError

#: Short wire codes used in CLI flags and report columns.
METRIC_CODES = {"ED": "euclidean", "MD": "manhattan", "HD": "hassanat"}
_CODE_OF = {v: k for k, v in METRIC_CODES.items()}


def resolve_metric(name: str) -> str:
    """Map a metric name or short code (any case) to its canonical name."""
    key = str(name).strip()
    if key.upper() in METRIC_CODES:
        return METRIC_CODES[key.upper()]
    if key.lower() in _CODE_OF:
        return key.lower()
    raise ValueError(f"unknown metric {name!r}; use ED/MD/HD or euclidean/manhattan/hassanat")


def metric_code(name: str) -> str:
    """Canonical short code (ED/MD/HD) for a metric name."""
    return _CODE_OF[resolve_metric(name)]


def _pair(a, b):
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape[-1] != b.shape[-1]:
        raise DimensionMismatchError(f"vectors of length {a.shape[-1]} and {b.shape[-1]}")
    return a, b


def euclidean(a, b) -> float:
    a, b = _pair(a, b)
    return float(np.sqrt(((a - b) ** 2).sum()))


def manhattan(a, b) -> float:
    a, b = _pair(a, b)
    return float(np.abs(a - b).sum())


def _hassanat_terms(a, b):
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    # Negative pairs shift up by |lo| so both entries start at 0; the shared
    # +1 then keeps every term inside [0, 1) and the denominator above 0.
    shift = np.where(lo >= 0.0, 0.0, -lo)
    return 1.0 - (1.0 + lo + shift) / (1.0 + hi + shift)


def hassanat(a, b) -> float:
    a, b = _pair(a, b)
    return float(_hassanat_terms(a, b).sum())


_FUNCS = {"euclidean": euclidean, "manhattan": manhattan, "hassanat": hassanat}


def distance(a, b, metric: str = "euclidean") -> float:
    """Distance between two equal-length vectors under the named metric."""
    return _FUNCS[resolve_metric(metric)](a, b)


def pairwise(points, refs, metric: str = "euclidean") -> np.ndarray:
    """(n, m) distance matrix between rows of points (n, d) and refs (m, d)."""
    points, refs = _pair(np.atleast_2d(points), np.atleast_2d(refs))
    a = points[:, None, :]
    b = refs[None, :, :]
    kind = resolve_metric(metric)
    if kind == "euclidean":
        return np.sqrt(((a - b) ** 2).sum(axis=-1))
    if kind == "manhattan":
        return np.abs(a - b).sum(axis=-1)
    return _hassanat_terms(a, b).sum(axis=-1)
