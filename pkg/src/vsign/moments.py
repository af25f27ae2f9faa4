"""Region moments: central, normalized, the seven Hu invariants, eccentricity.

Conventions: a region is a binary mask (membership weights, not intensity).
``mu[j, k]`` is the central moment of order j in x (columns) and k in y
(rows). Only orders j + k <= 3 are defined; higher cells hold NaN.

Central moments are derived from exact int64 raw moments of coordinates
shifted to the region's bounding box, so an integer translation of the
region reproduces every downstream value bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateShapeError, EmptyRegionError
from .imaging import as_mask


@dataclass(frozen=True)
class CentralMoments:
    m00: float
    centroid: tuple[float, float]  # (x in columns, y in rows)
    mu: np.ndarray  # (4, 4), mu[j, k] defined for j + k <= 3


@dataclass(frozen=True)
class NormalizedMoments:
    eta: np.ndarray  # (4, 4), eta[j, k] defined for 2 <= j + k <= 3


@dataclass(frozen=True)
class HuDescriptor:
    """Seven Hu invariants plus eccentricity of one region."""

    h: np.ndarray  # (7,)
    e: float

    def to_array(self) -> np.ndarray:
        return np.append(self.h, self.e)


def central_moments(region) -> CentralMoments:
    """Central moments mu_jk = sum (x - xbar)^j (y - ybar)^k over the region.

    Raises EmptyRegionError when the mask holds no pixels. mu10 and mu01 are
    exactly zero by construction.
    """
    region = as_mask(region)
    ys, xs = np.nonzero(region)
    if xs.size == 0:
        raise EmptyRegionError("region has no pixels")
    x0, y0 = int(xs.min()), int(ys.min())
    xs = (xs - x0).astype(np.int64)
    ys = (ys - y0).astype(np.int64)

    # Exact raw moments m_jk = sum x^j y^k for j + k <= 3 (int64; bounding
    # box coordinates keep the products far from overflow).
    x2, x3 = xs * xs, xs * xs * xs
    y2, y3 = ys * ys, ys * ys * ys
    m00 = int(xs.size)
    m10, m01 = int(xs.sum()), int(ys.sum())
    m20, m02, m11 = int(x2.sum()), int(y2.sum()), int((xs * ys).sum())
    m30, m03 = int(x3.sum()), int(y3.sum())
    m21, m12 = int((x2 * ys).sum()), int((xs * y2).sum())

    n = float(m00)
    xbar = m10 / n
    ybar = m01 / n

    mu = np.full((4, 4), np.nan)
    mu[0, 0] = n
    mu[1, 0] = 0.0
    mu[0, 1] = 0.0
    mu[1, 1] = m11 - xbar * m01
    mu[2, 0] = m20 - xbar * m10
    mu[0, 2] = m02 - ybar * m01
    mu[2, 1] = m21 - 2.0 * xbar * m11 - ybar * m20 + 2.0 * xbar * xbar * m01
    mu[1, 2] = m12 - 2.0 * ybar * m11 - xbar * m02 + 2.0 * ybar * ybar * m10
    mu[3, 0] = m30 - 3.0 * xbar * m20 + 2.0 * xbar * xbar * m10
    mu[0, 3] = m03 - 3.0 * ybar * m02 + 2.0 * ybar * ybar * m01
    return CentralMoments(m00=n, centroid=(x0 + xbar, y0 + ybar), mu=mu)


def normalized_moments(cm: CentralMoments) -> NormalizedMoments:
    """Scale-free moments eta_jk = mu_jk / m00^(1 + (j + k) / 2)."""
    eta = np.full((4, 4), np.nan)
    for j in range(4):
        for k in range(4):
            if 2 <= j + k <= 3:
                eta[j, k] = cm.mu[j, k] / cm.m00 ** (1.0 + (j + k) / 2.0)
    return NormalizedMoments(eta=eta)


def hu_moments(nm: NormalizedMoments) -> np.ndarray:
    """The seven Hu invariant combinations of normalized moments.

    Invariant to translation, scale and rotation; the seventh flips sign
    under mirroring.
    """
    e = nm.eta
    n20, n02, n11 = e[2, 0], e[0, 2], e[1, 1]
    n30, n03, n21, n12 = e[3, 0], e[0, 3], e[2, 1], e[1, 2]
    a = n30 + n12
    b = n21 + n03
    c = n30 - 3.0 * n12
    d = 3.0 * n21 - n03
    h1 = n20 + n02
    h2 = (n20 - n02) ** 2 + 4.0 * n11 ** 2
    h3 = c ** 2 + d ** 2
    h4 = a ** 2 + b ** 2
    h5 = c * a * (a ** 2 - 3.0 * b ** 2) + d * b * (3.0 * a ** 2 - b ** 2)
    h6 = (n20 - n02) * (a ** 2 - b ** 2) + 4.0 * n11 * a * b
    h7 = d * a * (a ** 2 - 3.0 * b ** 2) - c * b * (3.0 * a ** 2 - b ** 2)
    return np.array([h1, h2, h3, h4, h5, h6, h7])


def eccentricity(cm: CentralMoments) -> float:
    """Elongation in [0, 1] from the covariance eigenvalues.

    E = sqrt(1 - l2 / l1) with l1 >= l2 the eigenvalues of the second-order
    moment matrix divided by m00. Near 0 for rotationally symmetric regions,
    toward 1 for elongated ones. Raises DegenerateShapeError when the
    leading eigenvalue is not positive (a single pixel).
    """
    mu20 = cm.mu[2, 0] / cm.m00
    mu02 = cm.mu[0, 2] / cm.m00
    mu11 = cm.mu[1, 1] / cm.m00
    half_span = np.sqrt(4.0 * mu11 ** 2 + (mu20 - mu02) ** 2) / 2.0
    mean = (mu20 + mu02) / 2.0
    l1 = mean + half_span
    l2 = mean - half_span
    if l1 <= 0.0:
        raise DegenerateShapeError("region has no spatial spread")
    l2 = max(l2, 0.0)  # covariance eigenvalues cannot be negative; clip rounding
    return float(np.sqrt(1.0 - l2 / l1))


def hu_descriptor(region) -> HuDescriptor:
    """Hu invariants and eccentricity of one region in a single call."""
    cm = central_moments(region)
    return HuDescriptor(h=hu_moments(normalized_moments(cm)), e=eccentricity(cm))


def finger_signature(fingers) -> "FeatureVector":
    """16-value M2 vector: [Hu1..Hu7, E] of the upper finger, then the lower.

    ``fingers`` is a FingerMasks pair; either mask being empty raises
    EmptyRegionError.
    """
    from .classify import FeatureVector

    upper = hu_descriptor(fingers.upper)
    lower = hu_descriptor(fingers.lower)
    return FeatureVector("M2", np.concatenate([upper.to_array(), lower.to_array()]))
