"""Hand/background segmentation.

Three interchangeable routes produce a binary hand mask from an RGB image:

* ``otsu``: global threshold on the BT.601 gray image maximizing the
  between-class variance; the brighter class is foreground.
* ``kmeans``: 2-means clustering of RGB triples under a pluggable distance
  (Euclidean, Manhattan or Hassanat); the cluster whose final centroid is
  brighter becomes foreground.
* ``pixel``: a trainable nearest-sample color classifier; each pixel takes
  the label of its closest training color, ties favoring background.

``segment`` wraps any route and keeps only the largest 4-connected
component, which removes salt specks and stray blobs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    ConstantImageError,
    DegenerateClustersError,
    EmptyTrainingSetError,
    MissingClassError,
)
from .imaging import as_gray, as_rgb, histogram, largest_component, luma, to_grayscale
from .metrics import pairwise, resolve_metric

FOREGROUND = "foreground"
BACKGROUND = "background"

SEGMENTATION_METHODS = ("otsu", "kmeans", "pixel")


def otsu_threshold(gray) -> tuple[int, np.ndarray]:
    """Between-class-variance threshold of a gray image.

    Returns ``(t, mask)`` where t in [0, 255] maximizes

        sigma_b^2(t) = w0 * w1 * (mu0 - mu1)^2

    for the split "class 0: value <= t, class 1: value > t", ties broken by
    the smallest t, and ``mask = gray > t`` (the brighter class is taken as
    foreground). Raises ConstantImageError when only one gray value occurs.

    The argmax is computed with exact integer cross-multiplication, so no
    floating-point near-tie can flip the chosen index:

        sigma_b^2(t) = (s0*c1 - s1*c0)^2 / (N^2 * c0 * c1)

    with c = class pixel counts and s = class gray sums; the constant N^2 is
    dropped and fractions are compared by cross-multiplying.
    """
    gray = as_gray(gray)
    hist = histogram(gray)
    if np.count_nonzero(hist) < 2:
        raise ConstantImageError("image has a single gray value, nothing to threshold")
    counts = [int(c) for c in hist]
    sums = [v * c for v, c in enumerate(counts)]
    total_c = sum(counts)
    total_s = sum(sums)
    best_t = 0
    best_num = -1  # numerator (s0*c1 - s1*c0)^2, exact int
    best_den = 1  # denominator c0*c1, exact int
    c0 = 0
    s0 = 0
    for t in range(256):
        c0 += counts[t]
        s0 += sums[t]
        c1 = total_c - c0
        if c0 == 0 or c1 == 0:
            continue
        s1 = total_s - s0
        num = (s0 * c1 - s1 * c0) ** 2
        den = c0 * c1
        # strict improvement keeps the smallest maximizing t
        if num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den
    return best_t, gray > best_t


def kmeans_segment(img, metric: str = "euclidean", max_iter: int = 100) -> np.ndarray:
    """2-means RGB clustering; the brighter cluster becomes the mask.

    Centroids start at the darkest and brightest pixels by luma (scan-order
    first on ties) and alternate assignment/mean steps until assignments
    stop changing or ``max_iter`` rounds pass. Fully deterministic.
    """
    img = as_rgb(img)
    metric = resolve_metric(metric)
    pixels = img.reshape(-1, 3).astype(np.float64)
    if (pixels == pixels[0]).all():
        raise DegenerateClustersError("all pixels share one color")
    bright = luma(img).ravel()
    centroids = np.stack([pixels[bright.argmin()], pixels[bright.argmax()]])
    assign = np.zeros(len(pixels), dtype=np.int8)
    for _ in range(max_iter):
        new_assign = pairwise(pixels, centroids, metric).argmin(axis=1).astype(np.int8)
        if (new_assign == assign).all():
            assign = new_assign
            break
        assign = new_assign
        for i in (0, 1):
            chosen = pixels[assign == i]
            if len(chosen):
                centroids[i] = chosen.mean(axis=0)
    lum0 = float(np.dot(centroids[0], (0.299, 0.587, 0.114)))
    lum1 = float(np.dot(centroids[1], (0.299, 0.587, 0.114)))
    fg = 1 if lum1 >= lum0 else 0
    return (assign == fg).reshape(img.shape[:2])


@dataclass(frozen=True)
class PixelModel:
    """Trained color samples for the nearest-sample pixel classifier.

    colors: (n, 3) float array of RGB training colors, kept verbatim.
    labels: (n,) bool array, True where the sample is foreground.
    metric: canonical distance name used at both train and classify time.
    """

    colors: np.ndarray
    labels: np.ndarray
    metric: str = "euclidean"

    def to_json(self) -> str:
        samples = [
            {"r": int(c[0]), "g": int(c[1]), "b": int(c[2]), "label": FOREGROUND if fg else BACKGROUND}
            for c, fg in zip(self.colors, self.labels)
        ]
        return json.dumps({"metric": self.metric, "samples": samples}, indent=2) + "\n"

    @classmethod
    def from_json(cls, doc: str) -> "PixelModel":
        data = json.loads(doc)
        samples = data["samples"]
        colors = np.array([[s["r"], s["g"], s["b"]] for s in samples], dtype=np.float64)
        labels = np.array([s["label"] == FOREGROUND for s in samples], dtype=bool)
        return cls(colors=colors, labels=labels, metric=resolve_metric(data.get("metric", "euclidean")))

    def save(self, path) -> None:
        Path(path).write_text(self.to_json())

    @classmethod
    def load(cls, path) -> "PixelModel":
        return cls.from_json(Path(path).read_text())


def train_pixel_classifier(samples, metric: str = "euclidean") -> PixelModel:
    """Store labeled (r, g, b) samples verbatim as a 1-NN color model.

    ``samples`` is an iterable of ((r, g, b), is_foreground). Duplicate
    colors are kept. Raises MissingClassError unless both classes appear.
    """
    colors = []
    labels = []
    for color, is_fg in samples:
        colors.append([float(v) for v in color])
        labels.append(bool(is_fg))
    if not colors:
        raise EmptyTrainingSetError("no pixel samples given")
    labels = np.array(labels, dtype=bool)
    if labels.all() or not labels.any():
        raise MissingClassError("need at least one foreground and one background sample")
    return PixelModel(colors=np.array(colors, dtype=np.float64), labels=labels, metric=resolve_metric(metric))


def classify_pixels(img, model: PixelModel) -> np.ndarray:
    """Label every pixel by its nearest training sample color.

    A pixel is foreground only when its closest foreground sample is
    strictly nearer than its closest background sample, so exact ties fall
    to background.
    """
    img = as_rgb(img)
    pixels = img.reshape(-1, 3).astype(np.float64)
    d = pairwise(pixels, model.colors, model.metric)
    d_fg = d[:, model.labels].min(axis=1)
    d_bg = d[:, ~model.labels].min(axis=1)
    return (d_fg < d_bg).reshape(img.shape[:2])


def segment(img, method: str = "otsu", metric: str = "euclidean", model: PixelModel | None = None) -> np.ndarray:
    """Segment an RGB image and keep the largest 4-connected component.

    method is one of "otsu", "kmeans", "pixel"; "pixel" requires a trained
    PixelModel. Raises EmptyMaskError when the raw mask has no foreground.
    """
    if method not in SEGMENTATION_METHODS:
        raise ValueError(f"unknown segmentation method {method!r}; use one of {SEGMENTATION_METHODS}")
    if method == "otsu":
        _, mask = otsu_threshold(to_grayscale(img))
    elif method == "kmeans":
        mask = kmeans_segment(img, metric=metric)
    else:
        if model is None:
            raise ValueError("pixel segmentation needs a trained PixelModel")
        mask = classify_pixels(img, model)
    return largest_component(mask)
