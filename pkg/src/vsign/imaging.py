"""Raster primitives shared by the whole pipeline.

Image conventions used across the package:

* RGB image:  ndarray, shape (h, w, 3), dtype uint8.
* Gray image: ndarray, shape (h, w), dtype uint8.
* Binary mask: ndarray, shape (h, w), dtype bool; True is foreground.
* Histogram: ndarray, shape (256,), integer counts, one bin per gray level.

Coordinates follow screen order: x grows rightward (columns), y grows
downward (rows). A pixel coordinate is a Point(x, y).
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np
from scipy import ndimage

from .errors import EmptyMaskError, ZeroDimensionError

# 3x3 all-ones structuring element: 8-connected neighborhood.
_BOX3 = np.ones((3, 3), dtype=bool)
# 4-connected structuring element for component labeling.
_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)

# BT.601 luma weights.
_LUMA = (0.299, 0.587, 0.114)


class Point(NamedTuple):
    """Integer pixel coordinate, x = column, y = row."""

    x: int
    y: int


def as_rgb(img) -> np.ndarray:
    img = np.asarray(img)
    if img.ndim != 3 or img.shape[2] != 3 or img.dtype != np.uint8:
        raise ValueError(f"expected (h, w, 3) uint8 RGB image, got shape {img.shape} dtype {img.dtype}")
    return img


def as_gray(img) -> np.ndarray:
    img = np.asarray(img)
    if img.ndim != 2 or img.dtype != np.uint8:
        raise ValueError(f"expected (h, w) uint8 gray image, got shape {img.shape} dtype {img.dtype}")
    return img


def as_mask(mask) -> np.ndarray:
    mask = np.asarray(mask)
    if mask.ndim != 2:
        raise ValueError(f"expected 2-d binary mask, got shape {mask.shape}")
    if mask.dtype != bool:
        vals = np.unique(mask)
        if not np.isin(vals, (0, 1)).all():
            raise ValueError("mask values must be 0/1 or bool")
        mask = mask.astype(bool)
    return mask


def luma(rgb) -> np.ndarray:
    """BT.601 luma of an RGB array, as float64, without rounding."""
    rgb = np.asarray(rgb, dtype=np.float64)
    return _LUMA[0] * rgb[..., 0] + _LUMA[1] * rgb[..., 1] + _LUMA[2] * rgb[..., 2]


def to_grayscale(img) -> np.ndarray:
    """Convert RGB to gray with BT.601 weights, rounding half up.

    round(0.299 r + 0.587 g + 0.114 b), clamped to [0, 255].
    """
    img = as_rgb(img)
    g = np.floor(luma(img) + 0.5)  # round half up, ties never round to even
    return np.clip(g, 0, 255).astype(np.uint8)


def _box_weights(src: int, dst: int) -> np.ndarray:
    """(dst, src) area-overlap weight matrix; each row sums to 1.

    Output cell j covers the source interval [j*src/dst, (j+1)*src/dst);
    its weight on source cell c is the length of the overlap with [c, c+1).
    """
    w = np.zeros((dst, src), dtype=np.float64)
    step = src / dst
    for j in range(dst):
        lo = j * step
        hi = lo + step
        c0 = int(np.floor(lo))
        c1 = min(int(np.ceil(hi)), src)
        for c in range(c0, c1):
            w[j, c] = min(hi, c + 1) - max(lo, c)
    w /= w.sum(axis=1, keepdims=True)
    return w


def downscale(img, factor: float) -> np.ndarray:
    """Shrink an RGB image by a ratio using exact box averaging.

    Parameters
    ----------
    img : (h, w, 3) uint8
    factor : float in (0, 1]
        Output dimensions are round(factor * dim), rounding half up.

    Each output pixel is the area-weighted average of its source footprint,
    rounded half up per channel, so overall mean brightness is preserved to
    within the final rounding.
    """
    img = as_rgb(img)
    if not 0.0 < factor <= 1.0:
        raise ValueError(f"factor must be in (0, 1], got {factor}")
    h, w = img.shape[:2]
    oh = int(np.floor(factor * h + 0.5))
    ow = int(np.floor(factor * w + 0.5))
    if oh < 1 or ow < 1:
        raise ZeroDimensionError(f"factor {factor} shrinks {w}x{h} to {ow}x{oh}")
    wr = _box_weights(h, oh)
    wc = _box_weights(w, ow)
    out = np.empty((oh, ow, 3), dtype=np.uint8)
    for ch in range(3):
        avg = wr @ img[..., ch].astype(np.float64) @ wc.T
        out[..., ch] = np.clip(np.floor(avg + 0.5), 0, 255).astype(np.uint8)
    return out


def dilate(mask) -> np.ndarray:
    """Binary dilation with the 3x3 all-ones element, clipped at borders."""
    mask = as_mask(mask)
    return ndimage.binary_dilation(mask, structure=_BOX3)


def contour(mask) -> np.ndarray:
    """One-pixel outer boundary: dilate(mask) minus mask."""
    mask = as_mask(mask)
    return dilate(mask) & ~mask


def largest_component(mask) -> np.ndarray:
    """Keep only the largest 4-connected foreground component.

    Size ties are broken by the component whose first pixel comes earliest
    in row-major scan order. Raises EmptyMaskError on an all-background mask.
    """
    mask = as_mask(mask)
    if not mask.any():
        raise EmptyMaskError("mask has no foreground pixels")
    labels, n = ndimage.label(mask, structure=_CROSS)
    if n == 1:
        return mask.copy()
    sizes = np.bincount(labels.ravel())
    sizes[0] = 0
    best = sizes.max()
    candidates = np.flatnonzero(sizes == best)
    if candidates.size == 1:
        keep = candidates[0]
    else:
        flat = labels.ravel()
        keep = flat[np.isin(flat, candidates).argmax()]
    return labels == keep


def histogram(gray) -> np.ndarray:
    """256-bin gray level histogram; counts sum to the pixel count."""
    gray = as_gray(gray)
    return np.bincount(gray.ravel(), minlength=256).astype(np.int64)
