"""Silhouette landmarks and distance/area features of a two-finger mask.

The mask is assumed to show a roughly horizontal hand whose two extended
fingers point toward -x (leftward). Five landmarks are read off the
one-pixel outer contour:

* upper_tip: first contour pixel scanning rows top to bottom, columns left
  to right (the upper fingertip).
* lower_tip: same scan from the bottom up (the lower fingertip).
* valley: the deepest point of the gap between the fingers. Candidates are
  contour pixels strictly between the tip rows whose row is clear of
  foreground all the way to the left image edge and whose column carries
  foreground both above and below (so the pixel sits inside the gap, not
  beside the silhouette). The candidate with the largest x wins, ties going
  to the smaller y.
* upper_palm / lower_palm: first foreground pixel in the valley's column
  scanning down from the top, and up from the bottom.

From these, seven features: five pairwise distances and the areas of the
two tip/valley/palm triangles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from .errors import (
    DegenerateTipsError,
    EmptyMaskError,
    FingerSeparationError,
    NoValleyError,
)
from .imaging import Point, as_mask, contour

_CROSS = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


@dataclass(frozen=True)
class KeyPoints:
    upper_tip: Point
    lower_tip: Point
    valley: Point
    upper_palm: Point
    lower_palm: Point


@dataclass(frozen=True)
class FingerMasks:
    """Full-size disjoint masks of the two cut-off fingers."""

    upper: np.ndarray
    lower: np.ndarray


@dataclass(frozen=True)
class GeometricFeatures:
    upper_tip_to_upper_palm: float
    upper_tip_to_valley: float
    lower_tip_to_lower_palm: float
    lower_tip_to_valley: float
    upper_palm_to_valley: float
    upper_triangle_area: float
    lower_triangle_area: float

    def to_array(self) -> np.ndarray:
        return np.array(
            [
                self.upper_tip_to_upper_palm,
                self.upper_tip_to_valley,
                self.lower_tip_to_lower_palm,
                self.lower_tip_to_valley,
                self.upper_palm_to_valley,
                self.upper_triangle_area,
                self.lower_triangle_area,
            ],
            dtype=np.float64,
        )


def triangle_area(a: Point, b: Point, c: Point) -> float:
    """Area of the triangle a-b-c.

    |ax (by - cy) + bx (cy - ay) + cx (ay - by)| / 2, exact for integer
    coordinates (the cross product stays integral before the halving).
    """
    s = a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1])
    return abs(s) / 2


def _first_true(flat: np.ndarray, width: int) -> tuple[int, int]:
    idx = int(np.flatnonzero(flat)[0])
    y, x = divmod(idx, width)
    return x, y


def find_keypoints(hand) -> KeyPoints:
    """Locate the five silhouette landmarks on a two-finger hand mask.

    Raises EmptyMaskError on an empty mask, DegenerateTipsError when the two
    tip scans do not straddle distinct rows, and NoValleyError when no
    inter-finger gap pixel qualifies (for instance a single solid blob).
    """
    hand = as_mask(hand)
    if not hand.any():
        raise EmptyMaskError("cannot find landmarks on an empty mask")
    edge = contour(hand)
    h, w = hand.shape

    x1, y1 = _first_true(edge.ravel(), w)
    xf, yf = _first_true(edge[::-1].ravel(), w)
    x2, y2 = xf, h - 1 - yf
    if y1 >= y2:
        raise DegenerateTipsError(f"tip rows {y1} and {y2} do not straddle a gap")

    # Valley candidates, all computed as (h, w) boolean planes.
    rows = np.arange(h)[:, None]
    cols = np.arange(w)[None, :]
    has_fg_row = hand.any(axis=1)
    first_fg_x = np.where(has_fg_row, hand.argmax(axis=1), w)
    clear_to_left = cols < first_fg_x[:, None]
    cum = np.cumsum(hand, axis=0)
    fg_above = np.vstack([np.zeros((1, w), dtype=bool), cum[:-1] > 0])
    cum_up = np.cumsum(hand[::-1], axis=0)
    fg_below = np.vstack([(cum_up[:-1] > 0)[::-1], np.zeros((1, w), dtype=bool)])
    candidates = edge & clear_to_left & fg_above & fg_below & (rows > y1) & (rows < y2)
    if not candidates.any():
        raise NoValleyError("no reachable gap pixel between the tip rows")
    ys, xs = np.nonzero(candidates)
    pick = np.lexsort((ys, -xs))[0]
    vx, vy = int(xs[pick]), int(ys[pick])

    col = np.flatnonzero(hand[:, vx])
    if col.size == 0:
        raise NoValleyError(f"valley column {vx} holds no foreground for the palm scans")
    upper_palm = Point(vx, int(col[0]))
    lower_palm = Point(vx, int(col[-1]))
    return KeyPoints(
        upper_tip=Point(x1, y1),
        lower_tip=Point(x2, y2),
        valley=Point(vx, vy),
        upper_palm=upper_palm,
        lower_palm=lower_palm,
    )


def geometric_features(kp: KeyPoints) -> GeometricFeatures:
    """Five landmark distances plus the two finger triangle areas."""
    ed = math.dist
    return GeometricFeatures(
        upper_tip_to_upper_palm=ed(kp.upper_tip, kp.upper_palm),
        upper_tip_to_valley=ed(kp.upper_tip, kp.valley),
        lower_tip_to_lower_palm=ed(kp.lower_tip, kp.lower_palm),
        lower_tip_to_valley=ed(kp.lower_tip, kp.valley),
        upper_palm_to_valley=ed(kp.upper_palm, kp.valley),
        upper_triangle_area=triangle_area(kp.upper_tip, kp.valley, kp.upper_palm),
        lower_triangle_area=triangle_area(kp.lower_tip, kp.valley, kp.lower_palm),
    )


def _label_adjacent(labels: np.ndarray, tip: Point) -> int:
    """Component label at or 8-adjacent to a tip pixel; 0 when none."""
    h, w = labels.shape
    x, y = tip
    window = labels[max(0, y - 1) : y + 2, max(0, x - 1) : x + 2]
    found = np.unique(window[window > 0])
    return int(found[0]) if found.size else 0


def cut_fingers(hand, kp: KeyPoints) -> FingerMasks:
    """Split off the two fingers by erasing everything at x >= valley.x.

    The upper finger is the remaining 4-connected component containing (or
    8-adjacent to) the upper tip, the lower finger likewise for the lower
    tip. Raises FingerSeparationError when a tip has no component or both
    tips land in the same one.
    """
    hand = as_mask(hand)
    cut = hand.copy()
    cut[:, kp.valley.x :] = False
    labels, _ = ndimage.label(cut, structure=_CROSS)
    up = _label_adjacent(labels, kp.upper_tip)
    low = _label_adjacent(labels, kp.lower_tip)
    if up == 0 or low == 0:
        raise FingerSeparationError("a fingertip has no remaining component after the cut")
    if up == low:
        raise FingerSeparationError("both fingertips fall in one component; fingers touch left of the valley")
    return FingerMasks(upper=labels == up, lower=labels == low)


def render_overlay(hand, kp: KeyPoints) -> np.ndarray:
    """Debug RGB rendering: mask in gray, landmark segments and dots on top."""
    hand = as_mask(hand)
    img = np.zeros(hand.shape + (3,), dtype=np.uint8)
    img[hand] = (90, 90, 90)
    segments = [
        (kp.upper_tip, kp.upper_palm),
        (kp.upper_tip, kp.valley),
        (kp.lower_tip, kp.lower_palm),
        (kp.lower_tip, kp.valley),
        (kp.upper_palm, kp.valley),
    ]
    for a, b in segments:
        n = max(abs(b.x - a.x), abs(b.y - a.y)) + 1
        xs = np.rint(np.linspace(a.x, b.x, n)).astype(int)
        ys = np.rint(np.linspace(a.y, b.y, n)).astype(int)
        img[ys, xs] = (70, 160, 255)
    colors = {
        kp.upper_tip: (255, 80, 80),
        kp.lower_tip: (255, 80, 80),
        kp.valley: (80, 255, 80),
        kp.upper_palm: (255, 220, 60),
        kp.lower_palm: (255, 220, 60),
    }
    for pt, color in colors.items():
        img[max(0, pt.y - 1) : pt.y + 2, max(0, pt.x - 1) : pt.x + 2] = color
    return img
