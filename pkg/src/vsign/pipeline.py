"""End-to-end feature extraction: image -> mask -> landmarks -> vector."""

from __future__ import annotations

import logging

from .classify import FeatureVector, concat_features
from .errors import VsignError
from .geometry import cut_fingers, find_keypoints, geometric_features
from .moments import finger_signature
from .segmentation import PixelModel, segment

log = logging.getLogger(__name__)


def extract_features(
    img,
    method: str = "M3",
    seg: str = "otsu",
    seg_metric: str = "euclidean",
    pixel_model: PixelModel | None = None,
) -> FeatureVector:
    """Extract an M1, M2 or M3 feature vector from one RGB capture.

    The hand is segmented with the chosen route, the five landmarks are
    located, and depending on the method the landmark geometry (M1), the
    cut-finger moment signature (M2) or both blocks fused (M3) are returned.
    Typed pipeline errors propagate to the caller.
    """
    method = str(method).upper()
    mask = segment(img, method=seg, metric=seg_metric, model=pixel_model)
    kp = find_keypoints(mask)
    if method == "M1":
        return FeatureVector("M1", geometric_features(kp).to_array())
    fingers = cut_fingers(mask, kp)
    signature = finger_signature(fingers)
    if method == "M2":
        return signature
    if method == "M3":
        return concat_features(FeatureVector("M1", geometric_features(kp).to_array()), signature)
    raise ValueError(f"unknown method {method!r}; use M1, M2 or M3")


def extract_dataset(items, method: str = "M3", seg: str = "otsu", **kwargs):
    """Extract features for (image, meta) pairs, skipping failures.

    Returns (extracted, skipped): extracted is a list of (FeatureVector,
    meta) and skipped a list of (meta, error). Failures are logged, not
    raised, so one bad capture cannot sink a batch run.
    """
    extracted = []
    skipped = []
    for img, meta in items:
        try:
            extracted.append((extract_features(img, method=method, seg=seg, **kwargs), meta))
        except VsignError as err:
            log.warning("skipping %s: %s: %s", meta, type(err).__name__, err)
            skipped.append((meta, err))
    return extracted, skipped
