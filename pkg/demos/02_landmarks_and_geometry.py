"""Locate the five silhouette landmarks and derive the geometric features.

Walks one capture through segmentation, the landmark scan (two fingertips,
the between-fingers valley, the two palm points in the valley's column),
finger cutting, and the seven-value geometric feature vector. Saves a
debug overlay with the landmarks drawn on the silhouette.

Usage: python 02_landmarks_and_geometry.py [--seed N] [--out DIR]
"""

import argparse
from dataclasses import fields
from pathlib import Path

import numpy as np

from vsign import (
    cut_fingers,
    find_keypoints,
    geometric_features,
    render_overlay,
    render_subject_image,
    sample_subject,
    segment,
    write_mask,
    write_rgb,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2)
    ap.add_argument("--out", default="demo_out")
    args = ap.parse_args()

    params = sample_subject(np.random.default_rng([args.seed, 1]))
    img = render_subject_image(params, np.random.default_rng(args.seed), session=1)
    mask = segment(img)

    kp = find_keypoints(mask)
    print("landmarks (x, y):")
    print(f"  upper fingertip  {tuple(kp.upper_tip)}")
    print(f"  lower fingertip  {tuple(kp.lower_tip)}")
    print(f"  valley           {tuple(kp.valley)}")
    print(f"  upper palm point {tuple(kp.upper_palm)}")
    print(f"  lower palm point {tuple(kp.lower_palm)}")

    feats = geometric_features(kp)
    print("\ngeometric features:")
    for field, value in zip(fields(feats), feats.to_array()):
        print(f"  {field.name:<24} {value:10.3f}")

    fingers = cut_fingers(mask, kp)
    print(f"\ncut fingers: upper {int(fingers.upper.sum())} px, lower {int(fingers.lower.sum())} px")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_rgb(out / "landmarks.png", render_overlay(mask, kp))
    write_mask(out / "finger_upper.png", fingers.upper)
    write_mask(out / "finger_lower.png", fingers.lower)
    print(f"wrote landmarks.png and the two finger masks to {out}/")


if __name__ == "__main__":
    main()
