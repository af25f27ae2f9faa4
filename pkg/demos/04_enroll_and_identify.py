"""Enroll a small gallery and identify fresh probe captures.

Builds a gallery of subjects from session-1 renders, extracts fused
feature vectors (landmark geometry + per-finger moments), and then matches
previously unseen session-2 captures against the enrolled templates with
the bounded per-dimension distance.

Usage: python 04_enroll_and_identify.py [--subjects N] [--seed N]
"""

import argparse

import numpy as np

from vsign import (
    ClassifierConfig,
    LabeledVector,
    extract_features,
    generate_synthetic_dataset,
    knn_classify,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--subjects", type=int, default=6)
    ap.add_argument("--seed", type=int, default=4)
    args = ap.parse_args()

    data = generate_synthetic_dataset(
        num_subjects=args.subjects, images_per_session=3, sessions=2, seed=args.seed
    )

    templates = []
    probes = []
    for img, meta in data:
        if meta.session == 1:
            templates.append(LabeledVector(extract_features(img, method="M3"), meta.label))
        elif meta.image_index == 1:  # one unseen probe per subject
            probes.append((img, meta.label))
    print(f"enrolled {len(templates)} templates from {args.subjects} subjects; {len(probes)} probes\n")

    cfg = ClassifierConfig(k=1, metric="hassanat")
    correct = 0
    for img, truth in probes:
        vec = extract_features(img, method="M3")
        predicted, neighbors = knn_classify(templates, vec, cfg)
        mark = "ok" if predicted == truth else "MISS"
        correct += predicted == truth
        nearest = ", ".join(f"{n.label}@{n.distance:.3f}" for n in neighbors)
        print(f"probe of subject {truth:>2} -> predicted {predicted:>2} [{mark}]  nearest: {nearest}")

    print(f"\nrank-1 identification: {correct}/{len(probes)}")


if __name__ == "__main__":
    main()
