"""Show what the Hu moments and eccentricity stay invariant to.

Cuts the upper finger out of a rendered hand, then recomputes its
descriptor after translating it, rotating the lattice by 90 degrees, and
doubling its scale. The first two transforms reproduce every value bit for
bit; pixel-doubling drifts only at discretization level.

Usage: python 03_moment_invariants.py [--seed N]
"""

import argparse

import numpy as np

from vsign import (
    cut_fingers,
    eccentricity,
    central_moments,
    find_keypoints,
    hu_descriptor,
    render_hand_mask,
    sample_subject,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=3)
    args = ap.parse_args()

    params = sample_subject(np.random.default_rng([args.seed, 1]))
    mask = render_hand_mask(params)
    finger = cut_fingers(mask, find_keypoints(mask)).upper
    print(f"upper finger: {int(finger.sum())} pixels")

    cm = central_moments(finger)
    print(f"centroid ({cm.centroid[0]:.2f}, {cm.centroid[1]:.2f}), eccentricity {eccentricity(cm):.4f}")

    base = hu_descriptor(finger).to_array()

    h, w = finger.shape
    shifted = np.zeros((h + 30, w + 30), dtype=bool)
    shifted[19 : 19 + h, 11 : 11 + w] = finger
    variants = {
        "original": finger,
        "translated": shifted,
        "rotated 90": np.rot90(finger),
        "2x scale": np.kron(finger, np.ones((2, 2), dtype=bool)),
    }

    header = " ".join(f"{f'H{i}':>10}" for i in range(1, 8)) + f" {'E':>10}"
    print(f"\n{'':<12}{header}")
    for name, variant in variants.items():
        values = hu_descriptor(variant).to_array()
        row = " ".join(f"{v:10.3e}" for v in values)
        print(f"{name:<12}{row}")

    for name in ("translated", "rotated 90"):
        drift = np.max(np.abs(hu_descriptor(variants[name]).to_array() - base))
        print(f"\nmax drift after {name}: {drift:.1e}")
    scale = hu_descriptor(variants["2x scale"]).to_array()
    rel = np.max(np.abs(scale - base) / np.maximum(np.abs(base), np.abs(scale)))
    print(f"max relative drift after 2x scale: {rel:.2%}")


if __name__ == "__main__":
    main()
