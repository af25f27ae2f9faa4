"""Compare the three segmentation routes on one synthetic capture.

Renders a two-finger hand with mild noise, then segments it with the gray
threshold (Otsu), with 2-means RGB clustering, and with a tiny trained
pixel classifier, and reports how closely the three masks agree.

Usage: python 01_segmentation_methods.py [--seed N] [--out DIR]
"""

import argparse
from pathlib import Path

import numpy as np

from vsign import (
    otsu_threshold,
    render_subject_image,
    sample_subject,
    segment,
    to_grayscale,
    train_pixel_classifier,
    write_mask,
    write_rgb,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", default="demo_out", help="where masks and the capture are written")
    args = ap.parse_args()

    params = sample_subject(np.random.default_rng([args.seed, 1]))
    img = render_subject_image(params, np.random.default_rng(args.seed), session=1)
    print(f"capture: {img.shape[1]}x{img.shape[0]}, skin color {params.skin_color}")

    t, _ = otsu_threshold(to_grayscale(img))
    print(f"Otsu threshold on the gray image: {t}")

    # A few labeled colors are enough to train the nearest-color classifier:
    # the skin tone plus dark background samples.
    model = train_pixel_classifier(
        [
            (params.skin_color, True),
            ((0, 0, 0), False),
            ((30, 30, 30), False),
        ]
    )

    masks = {}
    for method in ("otsu", "kmeans", "pixel"):
        masks[method] = segment(img, method=method, model=model)
        print(f"{method:>6}: {int(masks[method].sum())} foreground pixels")

    base = masks["otsu"]
    for method in ("kmeans", "pixel"):
        overlap = np.logical_and(base, masks[method]).sum() / np.logical_or(base, masks[method]).sum()
        print(f"otsu vs {method}: IoU = {overlap:.4f}")

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_rgb(out / "capture.png", img)
    for method, mask in masks.items():
        write_mask(out / f"mask_{method}.png", mask)
    print(f"wrote capture.png and three masks to {out}/")


if __name__ == "__main__":
    main()
