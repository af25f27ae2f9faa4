"""Reading and writing images: 8-bit PNG (via Pillow) and binary PGM (P5).

Masks serialize with foreground = 255 and background = 0. Paths ending in
``.pgm`` use the hand-rolled P5 codec; everything else goes through Pillow.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np
from PIL import Image

from .imaging import as_gray, as_mask, as_rgb, to_grayscale


def read_rgb(path) -> np.ndarray:
    """Load any supported image as (h, w, 3) uint8 RGB."""
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        g = read_pgm(path)
        return np.stack([g, g, g], axis=-1)
    with Image.open(path) as im:
        return np.asarray(im.convert("RGB"), dtype=np.uint8)


def write_rgb(path, img) -> None:
    img = as_rgb(img)
    Image.fromarray(img, mode="RGB").save(Path(path))


def read_gray(path) -> np.ndarray:
    """Load an image as (h, w) uint8 gray; color inputs go through BT.601."""
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        return read_pgm(path)
    with Image.open(path) as im:
        if im.mode == "L":
            return np.asarray(im, dtype=np.uint8)
    return to_grayscale(read_rgb(path))


def write_gray(path, gray) -> None:
    gray = as_gray(gray)
    path = Path(path)
    if path.suffix.lower() == ".pgm":
        write_pgm(path, gray)
    else:
        Image.fromarray(gray, mode="L").save(path)


def read_mask(path) -> np.ndarray:
    """Load a mask image; any value above 127 counts as foreground."""
    return read_gray(path) > 127


def write_mask(path, mask) -> None:
    mask = as_mask(mask)
    write_gray(path, np.where(mask, 255, 0).astype(np.uint8))


def read_pgm(path) -> np.ndarray:
    """Minimal binary PGM (P5) reader, tolerant of # comments."""
    data = Path(path).read_bytes()
    # Header: magic, width, height, maxval, one whitespace, then raster.
    tokens = []
    pos = 0
    while len(tokens) < 4:
        m = re.compile(rb"\s*(#[^\n]*\n|\S+)").match(data, pos)
        if m is None:
            raise ValueError(f"{path}: truncated PGM header")
        pos = m.end()
        tok = m.group(1)
        if not tok.startswith(b"#"):
            tokens.append(tok)
    if tokens[0] != b"P5":
        raise ValueError(f"{path}: not a binary PGM (P5) file")
    w, h, maxval = (int(t) for t in tokens[1:])
    if maxval != 255:
        raise ValueError(f"{path}: only 8-bit PGM supported, maxval {maxval}")
    raster = data[pos + 1 : pos + 1 + w * h]
    if len(raster) != w * h:
        raise ValueError(f"{path}: raster shorter than {w}x{h}")
    return np.frombuffer(raster, dtype=np.uint8).reshape(h, w).copy()


def write_pgm(path, gray) -> None:
    gray = as_gray(gray)
    h, w = gray.shape
    header = f"P5\n{w} {h}\n255\n".encode("ascii")
    Path(path).write_bytes(header + gray.tobytes())
