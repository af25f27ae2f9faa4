"""Raster primitives: grayscale, downscale, dilation, contour, components."""

import numpy as np
import pytest

from vsign import (
    Point,
    contour,
    dilate,
    downscale,
    histogram,
    largest_component,
    luma,
    to_grayscale,
)
from vsign.errors import EmptyMaskError, ZeroDimensionError

from oracles import oracle_largest_component


class TestGrayscale:
    def test_luma_weights(self):
        img = np.zeros((1, 3, 3), dtype=np.uint8)
        img[0, 0] = (255, 0, 0)
        img[0, 1] = (0, 255, 0)
        img[0, 2] = (0, 0, 255)
        got = luma(img)[0]
        assert got == pytest.approx([255 * 0.299, 255 * 0.587, 255 * 0.114])

    def test_to_grayscale_rounds_half_up(self):
        img = np.zeros((1, 2, 3), dtype=np.uint8)
        img[0, 0] = (0, 255, 0)  # luma 149.685 -> 150
        img[0, 1] = (255, 255, 255)  # exactly 255
        gray = to_grayscale(img)
        assert gray.dtype == np.uint8
        assert gray[0, 0] == 150
        assert gray[0, 1] == 255

    def test_matches_direct_formula(self):
        rng = np.random.default_rng(3)
        img = rng.integers(0, 256, size=(9, 7, 3), dtype=np.uint8)
        want = np.floor(
            0.299 * img[..., 0] + 0.587 * img[..., 1] + 0.114 * img[..., 2] + 0.5
        ).astype(np.uint8)
        assert np.array_equal(to_grayscale(img), want)

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            to_grayscale(np.zeros((4, 4), dtype=np.uint8))


class TestDownscale:
    def test_output_dims_round(self):
        img = np.zeros((10, 7, 3), dtype=np.uint8)
        assert downscale(img, 0.5).shape == (5, 4, 3)  # 3.5 rounds up
        assert downscale(img, 0.3).shape == (3, 2, 3)

    def test_constant_image_stays_constant(self):
        rng = np.random.default_rng(5)
        for _ in range(10):
            value = int(rng.integers(0, 256))
            factor = float(rng.uniform(0.2, 0.95))
            img = np.full((17, 23, 3), value, dtype=np.uint8)
            out = downscale(img, factor)
            assert (out == value).all()

    def test_exact_block_average(self):
        img = np.zeros((2, 2, 3), dtype=np.uint8)
        img[1, :, :] = 255
        out = downscale(img, 0.5)
        assert out.shape == (1, 1, 3)
        assert (out == 128).all()  # (0 + 255) / 2 rounds half up

    def test_zero_dimension_error(self):
        img = np.zeros((3, 3, 3), dtype=np.uint8)
        with pytest.raises(ZeroDimensionError):
            downscale(img, 0.05)


class TestDilateContour:
    def test_single_pixel_dilates_to_block(self):
        mask = np.zeros((5, 5), dtype=bool)
        mask[2, 2] = True
        grown = dilate(mask)
        assert grown.sum() == 9
        assert grown[1:4, 1:4].all()

    def test_contour_of_single_pixel_is_ring(self):
        mask = np.zeros((5, 5), dtype=bool)
        mask[2, 2] = True
        ring = contour(mask)
        assert ring.sum() == 8
        assert not ring[2, 2]

    def test_contour_disjoint_from_mask(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            mask = np.zeros((20, 20), dtype=bool)
            ys = rng.integers(3, 17, size=30)
            xs = rng.integers(3, 17, size=30)
            mask[ys, xs] = True
            edge = contour(mask)
            assert not (edge & mask).any()
            assert edge.any()

    def test_contour_pixels_touch_mask(self):
        rng = np.random.default_rng(12)
        mask = np.zeros((15, 15), dtype=bool)
        mask[4:9, 5:11] = True
        mask[rng.integers(4, 9, 5), rng.integers(5, 11, 5)] = True
        edge = contour(mask)
        padded = np.pad(mask, 1)
        for y, x in zip(*np.nonzero(edge)):
            assert padded[y : y + 3, x : x + 3].any()


class TestLargestComponent:
    def test_matches_flood_fill_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            mask = rng.random((16, 16)) < 0.45
            if not mask.any():
                continue
            assert np.array_equal(largest_component(mask), oracle_largest_component(mask))

    def test_tie_prefers_scan_order(self):
        mask = np.zeros((5, 9), dtype=bool)
        mask[1, 1:3] = True  # two pixels, appears first in scan order
        mask[3, 5:7] = True  # two pixels, later
        kept = largest_component(mask)
        assert kept[1, 1] and kept[1, 2]
        assert kept.sum() == 2

    def test_diagonal_pixels_are_separate(self):
        mask = np.zeros((4, 4), dtype=bool)
        mask[0, 0] = mask[1, 1] = mask[2, 2] = True
        kept = largest_component(mask)
        assert kept.sum() == 1
        assert kept[0, 0]  # 4-connectivity: three singletons, scan order wins

    def test_empty_mask_error(self):
        with pytest.raises(EmptyMaskError):
            largest_component(np.zeros((4, 4), dtype=bool))


class TestHistogram:
    def test_counts_every_value(self):
        rng = np.random.default_rng(13)
        gray = rng.integers(0, 256, size=(21, 17), dtype=np.uint8)
        hist = histogram(gray)
        assert hist.shape == (256,)
        assert hist.sum() == gray.size
        for v in (0, 17, 255):
            assert hist[v] == int((gray == v).sum())


class TestPoint:
    def test_fields_are_x_y(self):
        p = Point(3, 9)
        assert p.x == 3 and p.y == 9
        assert tuple(p) == (3, 9)
