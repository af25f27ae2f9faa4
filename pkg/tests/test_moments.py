"""Central/normalized moments, Hu invariants, eccentricity, the M2 vector."""

import math

import numpy as np
import pytest

from vsign import (
    FingerMasks,
    central_moments,
    eccentricity,
    finger_signature,
    hu_descriptor,
    hu_moments,
    normalized_moments,
)
from vsign.errors import DegenerateShapeError, EmptyRegionError

from oracles import bent_mask, disk_mask, oracle_central_moments, rect_mask, square_mask


def random_blob(rng, size=28):
    mask = np.zeros((size, size), dtype=bool)
    n = int(rng.integers(3, 6))
    ys = rng.integers(4, size - 4, size=n)
    xs = rng.integers(4, size - 4, size=n)
    hs = rng.integers(2, 6, size=n)
    ws = rng.integers(2, 6, size=n)
    for y, x, bh, bw in zip(ys, xs, hs, ws):
        mask[y : y + bh, x : x + bw] = True
    return mask


class TestCentralMoments:
    def test_matches_direct_sum_oracle(self):
        rng = np.random.default_rng(67)
        for _ in range(15):
            mask = random_blob(rng)
            got = central_moments(mask)
            n, (xbar, ybar), mu = oracle_central_moments(mask)
            assert got.m00 == n
            assert got.centroid == pytest.approx((xbar, ybar), rel=1e-12)
            for (j, k), want in mu.items():
                assert got.mu[j, k] == pytest.approx(want, rel=1e-9, abs=1e-6)

    def test_first_order_exactly_zero(self):
        rng = np.random.default_rng(71)
        for _ in range(10):
            cm = central_moments(random_blob(rng))
            assert cm.mu[1, 0] == 0.0
            assert cm.mu[0, 1] == 0.0

    def test_translation_is_bit_exact(self):
        rng = np.random.default_rng(73)
        for _ in range(10):
            mask = random_blob(rng)
            cm = central_moments(mask)
            shifted = np.zeros((mask.shape[0] + 9, mask.shape[1] + 14), dtype=bool)
            shifted[9:, 14:] = mask
            cm2 = central_moments(shifted)
            assert cm2.m00 == cm.m00
            assert np.array_equal(np.nan_to_num(cm2.mu), np.nan_to_num(cm.mu))

    def test_single_pixel(self):
        mask = np.zeros((3, 3), dtype=bool)
        mask[1, 1] = True
        cm = central_moments(mask)
        assert cm.m00 == 1.0
        assert cm.mu[2, 0] == 0.0 and cm.mu[0, 2] == 0.0

    def test_undefined_orders_are_nan(self):
        mask = np.zeros((4, 4), dtype=bool)
        mask[1:3, 1:3] = True
        cm = central_moments(mask)
        assert math.isnan(cm.mu[2, 2])
        assert math.isnan(cm.mu[3, 3])

    def test_empty_region_error(self):
        with pytest.raises(EmptyRegionError):
            central_moments(np.zeros((5, 5), dtype=bool))


class TestNormalizedMoments:
    def test_exponent_definition(self):
        rng = np.random.default_rng(79)
        mask = random_blob(rng)
        cm = central_moments(mask)
        eta = normalized_moments(cm).eta
        for j, k in ((2, 0), (0, 2), (1, 1), (3, 0), (0, 3), (2, 1), (1, 2)):
            assert eta[j, k] == pytest.approx(cm.mu[j, k] / cm.m00 ** (1 + (j + k) / 2), rel=1e-12)

    def test_pixel_doubling_nearly_invariant(self):
        rng = np.random.default_rng(83)
        mask = random_blob(rng)
        eta1 = normalized_moments(central_moments(mask)).eta
        eta2 = normalized_moments(central_moments(np.kron(mask, np.ones((2, 2), dtype=bool)))).eta
        second = [(2, 0), (0, 2), (1, 1)]
        for j, k in second:
            assert eta2[j, k] == pytest.approx(eta1[j, k], rel=0.06, abs=1e-4)


class TestHuInvariants:
    def test_disk_h1_closed_form(self):
        h = hu_moments(normalized_moments(central_moments(disk_mask(80))))
        assert h[0] == pytest.approx(1.0 / (2.0 * math.pi), rel=0.02)

    def test_square_h1_closed_form(self):
        h = hu_moments(normalized_moments(central_moments(square_mask(121))))
        assert h[0] == pytest.approx(1.0 / 6.0, rel=0.02)

    def test_rot90_and_mirror(self):
        rng = np.random.default_rng(89)
        mask = bent_mask(rng, size=300)
        base = hu_moments(normalized_moments(central_moments(mask)))
        rot = hu_moments(normalized_moments(central_moments(np.rot90(mask).copy())))
        assert rot == pytest.approx(base, rel=1e-9)
        mirrored = hu_moments(normalized_moments(central_moments(mask[:, ::-1].copy())))
        assert mirrored[:6] == pytest.approx(base[:6], rel=1e-9)
        assert mirrored[6] == pytest.approx(-base[6], rel=1e-9)
        assert abs(base[6]) > 0  # family is asymmetric enough to carry a sign

    def test_translation_bit_exact_through_hu(self):
        rng = np.random.default_rng(97)
        mask = bent_mask(rng, size=300)
        base = hu_descriptor(mask).to_array()
        shifted = np.zeros((mask.shape[0] + 13, mask.shape[1] + 7), dtype=bool)
        shifted[13:, 7:] = mask
        assert np.array_equal(hu_descriptor(shifted).to_array(), base)


class TestEccentricity:
    def test_long_rectangle(self):
        e = eccentricity(central_moments(rect_mask(100, 10)))
        assert e == pytest.approx(0.99499, abs=0.01)

    def test_square_and_disk_near_zero(self):
        assert eccentricity(central_moments(square_mask(61))) < 0.05
        assert eccentricity(central_moments(disk_mask(40))) < 0.05

    def test_orientation_independent(self):
        horizontal = eccentricity(central_moments(rect_mask(80, 8)))
        vertical = eccentricity(central_moments(rect_mask(80, 8).T.copy()))
        assert horizontal == pytest.approx(vertical, rel=1e-12)

    def test_tilted_rectangle_similar(self):
        from scipy import ndimage

        m = rect_mask(90, 12, pad=40)
        tilted = ndimage.rotate(m.astype(float), 30.0, reshape=True, order=1) >= 0.5
        assert eccentricity(central_moments(tilted)) == pytest.approx(
            eccentricity(central_moments(m)), abs=0.01
        )

    def test_single_pixel_degenerate(self):
        mask = np.zeros((3, 3), dtype=bool)
        mask[1, 1] = True
        with pytest.raises(DegenerateShapeError):
            eccentricity(central_moments(mask))


class TestFingerSignature:
    def test_square_and_rectangle_layout(self):
        fingers = FingerMasks(upper=square_mask(61), lower=rect_mask(100, 10))
        vec = finger_signature(fingers)
        assert vec.method == "M2"
        assert vec.values.shape == (16,)
        assert vec.values[7] < 0.05  # upper eccentricity: square
        assert vec.values[15] == pytest.approx(0.995, abs=0.01)  # lower: 100x10 bar

    def test_block_order_upper_then_lower(self):
        fingers = FingerMasks(upper=square_mask(61), lower=rect_mask(100, 10))
        vec = finger_signature(fingers)
        upper = hu_descriptor(square_mask(61)).to_array()
        lower = hu_descriptor(rect_mask(100, 10)).to_array()
        assert np.array_equal(vec.values[:8], upper)
        assert np.array_equal(vec.values[8:], lower)

    def test_empty_finger_error(self):
        fingers = FingerMasks(upper=np.zeros((5, 5), dtype=bool), lower=rect_mask(20, 5))
        with pytest.raises(EmptyRegionError):
            finger_signature(fingers)
