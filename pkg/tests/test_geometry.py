"""Landmark scan, geometric features, and finger cutting."""

import math

import numpy as np
import pytest

from vsign import (
    KeyPoints,
    Point,
    cut_fingers,
    find_keypoints,
    geometric_features,
    render_overlay,
    triangle_area,
)
from vsign.errors import (
    DegenerateTipsError,
    EmptyMaskError,
    FingerSeparationError,
    NoValleyError,
)
from vsign.imaging import contour

from oracles import cut_sizes_mask, grid_mask_suite, oracle_keypoints, oracle_shoelace, prong_mask


class TestTriangleArea:
    def test_right_triangle(self):
        assert triangle_area(Point(0, 0), Point(4, 0), Point(0, 3)) == 6.0

    def test_collinear_is_zero(self):
        assert triangle_area(Point(0, 0), Point(1, 1), Point(2, 2)) == 0.0

    def test_hand_evaluated(self):
        assert triangle_area(Point(1, 1), Point(2, 3), Point(4, 0)) == 3.5

    def test_matches_shoelace_oracle_bit_for_bit(self):
        rng = np.random.default_rng(47)
        for _ in range(300):
            a, b, c = (Point(int(x), int(y)) for x, y in rng.integers(-500, 500, size=(3, 2)))
            assert triangle_area(a, b, c) == oracle_shoelace(a, b, c)

    def test_permutation_and_translation_invariance(self):
        rng = np.random.default_rng(53)
        for _ in range(50):
            pts = [Point(int(x), int(y)) for x, y in rng.integers(-50, 50, size=(3, 2))]
            base = triangle_area(*pts)
            assert triangle_area(pts[2], pts[0], pts[1]) == base
            assert triangle_area(pts[1], pts[0], pts[2]) == base
            dx, dy = (int(v) for v in rng.integers(-30, 30, size=2))
            moved = [Point(p.x + dx, p.y + dy) for p in pts]
            assert triangle_area(*moved) == base

    def test_half_base_times_height(self):
        rng = np.random.default_rng(59)
        for _ in range(50):
            base, height = (int(v) for v in rng.integers(1, 90, size=2))
            area = triangle_area(Point(0, 0), Point(base, 0), Point(0, height))
            assert area == base * height / 2


class TestFindKeypoints:
    def as_tuples(self, kp: KeyPoints):
        return tuple(kp.upper_tip), tuple(kp.lower_tip), tuple(kp.valley), tuple(kp.upper_palm), tuple(kp.lower_palm)

    def test_prong_mask_frozen_landmarks(self):
        kp = find_keypoints(prong_mask())
        assert tuple(kp.upper_tip) == (0, 1)
        assert tuple(kp.lower_tip) == (0, 10)
        assert tuple(kp.valley) == (7, 4)
        assert tuple(kp.upper_palm) == (7, 2)
        assert tuple(kp.lower_palm) == (7, 9)

    def test_matches_scan_oracle_on_grid_masks(self):
        for mask in grid_mask_suite():
            assert self.as_tuples(find_keypoints(mask)) == oracle_keypoints(mask)

    def test_tips_and_valley_on_contour_palm_points_on_mask(self):
        for mask in grid_mask_suite():
            kp = find_keypoints(mask)
            edge = contour(mask)
            for pt in (kp.upper_tip, kp.lower_tip, kp.valley):
                assert edge[pt.y, pt.x]
            for pt in (kp.upper_palm, kp.lower_palm):
                assert mask[pt.y, pt.x]
            assert kp.upper_tip.y < kp.valley.y < kp.lower_tip.y

    def test_empty_mask_error(self):
        with pytest.raises(EmptyMaskError):
            find_keypoints(np.zeros((6, 6), dtype=bool))

    def test_solid_rectangle_has_no_valley(self):
        mask = np.zeros((10, 10), dtype=bool)
        mask[3:8, 2:9] = True
        with pytest.raises(NoValleyError):
            find_keypoints(mask)

    def test_degenerate_tips_error(self):
        mask = np.zeros((5, 6), dtype=bool)
        mask[0, :] = True  # contour collapses to the single row below
        with pytest.raises(DegenerateTipsError):
            find_keypoints(mask)


class TestGeometricFeatures:
    def test_all_points_identical_gives_zeros(self):
        p = Point(4, 4)
        kp = KeyPoints(p, p, p, p, p)
        assert geometric_features(kp).to_array().tolist() == [0.0] * 7

    def test_three_four_five(self):
        o = Point(0, 0)
        kp = KeyPoints(upper_tip=Point(0, 0), lower_tip=o, valley=o, upper_palm=Point(3, 4), lower_palm=o)
        feats = geometric_features(kp)
        assert feats.upper_tip_to_upper_palm == pytest.approx(5.0)
        assert feats.upper_tip_to_valley == pytest.approx(0.0)

    def test_worked_five_point_example(self):
        kp = KeyPoints(
            upper_tip=Point(0, 0),
            lower_tip=Point(0, 8),
            valley=Point(4, 0),
            upper_palm=Point(0, 3),
            lower_palm=Point(6, 8),
        )
        feats = geometric_features(kp)
        assert feats.upper_tip_to_upper_palm == pytest.approx(3.0)
        assert feats.upper_tip_to_valley == pytest.approx(4.0)
        assert feats.lower_tip_to_lower_palm == pytest.approx(6.0)
        assert feats.lower_tip_to_valley == pytest.approx(math.sqrt(80.0))
        assert feats.upper_palm_to_valley == pytest.approx(5.0)
        assert feats.upper_triangle_area == pytest.approx(6.0)
        assert feats.lower_triangle_area == pytest.approx(24.0)

    def test_translation_invariance(self):
        rng = np.random.default_rng(61)
        for _ in range(30):
            pts = [Point(int(x), int(y)) for x, y in rng.integers(0, 60, size=(5, 2))]
            kp = KeyPoints(*pts)
            dx, dy = (int(v) for v in rng.integers(-20, 20, size=2))
            moved = KeyPoints(*[Point(p.x + dx, p.y + dy) for p in pts])
            assert np.allclose(geometric_features(kp).to_array(), geometric_features(moved).to_array())

    def test_vector_is_seven_nonnegative(self):
        for mask in grid_mask_suite():
            arr = geometric_features(find_keypoints(mask)).to_array()
            assert arr.shape == (7,)
            assert (arr >= 0).all()


class TestCutFingers:
    def test_prong_mask_splits_cleanly(self):
        mask = prong_mask()
        kp = find_keypoints(mask)
        fingers = cut_fingers(mask, kp)
        assert not (fingers.upper & fingers.lower).any()
        assert (fingers.upper | fingers.lower).sum() <= mask.sum()
        # each finger sits 8-adjacent to its tip
        for finger, tip in ((fingers.upper, kp.upper_tip), (fingers.lower, kp.lower_tip)):
            window = finger[max(0, tip.y - 1) : tip.y + 2, max(0, tip.x - 1) : tip.x + 2]
            assert window.any()

    def test_cut_sizes_preserved(self):
        mask = cut_sizes_mask()
        kp = find_keypoints(mask)
        assert tuple(kp.valley) == (16, 4)
        fingers = cut_fingers(mask, kp)
        assert fingers.upper.sum() == 30
        assert fingers.lower.sum() == 40

    def test_nothing_at_or_right_of_valley_survives(self):
        for mask in grid_mask_suite():
            kp = find_keypoints(mask)
            fingers = cut_fingers(mask, kp)
            union = fingers.upper | fingers.lower
            assert not union[:, kp.valley.x :].any()
            assert (union <= mask).all()

    def test_touching_prongs_error(self):
        mask = prong_mask()
        mask[4:8, 1] = True  # bridge joins the prongs left of the valley
        kp = find_keypoints(prong_mask())
        with pytest.raises(FingerSeparationError):
            cut_fingers(mask, kp)

    def test_missing_component_error(self):
        mask = prong_mask()
        kp = find_keypoints(mask)
        clipped = mask.copy()
        clipped[:6] = False  # erase the upper prong entirely
        with pytest.raises(FingerSeparationError):
            cut_fingers(clipped, kp)


class TestOverlay:
    def test_overlay_draws_on_mask_canvas(self):
        mask = prong_mask()
        kp = find_keypoints(mask)
        img = render_overlay(mask, kp)
        assert img.shape == mask.shape + (3,)
        assert img.dtype == np.uint8
        assert (img[kp.valley.y, kp.valley.x] == (80, 255, 80)).all()
