from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from walkways.geometry import DegenerateWalkwayError, Walkway2, time_distance_2d, tol
from walkways.oracle import brute_diameter
from walkways.plane_diameter import (
    DiameterDecisionInput,
    TravelTimeDisk,
    decision_witness,
    diameter_2d,
    diameter_decision_2d,
)

from conftest import inv_speed, point

W = Walkway2((1, 0), (9, 0))


class TestDecision:
    def test_single_pair_threshold(self):
        P = [(0, 0), (10, 0)]
        assert diameter_decision_2d(P, W, "inf", 2.0)
        assert not diameter_decision_2d(P, W, "inf", 1.99)

    def test_input_record(self):
        assert diameter_decision_2d(DiameterDecisionInput(((0, 0), (10, 0)), W, 2.0, 6.0))
        with pytest.raises(TypeError):
            diameter_decision_2d([(0, 0)], W)

    def test_single_point(self):
        for y in (0.0, 1.0, 100.0):
            assert diameter_decision_2d([(3, 4)], W, 2, y)

    def test_errors(self):
        with pytest.raises(DegenerateWalkwayError):
            diameter_decision_2d([(0, 0), (1, 1)], Walkway2((2, 2), (2, 2)), 2, 1.0)
        with pytest.raises(ValueError):
            diameter_decision_2d([(0, 0)], W, 2, -1.0)

    def test_witness_exceeds_y(self, rng):
        for _ in range(20):
            pts = rng.normal(size=(40, 2)) * 4
            w = Walkway2(*rng.normal(size=(2, 2)) * 4)
            y = brute_diameter(pts, w, 2.0)[0] * 0.9
            s, t = decision_witness(pts, w, 2.0, y)
            assert time_distance_2d(s, t, w, 2.0) > y

    def test_flips_at_the_diameter(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 100))
            pts = rng.normal(size=(n, 2)) * 5
            w = Walkway2(*rng.normal(size=(2, 2)) * 5)
            v = float(rng.choice([1.5, 2.0, 5.0, math.inf]))
            d = brute_diameter(pts, w, v)[0]
            assert diameter_decision_2d(pts, w, v, d)
            assert not diameter_decision_2d(pts, w, v, d - 2 * tol(d) - 1e-12)

    @given(st.lists(point, min_size=2, max_size=25), point, point, inv_speed, st.floats(0, 1.5))
    def test_agrees_with_all_pairs(self, pts, a, b, u, frac):
        if a == b:
            return
        from walkways.geometry import Speed

        w, sp = Walkway2(a, b), Speed(u)
        d = brute_diameter(pts, w, sp)[0]
        y = frac * d
        if abs(y - d) <= 2 * tol(d):
            return
        assert diameter_decision_2d(pts, w, sp, y) == (d <= y)


class TestDiameter:
    def test_example(self):
        assert diameter_2d([(0, 0), (10, 0)], W, 2)[0] == 6.0

    def test_equal_points(self):
        assert diameter_2d([(1, 1)] * 5, W, 2)[0] == 0.0
        assert diameter_2d([(1, 1)], W, 2) == (0.0, None)

    def test_two_clusters_consistent_with_decision(self, rng):
        pts = np.vstack([rng.normal(size=(20, 2)) * 0.3, rng.normal(size=(20, 2)) * 0.3 + [10, 0]])
        d, _ = diameter_2d(pts, W, 3.0)
        assert diameter_decision_2d(pts, W, 3.0, d)
        assert not diameter_decision_2d(pts, W, 3.0, d - 2 * tol(d))

    def test_matches_all_pairs(self, rng):
        for _ in range(10):
            pts = rng.normal(size=(60, 2))
            w = Walkway2(*rng.normal(size=(2, 2)))
            d, (s, t) = diameter_2d(pts, w, 2.5)
            assert d == pytest.approx(brute_diameter(pts, w, 2.5)[0], rel=1e-14)
            assert time_distance_2d(s, t, w, 2.5) == pytest.approx(d, rel=1e-14)


class TestTravelTimeDisk:
    def test_exits(self):
        disk = TravelTimeDisk((0, 0), 3.0, W, 0.5)
        # origin to a costs 1, ride costs 4: out of time either way
        assert disk.exit_b is None and disk.exit_a is None
        disk = TravelTimeDisk((0, 0), 6.0, W, 0.5)
        assert disk.exit_b[1] == 1.0
        assert disk.contains((9.5, 0.0)) and not disk.contains((11, 0))

    @given(point, point, st.floats(0, 30), inv_speed)
    def test_matches_time_distance(self, s, t, y, u):
        from walkways.geometry import Speed

        disk = TravelTimeDisk(s, y, W, u)
        td = time_distance_2d(s, t, W, Speed(u))
        if abs(td - y) > 1e-9 * (1 + y):
            assert disk.contains(t) == (td <= y)
