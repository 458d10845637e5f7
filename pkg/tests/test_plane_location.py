from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from walkways.geometry import Walkway2, dist, tol
from walkways.oracle import GridSpec, brute_locate, objective_horizontal
from walkways.plane_diameter import diameter_2d
from walkways.plane_location import (
    SourceDestPair,
    UnsupportedSpeedError,
    _rotate,
    approx_angles,
    horizontal_box,
    horizontal_program,
    locate_approx,
    locate_horizontal_diameter,
    locate_horizontal_pairs,
    pair_constraint,
)
from walkways.qcp import QcProgram, solve_explicit

from conftest import FROZEN, point


def explicit_horizontal(pts, v, seed=0):
    prog = horizontal_program(pts, v)
    cons = prog.generator(list(range(len(pts))))
    return solve_explicit(QcProgram(cons, 3, prog.box), seed=seed)


class TestPairs:
    def test_single_pair_infinite_speed(self):
        p = locate_horizontal_pairs([((0, 0), (10, 0))], "inf")
        assert p.value <= 1e-9
        assert dist(p.a, (0, 0)) + dist(p.b, (10, 0)) <= 1e-6

    def test_parallel_pairs(self):
        ref = FROZEN["pairs_parallel_inf"]
        p = locate_horizontal_pairs([SourceDestPair((0, 0), (10, 0)), SourceDestPair((0, 1), (10, 1))], "inf")
        assert p.value <= ref["value"] + ref["resolution"]
        assert p.value == pytest.approx(1.0, rel=1e-8)
        assert p.a.y == p.b.y == pytest.approx(0.5, abs=1e-4)
        assert p.a.x == pytest.approx(0.0, abs=1e-4) and p.b.x == pytest.approx(10.0, abs=1e-4)

    def test_slow_walkway_is_useless(self, rng):
        pairs = [tuple(map(tuple, rng.normal(size=(2, 2)))) for _ in range(6)]
        p = locate_horizontal_pairs(pairs, 1.000001)
        worst = max(dist(s, t) for s, t in pairs)
        assert p.value <= worst + tol(worst)
        assert p.value >= worst * (1 - 1e-5)

    def test_empty_pairs(self):
        with pytest.raises(ValueError):
            locate_horizontal_pairs([], 2)

    def test_horizontal_and_ordered(self, rng):
        pairs = [tuple(map(tuple, rng.normal(size=(2, 2)) * 3)) for _ in range(10)]
        p = locate_horizontal_pairs(pairs, 2.0, seed=4)
        assert p.a.y == p.b.y and p.a.x <= p.b.x
        ref = max(min(dist(s, t), min(dist(s, p.a) + dist(p.b, t), dist(s, p.b) + dist(p.a, t))
                      + 0.5 * dist(p.a, p.b)) for s, t in pairs)
        assert ref <= p.value + tol(p.value)


def _pair_value(c, x):
    return c.value(x)


@given(point, point, st.sampled_from([0.0, 0.25, 0.5, 0.9]),
       st.tuples(st.floats(-60, 60), st.floats(0, 120), st.floats(-60, 60)),
       st.tuples(st.floats(-60, 60), st.floats(0, 120), st.floats(-60, 60)))
def test_pair_constraint_midpoint_quasiconvex(s, t, u, x1, x2):
    c = pair_constraint(s, t, u)
    mid = tuple((p + q) / 2 for p, q in zip(x1, x2))
    hi = max(c.value(x1), c.value(x2))
    assert c.value(mid) <= hi + tol(hi)


class TestHorizontalDiameter:
    def test_two_points(self):
        p = locate_horizontal_diameter([(0, 0), (10, 0)], "inf")
        assert p.value <= 1e-9
        assert dist(p.a, (0, 0)) <= 1e-6 and dist(p.b, (10, 0)) <= 1e-6

    def test_single_point(self):
        p = locate_horizontal_diameter([(2, 3)], 2)
        assert p.value == 0.0 and p.a == p.b

    def test_unit_square(self):
        sq = [(0, 0), (1, 0), (0, 1), (1, 1)]
        ref = FROZEN["square_horizontal_inf"]
        p = locate_horizontal_diameter(sq, "inf")
        exp = explicit_horizontal(sq, "inf")
        assert abs(p.value - exp.y) <= 10 * tol(exp.y)
        assert p.value <= ref["value"] + ref["resolution"]

    def test_reproduced_by_full_diameter(self, rng):
        for seed in range(5):
            pts = rng.normal(size=(30, 2)) * 3
            p = locate_horizontal_diameter(pts, 2.0, seed=seed)
            assert p.a.y == p.b.y and p.a.x <= p.b.x
            d = diameter_2d(pts, Walkway2(p.a, p.b), 2.0)[0]
            assert abs(d - p.value) <= tol(p.value) * 10

    def test_sixty_points_equal_explicit(self, rng):
        pts = rng.normal(size=(60, 2)) * 5
        imp = locate_horizontal_diameter(pts, 2.0, seed=1)
        exp = explicit_horizontal(pts, 2.0, seed=1)
        assert abs(imp.value - exp.y) <= 10 * tol(exp.y)

    def test_not_worse_than_grid(self, rng):
        pts = rng.uniform(0, 1, size=(7, 2))
        lo, hi = horizontal_box(pts)
        ref = brute_locate(objective_horizontal(pts, 2.0), GridSpec(lo, hi, 5e-3, levels=3))
        assert locate_horizontal_diameter(pts, 2.0).value <= ref.value + 1e-9

    def test_seed_determinism(self, rng):
        pts = rng.normal(size=(40, 2))
        assert locate_horizontal_diameter(pts, 3, seed=9) == locate_horizontal_diameter(pts, 3, seed=9)


class TestApprox:
    def test_infinite_speed_unsupported(self):
        with pytest.raises(UnsupportedSpeedError):
            locate_approx([(0, 0), (1, 1)], "inf", 0.1)

    def test_bad_eps(self):
        with pytest.raises(ValueError):
            approx_angles(2, 0.0)

    def test_angle_count(self):
        assert len(approx_angles(2, 0.5)) == math.floor(2 * math.pi * 2 / 0.5) + 1
        assert approx_angles(2, 0.5)[:2] == [0.0, 0.25]

    def test_horizontal_pair(self):
        p = locate_approx([(0, 0), (10, 0)], 2, 0.5)
        assert p.value == pytest.approx(5.0, rel=1e-9)
        assert p.angle_index == 0

    def test_diagonal_pair(self):
        s, t = (0.0, 0.0), (3.0, 3.0)
        p = locate_approx([s, t], 2, 0.1)
        assert p.value <= 1.1 * dist(s, t) / 2

    def test_value_reproduced(self, rng):
        pts = rng.normal(size=(12, 2))
        p = locate_approx(pts, 2.0, 0.5)
        d = diameter_2d(pts, Walkway2(p.a, p.b), 2.0)[0]
        assert abs(d - p.value) <= 1e-7 * p.value

    def test_rotation_by_a_fan_step(self, rng):
        pts = rng.normal(size=(10, 2))
        eps, v = 0.5, 2.0
        step = eps / v
        base = locate_approx(pts, v, eps)
        turned = locate_approx(_rotate(pts, -3 * step), v, eps)
        assert abs(turned.value - base.value) <= 1e-7 * base.value

    def test_halving_eps_never_worse(self, rng):
        pts = rng.normal(size=(10, 2))
        prev = math.inf
        for eps in (1.0, 0.5, 0.25):
            val = locate_approx(pts, 2.0, eps).value
            assert val <= prev + 1e-7 * val
            prev = val
