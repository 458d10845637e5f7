from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from walkways.disks import DiskIntersection, build_suffix_intersections

from conftest import point


def inside_all(p, centers, r):
    return all((p[0] - c[0]) ** 2 + (p[1] - c[1]) ** 2 <= r * r for c in centers)


def test_single_disk_is_plain_disk_test():
    s = build_suffix_intersections([(0.0, 0.0)], 1.0)
    assert s.membership((0.6, 0.8), 0)
    assert s.membership((0.0, 0.0), 0)
    assert not s.membership((0.8, 0.8), 0)


def test_disjoint_disks_are_empty():
    s = build_suffix_intersections([(0.0, 0.0), (3.0, 0.0)], 1.0)
    for q in [(0, 0), (1.5, 0), (3, 0), (1, 0), (2, 0)]:
        assert not s.membership(q, 0)
    assert s.membership((3.0, 0.0), 1)


def test_empty_flag_sticks():
    d = DiskIntersection(1.0)
    d.insert((0, 0))
    d.insert((5, 0))
    assert d.empty
    d.insert((0, 0))
    assert not d.contains((0, 0))
    assert d.region() is None and d.vertex_count() == 0


def test_no_disks_is_the_plane():
    assert DiskIntersection(1.0).contains((1e9, -1e9))


def test_negative_radius_rejected():
    with pytest.raises(ValueError):
        DiskIntersection(-1.0)
    with pytest.raises(ValueError):
        build_suffix_intersections([(0, 0)], -1.0)


def test_suffix_index_range():
    s = build_suffix_intersections([(0, 0)], 1.0)
    with pytest.raises(IndexError):
        s.membership((0, 0), 1)


def test_random_suffixes_match_direct_tests(rng):
    for _ in range(5):
        centers = rng.uniform(-1, 1, size=(30, 2))
        r = 1.6
        s = build_suffix_intersections(centers, r)
        queries = [(tuple(rng.uniform(-1.5, 1.5, size=2)), int(rng.integers(0, 30))) for _ in range(100)]
        got = s.memberships(queries)
        want = [inside_all(q, centers[i:], r) for q, i in queries]
        assert got == want


def test_lens_has_two_vertices():
    d = DiskIntersection(1.0)
    d.insert((0, 0))
    d.insert((1, 0))
    assert d.vertex_count() == 2
    xl, xr = d.region()
    assert xl == pytest.approx(0.0) and xr == pytest.approx(1.0)


@given(st.lists(point, min_size=1, max_size=25), st.floats(1, 80), st.lists(point, min_size=1, max_size=20))
def test_membership_and_vertex_bound(centers, r, queries):
    d = DiskIntersection(r)
    for k, c in enumerate(centers, 1):
        d.insert(c)
        assert d.vertex_count() <= 2 * k
    for q in queries:
        assert d.contains(q) == inside_all(q, centers, r)


def test_many_insertions_vertex_bound(rng):
    d = DiskIntersection(10.0)
    for k in range(1, 2001):
        ang = rng.uniform(0, 2 * math.pi)
        d.insert((0.5 * math.cos(ang), 0.5 * math.sin(ang)))
        if k % 250 == 0:
            assert d.vertex_count() <= 2 * k
    # dense points on a circle make the intersection nearly round with many arcs
    assert d.vertex_count() > 10
