"""Core types and travel-time distances for point-to-point walkways.

A walkway joins two endpoints ``a`` and ``b``; riding it from one end to the
other costs ``d(a, b) / v``, everything else is walked at unit speed.  The
speed is stored as its reciprocal so that ``v = inf`` is represented exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

# Relative tolerance for comparing derived reals, with an absolute floor.
TAU = 1e-9
TAU_ABS = 1e-12


def tol(value: float) -> float:
    """Comparison slack for a derived quantity of magnitude ``value``."""
    return max(TAU_ABS, TAU * abs(value))


class DegenerateWalkwayError(ValueError):
    """Raised when an operation needs a walkway with distinct endpoints."""


class Point2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class Speed:
    """Walkway speed ``v > 1`` held as ``inv_v = 1/v``; ``inv_v == 0`` is ``v = inf``."""

    inv_v: float

    def __post_init__(self):
        if not math.isfinite(self.inv_v) or not 0.0 <= self.inv_v < 1.0:
            raise ValueError(f"inv_v must lie in [0, 1), got {self.inv_v!r}")

    @classmethod
    def of(cls, v: "Speed | float | str") -> "Speed":
        """Build from a speed value; accepts ``inf``/``"inf"`` and existing instances."""
        if isinstance(v, Speed):
            return v
        if isinstance(v, str):
            v = float(v)
        v = float(v)
        if math.isnan(v) or v <= 1.0:
            raise ValueError(f"walkway speed must exceed 1, got {v!r}")
        return cls(0.0 if math.isinf(v) else 1.0 / v)

    @property
    def v(self) -> float:
        return math.inf if self.inv_v == 0.0 else 1.0 / self.inv_v

    @property
    def infinite(self) -> bool:
        return self.inv_v == 0.0


@dataclass(frozen=True)
class Walkway1:
    """Walkway on the line; endpoints are swapped on construction so ``a <= b``."""

    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        _check_finite(a, b)
        if a > b:
            a, b = b, a
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class Walkway2:
    """Walkway in the plane.  ``a == b`` is allowed and behaves like an elevator."""

    a: Point2
    b: Point2

    def __post_init__(self):
        a, b = as_point(self.a), as_point(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def length(self) -> float:
        return math.hypot(self.b.x - self.a.x, self.b.y - self.a.y)

    @property
    def degenerate(self) -> bool:
        return self.a == self.b


@dataclass(frozen=True)
class RedBlueSets:
    red: list
    blue: list


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite coordinate {v!r}")


def as_point(p) -> Point2:
    x, y = float(p[0]), float(p[1])
    _check_finite(x, y)
    return Point2(x, y)


def as_points(points: Iterable) -> list[Point2]:
    return [as_point(p) for p in points]


def as_array(points) -> np.ndarray:
    """Points as a C-contiguous ``(n, 2)`` float array, validated finite."""
    arr = np.ascontiguousarray(np.asarray(points, dtype=float).reshape(-1, 2))
    if not np.all(np.isfinite(arr)):
        raise ValueError("non-finite coordinate in point set")
    return arr


def dist(p, q) -> float:
    return math.hypot(q[0] - p[0], q[1] - p[1])


def _via_1d(lo: float, hi: float, a: float, b: float, c: float) -> float:
    # Shared by the fast diameter and the oracle so both use identical arithmetic.
    return abs(lo - a) + abs(hi - b) + c


def time_distance_1d(s: float, t: float, w: Walkway1, v: Speed | float) -> float:
    """Travel time between ``s`` and ``t`` on the line with walkway ``w``."""
    s, t = float(s), float(t)
    _check_finite(s, t)
    u = Speed.of(v).inv_v
    lo, hi = (s, t) if s <= t else (t, s)
    return min(hi - lo, _via_1d(lo, hi, w.a, w.b, u * (w.b - w.a)))


def time_distance_2d(s, t, w: Walkway2, v: Speed | float) -> float:
    """Travel time in the plane: direct, or through the walkway in either direction."""
    s, t = as_point(s), as_point(t)
    u = Speed.of(v).inv_v
    a, b = w.a, w.b
    ride = u * dist(a, b)
    return min(
        dist(s, t),
        dist(s, a) + ride + dist(b, t),
        dist(s, b) + ride + dist(a, t),
    )


def red_blue_mask(points: np.ndarray, a, b) -> np.ndarray:
    """Boolean mask of points at least as close to ``a`` as to ``b`` (ties go red)."""
    da = np.hypot(points[:, 0] - a[0], points[:, 1] - a[1])
    db = np.hypot(points[:, 0] - b[0], points[:, 1] - b[1])
    return da <= db


def red_blue_partition(points: Sequence, w: Walkway2) -> RedBlueSets:
    """Split ``points`` by the bisector of the walkway segment."""
    if w.degenerate:
        raise DegenerateWalkwayError("bisector partition needs distinct endpoints")
    pts = as_points(points)
    red, blue = [], []
    for p in pts:
        (red if dist(p, w.a) <= dist(p, w.b) else blue).append(p)
    return RedBlueSets(red, blue)


def _hull_indices(points: np.ndarray) -> list[int]:
    """Monotone-chain hull as indices into ``points``, counter-clockwise, no collinear points."""
    n = len(points)
    order = np.lexsort((points[:, 1], points[:, 0]))
    xs, ys = points[:, 0].tolist(), points[:, 1].tolist()
    idx: list[int] = []
    for k in order.tolist():  # drop exact duplicates
        if not idx or xs[k] != xs[idx[-1]] or ys[k] != ys[idx[-1]]:
            idx.append(k)
    if len(idx) <= 2:
        return idx

    def cross(o, p, q):
        return (xs[p] - xs[o]) * (ys[q] - ys[o]) - (ys[p] - ys[o]) * (xs[q] - xs[o])

    lower: list[int] = []
    for p in idx:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[int] = []
    for p in reversed(idx):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def convex_hull(points) -> np.ndarray:
    """Convex hull vertices, counter-clockwise."""
    pts = as_array(points)
    return pts[_hull_indices(pts)] if len(pts) else pts


def _calipers(points: np.ndarray) -> tuple[float, int, int]:
    """Rotating calipers over the hull; returns ``(diameter, i, j)``."""
    n = len(points)
    if n == 0:
        return 0.0, -1, -1
    hull = _hull_indices(points)
    h = len(hull)
    if h == 1:
        return 0.0, hull[0], hull[0]
    xs = [float(points[k, 0]) for k in hull]
    ys = [float(points[k, 1]) for k in hull]

    def d2(i, j):
        dx, dy = xs[i] - xs[j], ys[i] - ys[j]
        return dx * dx + dy * dy

    if h == 2:
        return math.sqrt(d2(0, 1)), hull[0], hull[1]

    def area2(i, j, k):
        return abs((xs[j] - xs[i]) * (ys[k] - ys[i]) - (ys[j] - ys[i]) * (xs[k] - xs[i]))

    best, bi, bj = -1.0, 0, 0
    j = 1
    for i in range(h):
        i2 = (i + 1) % h
        # advance the antipodal pointer while the triangle area grows
        while area2(i, i2, (j + 1) % h) > area2(i, i2, j):
            j = (j + 1) % h
        for a, b in ((i, j), (i2, j)):
            v = d2(a, b)
            if v > best:
                best, bi, bj = v, a, b
    return math.sqrt(best), hull[bi], hull[bj]


def euclidean_diameter(points) -> tuple[float, tuple[Point2, Point2] | None]:
    """Largest pairwise distance via convex hull and rotating calipers.

    Returns ``(0.0, None)`` for an empty set and ``(0.0, (p, p))`` for one point.
    """
    from ._backend import kernels

    pts = as_array(points)
    if len(pts) == 0:
        return 0.0, None
    _, i, j = kernels.euclidean_diameter(pts)
    p, q = Point2(*pts[i]), Point2(*pts[j])
    # re-evaluate so the value agrees bit for bit with dist() on the witness
    return dist(p, q), (p, q)
