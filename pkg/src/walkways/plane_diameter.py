"""Travel-time diameter in the plane: O(n log n) decision and exact O(n^2) value.

The decision splits the points by the bisector of the walkway.  Two points on
the same side never gain from the walkway, so each side only needs its
Euclidean diameter checked.  For a red point ``r`` and a blue point ``t`` the
useful route enters at ``a`` and leaves at ``b``; the pair is fine when
``d(r, a) <= y - c - d(b, t)`` (``c`` the ride time) and otherwise needs
``d(r, t) <= y``.  Sorting the red points by distance to ``a`` turns the
second case into membership of ``t`` in a suffix intersection of radius-``y``
disks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._backend import kernels
from .disks import SuffixDiskIntersections, build_suffix_intersections
from .geometry import (
    DegenerateWalkwayError,
    Point2,
    Speed,
    Walkway2,
    as_array,
    as_point,
    dist,
    red_blue_mask,
    tol,
)

__all__ = [
    "TravelTimeDisk",
    "DiameterDecisionInput",
    "SuffixDiskIntersections",
    "build_suffix_intersections",
    "diameter_decision_2d",
    "decision_witness",
    "diameter_2d",
]


@dataclass(frozen=True)
class TravelTimeDisk:
    """Points reachable from ``origin`` within time ``y``.

    That is the disk of radius ``y`` around the origin, plus a disk around
    each walkway end that can be reached early enough to ride to the other.
    """

    origin: Point2
    y: float
    walkway: Walkway2
    inv_v: float

    @property
    def _ride(self) -> float:
        return self.inv_v * self.walkway.length

    @property
    def exit_b(self) -> tuple[Point2, float] | None:
        """Disk around ``b`` for riding from ``a``, or None when out of time."""
        r = self.y - dist(self.origin, self.walkway.a) - self._ride
        return (self.walkway.b, r) if r >= 0 else None

    @property
    def exit_a(self) -> tuple[Point2, float] | None:
        r = self.y - dist(self.origin, self.walkway.b) - self._ride
        return (self.walkway.a, r) if r >= 0 else None

    def contains(self, p) -> bool:
        p = as_point(p)
        if dist(self.origin, p) <= self.y:
            return True
        return any(d is not None and dist(d[0], p) <= d[1] for d in (self.exit_b, self.exit_a))


@dataclass(frozen=True)
class DiameterDecisionInput:
    points: tuple
    walkway: Walkway2
    v: Speed
    y: float


def _cross_witness(red: np.ndarray, blue: np.ndarray, a, b, c: float, y: float):
    """A red-blue pair with ``min(d(r,t), d(r,a) + c + d(b,t)) > y``, else None."""
    if not len(red) or not len(blue):
        return None
    da = np.hypot(red[:, 0] - a[0], red[:, 1] - a[1])
    order = np.argsort(da, kind="stable")
    rs = np.ascontiguousarray(red[order])
    das = da[order]
    db = np.hypot(blue[:, 0] - b[0], blue[:, 1] - b[1])
    # red points j >= idx cannot reach t through the walkway in time
    idx = np.searchsorted(das, y - c - db, side="right")
    need = np.flatnonzero(idx < len(rs))
    if not len(need):
        return None
    q_order = need[np.argsort(-idx[need], kind="stable")]
    qpts = np.ascontiguousarray(blue[q_order])
    qidx = np.ascontiguousarray(idx[q_order].astype(np.intp))
    fail = kernels.suffix_check(rs, qpts, qidx, float(y))
    if fail < 0:
        return None
    t = qpts[fail]
    cand = rs[qidx[fail]:]
    direct = np.hypot(cand[:, 0] - t[0], cand[:, 1] - t[1])
    tt = np.minimum(direct, das[qidx[fail]:] + c + db[q_order[fail]])
    k = int(np.argmax(tt))
    return Point2(*cand[k]), Point2(*t)


def _same_side_witness(pts: np.ndarray, y: float):
    if len(pts) < 2:
        return None
    value, i, j = kernels.euclidean_diameter(pts)
    if value > y:
        return Point2(*pts[i]), Point2(*pts[j])
    return None


def _decide(pts: np.ndarray, a, b, inv_v: float, y: float):
    """Witness pair with travel time above ``y``, or None (no tolerance added)."""
    if a[0] == b[0] and a[1] == b[1]:
        return _same_side_witness(pts, y)  # walkway of length 0 never helps
    red = red_blue_mask(pts, a, b)
    R, B = pts[red], pts[~red]
    for side in (R, B):
        w = _same_side_witness(side, y)
        if w is not None:
            return w
    c = inv_v * math.hypot(b[0] - a[0], b[1] - a[1])
    return _cross_witness(R, B, a, b, c, y)


def _unpack(points, w, v, y):
    if isinstance(points, DiameterDecisionInput):
        return points.points, points.walkway, points.v, points.y
    if w is None or v is None or y is None:
        raise TypeError("expected a DiameterDecisionInput or (points, walkway, v, y)")
    return points, w, v, y


def decision_witness(points, w: Walkway2, v, y: float):
    """Pair whose travel time exceeds ``y`` (beyond tolerance), or None."""
    y = float(y)
    if not y >= 0.0:
        raise ValueError(f"y must be nonnegative, got {y!r}")
    if not isinstance(w, Walkway2):
        w = Walkway2(*w)
    if w.degenerate:
        raise DegenerateWalkwayError("decision needs a walkway with a != b; use the elevator model")
    pts = as_array(points)
    return _decide(pts, w.a, w.b, Speed.of(v).inv_v, y + tol(y))


def diameter_decision_2d(points, w: Walkway2 | None = None, v=None, y: float | None = None) -> bool:
    """Whether every pair of ``points`` has travel time at most ``y`` (plus tolerance).

    Accepts either a :class:`DiameterDecisionInput` or the four arguments.
    Runs in O(n log n).
    """
    points, w, v, y = _unpack(points, w, v, y)
    return decision_witness(points, w, v, y) is None


def diameter_2d(points, w: Walkway2, v) -> tuple[float, tuple[Point2, Point2] | None]:
    """Exact travel-time diameter by evaluating every pair; ``(0.0, None)`` below two points."""
    pts = as_array(points)
    n = len(pts)
    if n < 2:
        return 0.0, None
    if not isinstance(w, Walkway2):
        w = Walkway2(*w)
    u = Speed.of(v).inv_v
    a, b = w.a, w.b
    c = u * w.length
    da = np.hypot(pts[:, 0] - a[0], pts[:, 1] - a[1])
    db = np.hypot(pts[:, 0] - b[0], pts[:, 1] - b[1])
    best, pair = -1.0, (0, 1)
    for i in range(n - 1):
        q = pts[i + 1:]
        direct = np.hypot(q[:, 0] - pts[i, 0], q[:, 1] - pts[i, 1])
        via = np.minimum(da[i] + c + db[i + 1:], db[i] + c + da[i + 1:])
        tt = np.minimum(direct, via)
        k = int(np.argmax(tt))
        if tt[k] > best:
            best, pair = float(tt[k]), (i, i + 1 + k)
    return best, (Point2(*pts[pair[0]]), Point2(*pts[pair[1]]))
