"""Walkways on a line: travel-time diameter and optimal placement."""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .geometry import Speed, Walkway1, _check_finite, _via_1d, tol


@dataclass(frozen=True)
class Placement1:
    a: float
    b: float
    diameter: float
    witness: tuple[float, float] | None


@dataclass(frozen=True)
class Candidate1D:
    """Switch points ``r <= s`` in normalized coordinates and the walkway they induce."""

    r: float
    s: float

    @property
    def a(self) -> float:
        return self.r / 2.0

    @property
    def b(self) -> float:
        return (self.s + 1.0) / 2.0


class _Best:
    """Running maximum of travel times over candidate pairs."""

    __slots__ = ("a", "b", "c", "value", "pair")

    def __init__(self, a, b, c):
        self.a, self.b, self.c = a, b, c
        self.value = -math.inf
        self.pair = None

    def offer(self, lo, hi):
        val = min(hi - lo, _via_1d(lo, hi, self.a, self.b, self.c))
        if val > self.value:
            self.value, self.pair = val, (lo, hi)


def _clean(points) -> list[float]:
    pts = [float(p) for p in points]
    _check_finite(*pts)
    return pts


def diameter_1d(points, w: Walkway1, v: Speed | float) -> tuple[float, tuple[float, float] | None]:
    """Maximum travel time over all pairs, in O(n log n).

    Pairs on the same side of the walkway midpoint never ride it, so only the
    extremes of each side matter there.  Cross pairs are split by whether each
    end lies before/after its walkway endpoint; three of the four combinations
    are attained at a global extreme, and the inner one is found with a
    two-pointer sweep over the crossing where riding becomes worthwhile.

    Returns ``(0.0, None)`` for fewer than two points.
    """
    pts = sorted(_clean(points))
    n = len(pts)
    if n < 2:
        return 0.0, None
    u = Speed.of(v).inv_v
    a, b = w.a, w.b
    best = _Best(a, b, u * (b - a))
    k = bisect_right(pts, (a + b) / 2.0)
    left, right = pts[:k], pts[k:]

    if len(left) >= 2:
        best.offer(left[0], left[-1])
    if len(right) >= 2:
        best.offer(right[0], right[-1])
    if not left or not right:
        return best.value, best.pair

    n1 = bisect_right(left, a)  # left[:n1] before a, left[n1:] between a and the midpoint
    n3 = bisect_right(right, b)  # right[:n3] up to b, right[n3:] beyond b
    first, last = pts[0], pts[-1]
    before_a, inner_left = left[:n1], left[n1:]
    inner_right, beyond_b = right[:n3], right[n3:]

    if before_a and beyond_b:
        best.offer(first, last)
    if before_a:
        for t in inner_right:
            best.offer(first, t)
    if beyond_b:
        for s in inner_left:
            best.offer(s, last)

    if inner_left and inner_right:
        c = best.c
        j = 0
        m = len(inner_right)
        for s in inner_left:
            # first t where walking directly is slower than riding; monotone in s
            while j < m and not (inner_right[j] - s > _via_1d(s, inner_right[j], a, b, c)):
                j += 1
            if j > 0:
                best.offer(s, inner_right[j - 1])
            if j < m:
                best.offer(s, inner_right[j])
    return best.value, best.pair


def _switch_points(q: list[float], u: float) -> list[Candidate1D]:
    # Thresholds written with inv_v so v = inf needs no special case.
    th_r = (1.0 - u) / (2.0 - u)
    th_s = 1.0 / (2.0 - u)
    r1 = max(p for p in q if p <= th_r)
    s1_th = (r1 * (1.0 - u) + 1.0 + u) / (3.0 - u)
    s1 = min(p for p in q if p >= s1_th)
    s2 = min(p for p in q if p >= th_s)
    r2_th = (1.0 - u) * (s2 + 1.0) / (3.0 - u)
    r2 = max(p for p in q if p <= r2_th)
    return [Candidate1D(r1, s1), Candidate1D(r2, s2)]


def _candidate_diameter(q: list[float], cand: Candidate1D, u: float) -> tuple[float, tuple[float, float]]:
    """Exact worst travel time for a candidate walkway, in one pass over the points.

    Besides the four pairs spanned by the extremes and switch points, every
    pair with one end at 0 or at 1 is scanned; pairs inside ``[r, s]`` reduce to
    their own extremes and pairs inside ``[0, r]`` or ``[s, 1]`` walk directly.
    """
    r, s = cand.r, cand.s
    a, b = cand.a, cand.b
    best = _Best(a, b, u * (b - a))
    for lo, hi in ((0.0, 1.0), (0.0, s), (r, 1.0), (r, s)):
        best.offer(lo, hi)
    if r > best.value:
        best.value, best.pair = r, (0.0, r)
    if 1.0 - s > best.value:
        best.value, best.pair = 1.0 - s, (s, 1.0)
    lo_in, hi_in = math.inf, -math.inf
    for p in q:
        best.offer(0.0, p)
        best.offer(p, 1.0)
        if r <= p <= s:
            lo_in = min(lo_in, p)
            hi_in = max(hi_in, p)
    if lo_in <= hi_in:
        best.offer(lo_in, hi_in)
    return best.value, best.pair


def locate_1d(points, v: Speed | float) -> Placement1:
    """Optimal walkway on the line in O(n).

    After mapping the points onto ``[0, 1]`` the optimum has ``a = r/2`` and
    ``b = (s+1)/2`` for one of two switch-point pairs located by thresholds on
    the speed; both candidates are evaluated and the better one is kept.
    """
    pts = _clean(points)
    if len(pts) < 2:
        p = pts[0] if pts else 0.0
        return Placement1(p, p, 0.0, None)
    lo, hi = min(pts), max(pts)
    span = hi - lo
    if span == 0.0:
        return Placement1(lo, lo, 0.0, None)
    u = Speed.of(v).inv_v
    q = [(p - lo) / span for p in pts]

    best = None
    for cand in _switch_points(q, u):
        val, pair = _candidate_diameter(q, cand, u)
        key = (val, cand.a, cand.b)
        if best is None or val < best[0][0] - tol(val):
            best = (key, cand, pair)
        elif abs(val - best[0][0]) <= tol(val) and (cand.a, cand.b) < best[0][1:]:
            best = (key, cand, pair)
    (val, an, bn), _, pair = best
    witness = (lo + pair[0] * span, lo + pair[1] * span)
    return Placement1(lo + an * span, lo + bn * span, val * span, witness)
