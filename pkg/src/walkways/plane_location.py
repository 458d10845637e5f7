"""Placing a walkway in the plane.

Horizontal walkways are parameterized by ``(a.x, length, height)``: the
length is kept nonnegative by the solver box, so ``a`` is always the left
end.  For a pair oriented with ``s.x <= t.x`` the walkway is only worth riding
from ``a`` to ``b``, so each pair gives the capped convex constraint
``min(d(s,t), d(s,a) + d(a,b)/v + d(b,t))``.

Arbitrary orientations are handled by rotating the input through a fan of
angles and keeping the best horizontal solution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import Point2, Speed, as_array, as_point, dist, tol
from .plane_diameter import _decide
from .qcp import ImplicitQcProgram, NormSumConstraint, QcProgram, solve_explicit, solve_implicit

__all__ = [
    "SourceDestPair",
    "PlacementH",
    "Placement2",
    "UnsupportedSpeedError",
    "pair_constraint",
    "horizontal_box",
    "locate_horizontal_pairs",
    "locate_horizontal_diameter",
    "locate_approx",
]

_M_SA = ((1.0, 0.0, 0.0), (0.0, 0.0, 1.0))
_M_AB = ((0.0, 1.0, 0.0), (0.0, 0.0, 0.0))
_M_BT = ((1.0, 1.0, 0.0), (0.0, 0.0, 1.0))


class UnsupportedSpeedError(ValueError):
    """The rotation approximation needs a finite walkway speed."""


@dataclass(frozen=True)
class SourceDestPair:
    s: Point2
    t: Point2

    def __post_init__(self):
        object.__setattr__(self, "s", as_point(self.s))
        object.__setattr__(self, "t", as_point(self.t))


@dataclass(frozen=True)
class PlacementH:
    """Horizontal walkway (``a.y == b.y``, ``a.x <= b.x``) and its minimax value."""

    a: Point2
    b: Point2
    value: float


@dataclass(frozen=True)
class Placement2:
    a: Point2
    b: Point2
    value: float
    angle_index: int


def pair_constraint(s, t, inv_v: float, tag=None) -> NormSumConstraint:
    """Travel time of one pair as a function of ``(a.x, length, height)``."""
    s, t = as_point(s), as_point(t)
    if s.x > t.x:
        s, t = t, s
    return NormSumConstraint(
        (1.0, inv_v, 1.0),
        (_M_SA, _M_AB, _M_BT),
        ((-s.x, -s.y), (0.0, 0.0), (-t.x, -t.y)),
        cap=dist(s, t),
        tag=tag,
    )


def horizontal_box(pts: np.ndarray):
    """Bounding box of the points padded by their diameter, in ``(a.x, length, h)``."""
    xmin, ymin = pts.min(axis=0)
    xmax, ymax = pts.max(axis=0)
    d = math.hypot(xmax - xmin, ymax - ymin)  # bounds the diameter; only padding
    if d == 0.0:
        d = 1.0
    lo = (float(xmin - d), 0.0, float(ymin - d))
    hi = (float(xmax + d), float(xmax - xmin + 2 * d), float(ymax + d))
    return lo, hi


def _ends(x) -> tuple[Point2, Point2]:
    ax, length, h = (float(v) for v in x)
    return Point2(ax, h), Point2(ax + length, h)


def locate_horizontal_pairs(pairs: Sequence, v, seed: int = 0) -> PlacementH:
    """Horizontal walkway minimizing the worst travel time over the given pairs."""
    prs = [p if isinstance(p, SourceDestPair) else SourceDestPair(*p) for p in pairs]
    if not prs:
        raise ValueError("at least one pair is required")
    u = Speed.of(v).inv_v
    pts = as_array([q for p in prs for q in (p.s, p.t)])
    cons = [pair_constraint(p.s, p.t, u, tag=k) for k, p in enumerate(prs)]
    res = solve_explicit(QcProgram(cons, 3, horizontal_box(pts)), seed=seed)
    a, b = _ends(res.x)
    return PlacementH(a, b, res.y)


def _split3(items: list) -> list[list]:
    n = len(items)
    k1, k2 = (n + 2) // 3, (2 * n + 1) // 3
    q, r, s = items[:k1], items[k1:k2], items[k2:]
    return [q + r, r + s, q + s]


def horizontal_program(points, v) -> ImplicitQcProgram:
    """The horizontal diameter problem as an implicit program over point indices."""
    pts = as_array(points)
    u = Speed.of(v).inv_v
    box = horizontal_box(pts) if len(pts) else ((0.0,) * 3, (0.0,) * 3)

    def generator(subset):
        idx = sorted(subset)
        return [pair_constraint(pts[i], pts[j], u, tag=(i, j))
                for k, i in enumerate(idx) for j in idx[k + 1:]]

    def decision(subset, x, y):
        a, b = _ends(x)
        return _decide(pts[np.asarray(subset, dtype=np.intp)], a, b, u, y) is None

    return ImplicitQcProgram(list(range(len(pts))), generator, decision, _split3, 3, box)


def locate_horizontal_diameter(points, v, seed: int = 0) -> PlacementH:
    """Horizontal walkway minimizing the travel-time diameter of ``points``.

    Never enumerates all pairs: violation tests run the O(n log n) decision
    on the walkway under consideration.
    """
    pts = as_array(points)
    if len(pts) < 2:
        p = Point2(*pts[0]) if len(pts) else Point2(0.0, 0.0)
        return PlacementH(p, p, 0.0)
    res = solve_implicit(horizontal_program(pts, v), seed=seed)
    a, b = _ends(res.x)
    return PlacementH(a, b, res.y)


def _rotate(pts: np.ndarray, theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.ascontiguousarray(pts @ np.array([[c, s], [-s, c]]))


def _rotate_point(p: Point2, theta: float) -> Point2:
    c, s = math.cos(theta), math.sin(theta)
    return Point2(c * p.x - s * p.y, s * p.x + c * p.y)


def approx_angles(v, eps: float) -> list[float]:
    """Angles ``i * eps / v`` for ``i = 0 .. floor(2 pi v / eps)``."""
    sp = Speed.of(v)
    if sp.infinite:
        raise UnsupportedSpeedError(
            "the rotation approximation needs a finite speed: its angle step eps/v vanishes as v grows")
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps!r}")
    step = eps * sp.inv_v
    return [i * step for i in range(int(math.floor(2.0 * math.pi / step)) + 1)]


def locate_approx(points, v, eps: float, seed: int = 0) -> Placement2:
    """Walkway of any orientation within a factor ``1 + eps`` of optimal.

    Each angle of the fan is solved as a horizontal problem on the rotated
    points; the best placement (earliest angle on ties) is rotated back.
    """
    angles = approx_angles(v, eps)
    pts = as_array(points)
    if len(pts) < 2:
        p = Point2(*pts[0]) if len(pts) else Point2(0.0, 0.0)
        return Placement2(p, p, 0.0, 0)
    seeds = np.random.SeedSequence(seed).generate_state(len(angles))
    best = None
    for i, theta in enumerate(angles):
        ph = locate_horizontal_diameter(_rotate(pts, -theta), v, seed=int(seeds[i]))
        if best is None or ph.value < best[0].value - tol(best[0].value):
            best = (ph, i, theta)
    ph, i, theta = best
    return Placement2(_rotate_point(ph.a, theta), _rotate_point(ph.b, theta), ph.value, i)
