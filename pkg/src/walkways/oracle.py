"""Brute-force references for testing the fast algorithms.

Nothing here calls the fast paths except :func:`orientation_sweep`, which is
by design a dense sweep over the horizontal solver.  Diameters enumerate
every pair with the scalar time distances; placements are found by a grid
search refined around the best cells.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from typing import Callable

import numpy as np

from .geometry import (
    Point2,
    RedBlueSets,
    Speed,
    Walkway1,
    Walkway2,
    as_array,
    dist,
    time_distance_1d,
    time_distance_2d,
)

__all__ = [
    "GridSpec",
    "OracleResult",
    "brute_diameter",
    "brute_locate",
    "brute_k_elevator",
    "objective_1d",
    "objective_2d",
    "objective_horizontal",
    "objective_unidirectional",
    "objective_escalator",
    "objective_elevator",
    "orientation_sweep",
]


@dataclass(frozen=True)
class GridSpec:
    """Search box, final cell size and number of refinement levels.

    The coarse lattice starts at ``lo`` with step ``resolution * shrink **
    levels``; each refinement level divides the step by ``shrink`` around the
    ``keep`` best points found so far.  Halving the resolution therefore
    gives a coarse lattice containing the previous one.
    """

    lo: tuple[float, ...]
    hi: tuple[float, ...]
    resolution: float
    levels: int = 3
    shrink: int = 4
    keep: int = 4

    def __post_init__(self):
        object.__setattr__(self, "lo", tuple(float(v) for v in self.lo))
        object.__setattr__(self, "hi", tuple(float(v) for v in self.hi))
        if len(self.lo) != len(self.hi) or not self.lo:
            raise ValueError("lo and hi must be nonempty and of equal length")
        if not self.resolution > 0:
            raise ValueError("resolution must be positive")
        if self.levels < 0 or self.keep < 1 or self.shrink < 2:
            raise ValueError("need levels >= 0, keep >= 1 and shrink >= 2")
        if any(h < l for l, h in zip(self.lo, self.hi)):
            raise ValueError("each lo must not exceed its hi")

    @property
    def dim(self) -> int:
        return len(self.lo)

    @property
    def coarse_step(self) -> float:
        return self.resolution * self.shrink ** self.levels


@dataclass(frozen=True)
class OracleResult:
    """Grid optimum.  ``tolerance`` is the final cell size: the objectives are
    1-Lipschitz in each endpoint, so the true optimum near ``argmin`` is
    within a few cells' worth of ``value``."""

    argmin: tuple[float, ...]
    value: float
    tolerance: float

    def __iter__(self):
        return iter((self.argmin, self.value))


def _coarse_axis(lo, hi, step):
    m = int(math.floor((hi - lo) / step + 1e-9))
    pts = lo + step * np.arange(m + 1)
    return np.append(pts, hi) if pts[-1] < hi else pts


def _fine_axis(lo, hi, center, step, half):
    pts = center + step * np.arange(-half, half + 1)
    return np.unique(np.clip(pts, lo, hi))


def brute_locate(objective: Callable, grid: GridSpec) -> OracleResult:
    """Grid search over ``grid`` with local refinement around the ``keep`` best points.

    The search at resolution ``r`` first runs the one at ``2 r`` (while its
    coarse lattice has more than one step) and refines around that result
    too, so halving the resolution never raises the reported optimum.
    """
    return _search(objective, grid, {})


def _search(objective, grid: GridSpec, seen: dict) -> OracleResult:
    span = max(h - l for l, h in zip(grid.lo, grid.hi))
    start = []
    if 2.0 * grid.coarse_step < span:
        start = [_search(objective, replace(grid, resolution=2.0 * grid.resolution), seen).argmin]

    def evaluate(axes):
        for x in itertools.product(*axes):
            x = tuple(float(c) for c in x)
            if x not in seen:
                seen[x] = float(objective(np.array(x)))

    step = grid.coarse_step
    evaluate([_coarse_axis(l, h, step) for l, h in zip(grid.lo, grid.hi)])
    mine = set(itertools.product(*[map(float, _coarse_axis(l, h, step)) for l, h in zip(grid.lo, grid.hi)]))
    mine.update(start)
    for _ in range(grid.levels):
        best = sorted(mine, key=lambda x: (seen[x], x))[:grid.keep]
        best += [x for x in start if x not in best]
        step /= grid.shrink
        for c in best:
            axes = [_fine_axis(l, h, cj, step, grid.shrink) for l, h, cj in zip(grid.lo, grid.hi, c)]
            evaluate(axes)
            mine.update(tuple(float(v) for v in x) for x in itertools.product(*axes))
    x = min(mine, key=lambda x: (seen[x], x))
    return OracleResult(x, seen[x], step)


# -- diameters ------------------------------------------------------------------


def brute_diameter(P, w, v):
    """All-pairs maximum time distance; 1D when ``w`` is a :class:`Walkway1`
    or a pair of scalars.  Returns ``(value, witness pair)``."""
    one_d = isinstance(w, Walkway1) or (not isinstance(w, Walkway2) and np.ndim(w[0]) == 0)
    if one_d:
        w = w if isinstance(w, Walkway1) else Walkway1(*w)
        pts = [float(p) for p in P]
        td = time_distance_1d
    else:
        w = w if isinstance(w, Walkway2) else Walkway2(*w)
        pts = [Point2(*p) for p in as_array(P)]
        td = time_distance_2d
    if len(pts) < 2:
        raise ValueError("the diameter needs at least two points")
    best, pair = -math.inf, None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            t = td(pts[i], pts[j], w, v)
            if t > best:
                best, pair = t, (pts[i], pts[j])
    return best, pair


def brute_k_elevator(rb, elevators) -> tuple[float, tuple[Point2, Point2]]:
    """Triple loop over red, blue and elevators."""
    if not isinstance(rb, RedBlueSets):
        rb = RedBlueSets(*rb)
    red = [Point2(*p) for p in as_array(rb.red)]
    blue = [Point2(*p) for p in as_array(rb.blue)]
    elev = [Point2(*p) for p in as_array(getattr(elevators, "positions", elevators))]
    best, pair = -math.inf, None
    for r in red:
        for t in blue:
            val = min(dist(r, e) + dist(e, t) for e in elev)
            if val > best:
                best, pair = val, (r, t)
    return best, pair


# -- placement objectives ----------------------------------------------------------


def objective_1d(P, v) -> Callable:
    """``x = (a, b)`` to the 1D diameter, vectorized over all pairs."""
    p = np.sort(np.asarray(P, dtype=float))
    u = Speed.of(v).inv_v
    i, j = np.triu_indices(len(p), 1)
    s, t = p[i], p[j]

    def f(x):
        a, b = min(x[0], x[1]), max(x[0], x[1])
        if not len(s):
            return 0.0
        return float(np.max(np.minimum(t - s, np.abs(s - a) + np.abs(t - b) + u * (b - a))))

    return f


def _pair_times(s, t, a, b, u, both_ways=True):
    d = np.hypot(t[:, 0] - s[:, 0], t[:, 1] - s[:, 1])
    sa = np.hypot(s[:, 0] - a[0], s[:, 1] - a[1])
    tb = np.hypot(t[:, 0] - b[0], t[:, 1] - b[1])
    ride = u * math.hypot(b[0] - a[0], b[1] - a[1])
    via = sa + ride + tb
    if both_ways:
        sb = np.hypot(s[:, 0] - b[0], s[:, 1] - b[1])
        ta = np.hypot(t[:, 0] - a[0], t[:, 1] - a[1])
        via = np.minimum(via, sb + ride + ta)
    return np.minimum(d, via)


def objective_2d(P, v) -> Callable:
    """``x = (a.x, a.y, b.x, b.y)`` to the plane diameter."""
    pts = as_array(P)
    u = Speed.of(v).inv_v
    i, j = np.triu_indices(len(pts), 1)
    s, t = pts[i], pts[j]

    def f(x):
        return float(np.max(_pair_times(s, t, x[:2], x[2:], u))) if len(s) else 0.0

    return f


def objective_horizontal(P, v) -> Callable:
    """``x = (a.x, length, height)``; ``b`` lies ``length`` to the right of ``a``."""
    g = objective_2d(P, v)
    return lambda x: g((x[0], x[2], x[0] + abs(x[1]), x[2]))


def objective_unidirectional(rb, v) -> Callable:
    if not isinstance(rb, RedBlueSets):
        rb = RedBlueSets(*rb)
    red, blue = as_array(rb.red), as_array(rb.blue)
    u = Speed.of(v).inv_v
    i, j = np.meshgrid(np.arange(len(red)), np.arange(len(blue)), indexing="ij")
    s, t = red[i.ravel()], blue[j.ravel()]
    return lambda x: float(np.max(_pair_times(s, t, x[:2], x[2:], u, both_ways=False)))


def objective_escalator(rb, v) -> Callable:
    if not isinstance(rb, RedBlueSets):
        rb = RedBlueSets(*rb)
    red, blue = as_array(rb.red), as_array(rb.blue)
    u = Speed.of(v).inv_v

    def f(x):
        ra = np.max(np.hypot(red[:, 0] - x[0], red[:, 1] - x[1]))
        tb = np.max(np.hypot(blue[:, 0] - x[2], blue[:, 1] - x[3]))
        return float(ra + u * math.hypot(x[2] - x[0], x[3] - x[1]) + tb)

    return f


def objective_elevator(rb) -> Callable:
    g = objective_escalator(rb, math.inf)
    return lambda e: g((e[0], e[1], e[0], e[1]))


# -- orientation sweep -------------------------------------------------------------


def orientation_sweep(points, v, angles: int = 720, refine: int = 3, seed: int = 0):
    """Best walkway over a dense fan of orientations, refined near the best angles.

    Orientations ``theta`` and ``theta + pi`` give the same walkways, so
    ``angles`` samples cover ``[0, pi)``.  The ``refine`` best local minima of
    the sweep are polished by golden-section search on their bracket.
    Returns ``(value, theta)``.
    """
    from .plane_location import _rotate, locate_horizontal_diameter

    pts = as_array(points)
    if len(pts) < 2:
        return 0.0, 0.0

    def at(theta):
        return locate_horizontal_diameter(_rotate(pts, -theta), v, seed=seed).value

    step = math.pi / angles
    thetas = [k * step for k in range(angles)]
    vals = [at(t) for t in thetas]
    minima = [k for k in range(angles) if vals[k] <= vals[k - 1] and vals[k] <= vals[(k + 1) % angles]]
    minima.sort(key=lambda k: vals[k])
    best_v, best_t = min(zip(vals, thetas))
    gr = (math.sqrt(5.0) - 1.0) / 2.0
    for k in minima[:refine]:
        lo, hi = thetas[k] - step, thetas[k] + step
        c, d = hi - gr * (hi - lo), lo + gr * (hi - lo)
        fc, fd = at(c), at(d)
        for _ in range(30):
            if fc <= fd:
                hi, d, fd = d, c, fc
                c = hi - gr * (hi - lo)
                fc = at(c)
            else:
                lo, c, fc = c, d, fd
                d = lo + gr * (hi - lo)
                fd = at(d)
        for val, t in ((fc, c), (fd, d)):
            if val < best_v:
                best_v, best_t = val, t
    return best_v, best_t % math.pi
