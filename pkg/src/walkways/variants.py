"""Red-blue models: unidirectional walkways, escalators, elevators.

Travel always goes from a red point to a blue point.  A unidirectional
walkway is ridden from ``a`` to ``b`` only, so every pair constraint stays
quasiconvex for any orientation and the walkway is located over all four
endpoint coordinates.  Escalators make the walkway mandatory; elevators
further collapse it to a single point.

For ``k`` fixed elevators the diameter is found with dominance vectors: pair
``(r, t)`` uses elevator ``h`` exactly when ``P_l(r) <= Q_l(t)`` for every
other elevator ``l``, which is a (k-1)-dimensional dominance query solved by
divide and conquer.  The model has no direct option, so every pair rides
some elevator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .geometry import Point2, RedBlueSets, Speed, Walkway2, as_array, as_point, dist
from .plane_diameter import _cross_witness
from .qcp import (
    ImplicitQcProgram,
    NormSumConstraint,
    QcConstraint,
    solve_implicit,
    solve_small,
)

__all__ = [
    "DominanceVector",
    "ElevatorSet",
    "unidirectional_locate",
    "escalator_locate",
    "elevator_locate",
    "dominance_vectors",
    "k_elevator_diameter",
]


@dataclass(frozen=True)
class DominanceVector:
    """Differences of elevator distances relative to a base elevator.

    Red points hold ``d(r, e_base) - d(r, e_l)``, blue points hold
    ``d(e_l, t) - d(e_base, t)``; the entry at ``base`` is 0.
    """

    values: tuple[float, ...]
    base: int

    def __post_init__(self):
        if self.values[self.base] != 0.0:
            raise ValueError("the base component of a dominance vector must be 0")

    def dominated_by(self, other: "DominanceVector") -> bool:
        return all(p <= q for p, q in zip(self.values, other.values))


@dataclass(frozen=True)
class ElevatorSet:
    positions: tuple[Point2, ...]

    def __init__(self, positions):
        pos = tuple(as_point(p) for p in positions)
        if not pos:
            raise ValueError("at least one elevator is required")
        object.__setattr__(self, "positions", pos)

    def __len__(self):
        return len(self.positions)


def _colors(rb) -> tuple[np.ndarray, np.ndarray]:
    if not isinstance(rb, RedBlueSets):
        rb = RedBlueSets(*rb)
    red, blue = as_array(rb.red), as_array(rb.blue)
    if not len(red) or not len(blue):
        raise ValueError("both the red and the blue set must be nonempty")
    return red, blue


def _box4(red, blue):
    pts = np.vstack([red, blue])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    d = math.hypot(*(hi - lo)) or 1.0
    return ((lo[0] - d, lo[1] - d) * 2, (hi[0] + d, hi[1] + d) * 2)


def _walkway(x) -> Walkway2:
    return Walkway2(Point2(float(x[0]), float(x[1])), Point2(float(x[2]), float(x[3])))


# -- unidirectional --------------------------------------------------------------

_U_RA = ((-1.0, 0.0, 0.0, 0.0), (0.0, -1.0, 0.0, 0.0))
_U_AB = ((1.0, 0.0, -1.0, 0.0), (0.0, 1.0, 0.0, -1.0))
_U_BT = ((0.0, 0.0, 1.0, 0.0), (0.0, 0.0, 0.0, 1.0))


def _directed_constraint(r, t, u: float, tag) -> NormSumConstraint:
    """``min(d(r,t), d(r,a) + u d(a,b) + d(b,t))`` in ``x = (a, b)``."""
    return NormSumConstraint(
        (1.0, u, 1.0),
        (_U_RA, _U_AB, _U_BT),
        ((r[0], r[1]), (0.0, 0.0), (-t[0], -t[1])),
        cap=math.hypot(t[0] - r[0], t[1] - r[1]),
        tag=tag,
    )


def _split3(items: list) -> list[list]:
    n = len(items)
    k1, k2 = (n + 2) // 3, (2 * n + 1) // 3
    q, r, s = items[:k1], items[k1:k2], items[k2:]
    return [q + r, r + s, q + s]


def unidirectional_program(rb, v) -> ImplicitQcProgram:
    """Implicit program over tagged red and blue indices."""
    red, blue = _colors(rb)
    u = Speed.of(v).inv_v
    ground = [(0, i) for i in range(len(red))] + [(1, j) for j in range(len(blue))]

    def generator(subset):
        rs = sorted(i for c, i in subset if c == 0)
        bs = sorted(j for c, j in subset if c == 1)
        return [_directed_constraint(red[i], blue[j], u, (i, j)) for i in rs for j in bs]

    def decision(subset, x, y):
        rs = [i for c, i in subset if c == 0]
        bs = [j for c, j in subset if c == 1]
        if not rs or not bs:
            return True
        w = (x[0], x[1]), (x[2], x[3])
        c = u * math.hypot(x[2] - x[0], x[3] - x[1])
        return _cross_witness(red[rs], blue[bs], w[0], w[1], c, y) is None

    return ImplicitQcProgram(ground, generator, decision, _split3, 4, _box4(red, blue))


def unidirectional_locate(rb, v, seed: int = 0) -> tuple[Walkway2, float]:
    """Walkway ridden only from red to blue minimizing the red-blue travel-time diameter."""
    res = solve_implicit(unidirectional_program(rb, v), seed=seed)
    return _walkway(res.x), res.y


# -- escalators and elevators -----------------------------------------------------


def _farthest(pts: np.ndarray, p) -> tuple[float, np.ndarray]:
    dx, dy = pts[:, 0] - p[0], pts[:, 1] - p[1]
    d = np.hypot(dx, dy)
    k = int(np.argmax(d))
    if d[k] == 0.0:
        return 0.0, np.zeros(2)
    return float(d[k]), np.array([dx[k], dy[k]]) / -d[k]


def escalator_objective(red: np.ndarray, blue: np.ndarray, u: float):
    """``max_r d(r,a) + u d(a,b) + max_t d(t,b)`` and a subgradient, as functions of ``(a, b)``."""

    def g(x):
        return (_farthest(red, x[:2])[0] + u * math.hypot(x[2] - x[0], x[3] - x[1])
                + _farthest(blue, x[2:])[0])

    def sub(x):
        _, ga = _farthest(red, x[:2])
        _, gb = _farthest(blue, x[2:])
        dab = math.hypot(x[2] - x[0], x[3] - x[1])
        if dab > 0.0:
            e = np.array([x[0] - x[2], x[1] - x[3]]) / dab
            ga, gb = ga + u * e, gb - u * e
        return np.concatenate([ga, gb])

    return g, sub


def escalator_locate(rb, v, seed: int = 0) -> tuple[Walkway2, float]:
    """Mandatory red-to-blue walkway minimizing the worst travel time.

    The objective is convex, so the search is deterministic and ``seed``
    only exists for interface symmetry.
    """
    red, blue = _colors(rb)
    g, sub = escalator_objective(red, blue, Speed.of(v).inv_v)
    res = solve_small([QcConstraint(g, sub, tag="escalator")], 4, _box4(red, blue))
    x = res.x
    return _walkway(x), float(g(np.asarray(x)))


def elevator_objective(red: np.ndarray, blue: np.ndarray):
    def g(e):
        return _farthest(red, e)[0] + _farthest(blue, e)[0]

    def sub(e):
        return _farthest(red, e)[1] + _farthest(blue, e)[1]

    return g, sub


def elevator_locate(rb, seed: int = 0) -> tuple[Point2, float]:
    """Point ``e`` minimizing ``max_r d(r,e) + max_t d(t,e)``; lexicographically smallest on ties."""
    red, blue = _colors(rb)
    g, sub = elevator_objective(red, blue)
    lo, hi = _box4(red, blue)
    res = solve_small([QcConstraint(g, sub, tag="elevator")], 2, (lo[:2], hi[:2]))
    e = Point2(float(res.x[0]), float(res.x[1]))
    return e, float(g(np.asarray(e)))


# -- k elevators ----------------------------------------------------------------------


def dominance_vectors(red: np.ndarray, blue: np.ndarray, elev: np.ndarray, base: int):
    """``(P, Q)`` arrays of shape ``(|R|, k)`` and ``(|B|, k)`` for elevator ``base``."""
    dr = np.hypot(red[:, None, 0] - elev[None, :, 0], red[:, None, 1] - elev[None, :, 1])
    db = np.hypot(blue[:, None, 0] - elev[None, :, 0], blue[:, None, 1] - elev[None, :, 1])
    return dr[:, base:base + 1] - dr, db - db[:, base:base + 1]


def _best_pair(reds, blues, wr, wb):
    i = max(reds, key=lambda r: wr[r])
    j = max(blues, key=lambda b: wb[b])
    return wr[i] + wb[j], i, j


def _dominance_max(reds, blues, P, Q, dims, wr, wb):
    """Max of ``wr[i] + wb[j]`` over ``P[i] <= Q[j]`` in the components ``dims``."""
    if not reds or not blues:
        return None
    if not dims:
        return _best_pair(reds, blues, wr, wb)
    c = dims[0]
    # reds before blues on equal keys so ties count as dominated
    events = sorted([(P[i, c], 0, i) for i in reds] + [(Q[j, c], 1, j) for j in blues])
    if len(dims) == 1:
        best, top = None, None
        for _, kind, idx in events:
            if kind == 0:
                if top is None or wr[idx] > wr[top]:
                    top = idx
            elif top is not None:
                s = wr[top] + wb[idx]
                if best is None or s > best[0]:
                    best = (s, top, idx)
        return best
    mid = len(events) // 2
    left, right = events[:mid], events[mid:]
    found = [
        _dominance_max([i for _, k, i in left if k == 0], [j for _, k, j in left if k == 1],
                       P, Q, dims, wr, wb),
        _dominance_max([i for _, k, i in right if k == 0], [j for _, k, j in right if k == 1],
                       P, Q, dims, wr, wb),
        _dominance_max([i for _, k, i in left if k == 0], [j for _, k, j in right if k == 1],
                       P, Q, dims[1:], wr, wb),
    ]
    found = [f for f in found if f is not None]
    return max(found, key=lambda f: f[0]) if found else None


def k_elevator_diameter(rb, elevators) -> tuple[float, tuple[Point2, Point2]]:
    """``max_{r,t} min_l d(r, e_l) + d(e_l, t)`` with a witness red-blue pair.

    Runs the dominance search once per base elevator.  The returned value is
    re-evaluated for the winning pair exactly as the definition reads.
    """
    if not isinstance(elevators, ElevatorSet):
        elevators = ElevatorSet(elevators)
    red, blue = _colors(rb)
    elev = as_array(elevators.positions)
    k = len(elev)
    best = None
    for h in range(k):
        P, Q = dominance_vectors(red, blue, elev, h)
        wr = [dist(r, elev[h]) for r in red]
        wb = [dist(elev[h], t) for t in blue]
        dims = [l for l in range(k) if l != h]
        got = _dominance_max(list(range(len(red))), list(range(len(blue))), P, Q, dims, wr, wb)
        if got is not None and (best is None or got[0] > best[0]):
            best = got
    _, i, j = best
    r, t = Point2(*red[i]), Point2(*blue[j])
    value = min(dist(r, e) + dist(e, t) for e in elevators.positions)
    return value, (r, t)
