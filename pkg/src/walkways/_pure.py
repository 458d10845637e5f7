"""Pure-Python kernels.  ``_core`` (Cython) exports the same functions."""

from __future__ import annotations

import math

from .disks import DiskIntersection

COMPILED = False


# -- deep-cut ellipsoid method -------------------------------------------------


class _Ellipsoid:
    """``{c + B u : |u| <= 1}`` over the free coordinates of a box.

    The factor ``B`` is updated instead of ``Q = B B^T``, which stays accurate
    when the axes differ by many orders of magnitude.
    """

    __slots__ = ("n", "c", "B", "lo", "hi")

    def __init__(self, lo, hi):
        n = len(lo)
        self.n = n
        self.lo, self.hi = lo, hi
        self.c = [(l + h) / 2.0 for l, h in zip(lo, hi)]
        self.B = [[0.0] * n for _ in range(n)]
        for j in range(n):
            self.B[j][j] = math.sqrt(n) * (hi[j] - lo[j]) / 2.0

    def box_violation(self):
        """Cut direction and depth for the worst box violation of the centre, if any."""
        worst, out = 0.0, None
        for j in range(self.n):
            w = self.hi[j] - self.lo[j]
            if self.c[j] < self.lo[j]:
                v = (self.lo[j] - self.c[j]) / w
                if v > worst:
                    worst, out = v, (j, -1.0, self.lo[j] - self.c[j])
            elif self.c[j] > self.hi[j]:
                v = (self.c[j] - self.hi[j]) / w
                if v > worst:
                    worst, out = v, (j, 1.0, self.c[j] - self.hi[j])
        return out

    def cut(self, g, depth) -> bool:
        """Keep ``g.(x - c) <= -depth``; False when nothing of the ellipsoid is left."""
        n, B, c = self.n, self.B, self.c
        if n == 1:
            r = abs(B[0][0])
            lo, hi = c[0] - r, c[0] + r
            if g[0] > 0.0:
                hi = min(hi, c[0] - depth / g[0])
            elif g[0] < 0.0:
                lo = max(lo, c[0] - depth / g[0])
            else:
                return depth <= 0.0
            if lo > hi:
                return False
            c[0] = (lo + hi) / 2.0
            B[0][0] = (hi - lo) / 2.0
            return True
        h = [sum(B[i][j] * g[i] for i in range(n)) for j in range(n)]
        nrm = math.sqrt(sum(v * v for v in h))
        if not nrm > 0.0:
            return False
        alpha = max(0.0, depth / nrm)
        if alpha >= 1.0:
            return False
        h = [v / nrm for v in h]
        b = [sum(B[i][j] * h[j] for j in range(n)) for i in range(n)]
        step = (1.0 + n * alpha) / (n + 1.0)
        for i in range(n):
            c[i] -= step * b[i]
        sf1 = math.sqrt(n * n * (1.0 - alpha * alpha) / (n * n - 1.0))
        f2 = 2.0 * (1.0 + n * alpha) / ((n + 1.0) * (1.0 + alpha))
        gam = 1.0 - math.sqrt(1.0 - f2) if f2 < 1.0 else 1.0
        for i in range(n):
            Bi, bi = B[i], b[i]
            for j in range(n):
                Bi[j] = sf1 * (Bi[j] - gam * bi * h[j])
        return True

    def extent(self, i) -> float:
        return math.sqrt(sum(v * v for v in self.B[i]))

    def radius(self) -> float:
        return max(self.extent(i) for i in range(self.n))


def _reduce(x_full, free):
    return [x_full[j] for j in free]


class _Frame:
    """Maps between the free coordinates and full vectors (fixed ones sit at lo)."""

    def __init__(self, lo, hi):
        self.base = list(lo)
        self.free = [j for j in range(len(lo)) if hi[j] > lo[j]]
        self.lo = [lo[j] for j in self.free]
        self.hi = [hi[j] for j in self.free]

    def full(self, c):
        x = self.base[:]
        for k, j in enumerate(self.free):
            x[j] = c[k]
        return x


MAX_RESTARTS = 20


def _restart_box(frame, E, best, xtol):
    """Bounding box of the doubled ellipsoid, widened to hold ``best``."""
    lo, hi = [], []
    for j in range(E.n):
        s = max(2.0 * E.extent(j), xtol)
        l, h = E.c[j] - s, E.c[j] + s
        if best is not None:
            l, h = min(l, best[j] - xtol), max(h, best[j] + xtol)
        l, h = max(l, frame.lo[j]), min(h, frame.hi[j])
        if l > h:
            l = h = min(max(E.c[j], frame.lo[j]), frame.hi[j])
        lo.append(l)
        hi.append(h)
    return lo, hi


def _minimize(probe, frame, xtol, max_iter):
    best_x, best_f = None, math.inf
    budget = max_iter
    box = (frame.lo, frame.hi)
    for _ in range(MAX_RESTARTS):
        E = _Ellipsoid(*box)
        E.lo, E.hi = frame.lo, frame.hi  # box cuts always use the full box
        failed, prev = False, best_f
        while budget > 0:
            budget -= 1
            viol = E.box_violation()
            if viol is not None:
                j, sgn, depth = viol
                g = [0.0] * E.n
                g[j] = sgn
                if not E.cut(g, depth):
                    failed = True
                    break
                continue
            x = frame.full(E.c)
            f, gval, grad = probe(x)
            if f < best_f:
                best_f, best_x = f, x
            g = _reduce(grad, frame.free)
            if not any(g):
                break  # the active function has its minimum here
            if not E.cut(g, max(0.0, gval - best_f)):
                failed = True
                break
            if E.radius() < xtol:
                break
        # a failed cut while the ellipsoid is still wide means lost precision
        if not failed or not best_f < prev or E.radius() < xtol:
            break
        box = _restart_box(frame, E, None if best_x is None else _reduce(best_x, frame.free), xtol)
    if best_x is None:
        best_x = frame.full([min(max(c, l), h) for c, l, h in zip(E.c, frame.lo, frame.hi)])
        best_f = probe(best_x)[0]
    return best_x, best_f


def _lexmin(probe, frame, k, level, start, xtol, max_iter):
    """Smallest free coordinate ``k`` over ``{F <= level}``; ``start`` is feasible."""
    best = _reduce(start, frame.free)
    budget = max_iter
    box = (frame.lo, frame.hi)
    for _ in range(MAX_RESTARTS):
        E = _Ellipsoid(*box)
        E.lo, E.hi = frame.lo, frame.hi
        failed, prev = False, best[k]
        while budget > 0:
            budget -= 1
            viol = E.box_violation()
            if viol is not None:
                j, sgn, depth = viol
                g = [0.0] * E.n
                g[j] = sgn
                if not E.cut(g, depth):
                    failed = True
                    break
                continue
            f, gval, grad = probe(frame.full(E.c))
            if f > level:
                g = _reduce(grad, frame.free)
                if not any(g):
                    break
                ok = E.cut(g, max(0.0, gval - level))
            else:
                if E.c[k] < best[k]:
                    best = E.c[:]
                g = [0.0] * E.n
                g[k] = 1.0
                ok = E.cut(g, E.c[k] - best[k])
            if not ok:
                failed = True
                break
            if E.radius() < xtol:
                break
        if not failed or not best[k] < prev or E.radius() < xtol:
            break
        box = _restart_box(frame, E, best, xtol)
    return frame.full(best)


def ellipsoid_minimax(probe, lo, hi, xtol, lex=True, lex_rel=1e-10, max_iter=0):
    """Minimise ``F(x) = max_i min(cap_i, g_i(x))`` over the box ``[lo, hi]``.

    ``probe(x)`` returns ``(F(x), g_i(x), grad g_i(x))`` for an active ``i``.
    With ``lex`` the result is the lexicographically smallest point of
    ``{F <= F* + slack}`` found to within ``xtol``, where the slack is
    ``lex_rel * |F*|`` (at least 1e-13).
    """
    frame = _Frame(lo, hi)
    n = len(frame.free)
    if n == 0:
        x = list(lo)
        return x, probe(x)[0]
    iters = max_iter or 150 + 60 * n * (n + 1)
    x, f = _minimize(probe, frame, xtol, iters)
    if lex:
        level = f + max(1e-13, lex_rel * abs(f))
        width = 1e-9 * max(h - l for l, h in zip(frame.lo, frame.hi))
        for k in range(n):
            x = _lexmin(probe, frame, k, level, x, xtol, iters)
            # freeze coordinate k (up to a sliver) for the following ones
            frame.hi[k] = min(frame.hi[k], x[frame.free[k]] + width)
        f = probe(x)[0]
    return x, f


def normsum_probe(W, M, C, CAP):
    """Probe for constraints ``min(cap_i, sum_t w_it * |M_it x + c_it|)``.

    Arrays are nested sequences with shapes ``(K,T)``, ``(K,T,2,d)``,
    ``(K,T,2)`` and ``(K,)``; zero weights pad unequal term counts.
    """
    W = [list(map(float, r)) for r in W]
    M = [[[list(map(float, row)) for row in mt] for mt in mk] for mk in M]
    C = [[list(map(float, ct)) for ct in ck] for ck in C]
    CAP = [float(c) for c in CAP]
    K = len(W)
    d = len(M[0][0][0]) if K else 0

    def residual(k, t, x):
        m0, m1 = M[k][t]
        r0 = C[k][t][0] + sum(m0[j] * x[j] for j in range(d))
        r1 = C[k][t][1] + sum(m1[j] * x[j] for j in range(d))
        return r0, r1

    def probe(x):
        best_f, best_k, best_g = -math.inf, -1, 0.0
        for k in range(K):
            g = 0.0
            for t, w in enumerate(W[k]):
                if w != 0.0:
                    r0, r1 = residual(k, t, x)
                    g += w * math.hypot(r0, r1)
            f = min(CAP[k], g)
            if f > best_f:
                best_f, best_k, best_g = f, k, g
        grad = [0.0] * d
        if best_k >= 0:
            for t, w in enumerate(W[best_k]):
                if w != 0.0:
                    r0, r1 = residual(best_k, t, x)
                    nr = math.hypot(r0, r1)
                    if nr > 0.0:
                        m0, m1 = M[best_k][t]
                        for j in range(d):
                            grad[j] += w * (m0[j] * r0 + m1[j] * r1) / nr
        return best_f, best_g, grad

    return probe


def minimax_normsum(W, M, C, CAP, lo, hi, xtol, lex=True, lex_rel=1e-10, max_iter=0):
    probe = normsum_probe(W, M, C, CAP)
    x, f = ellipsoid_minimax(probe, list(map(float, lo)), list(map(float, hi)),
                             xtol, lex, lex_rel, max_iter)
    return x, f


# -- decision kernel ------------------------------------------------------------


def suffix_check(red, qpts, qidx, radius) -> int:
    """First query ``q`` (in the given order) with ``qpts[q]`` outside ``C_{qidx[q]}``.

    ``C_i`` is the intersection of the radius-``radius`` disks centred at
    ``red[i:]``.  Queries must be sorted by non-increasing ``qidx``.  Returns
    -1 when every query point is inside its suffix intersection.
    """
    m = len(red)
    nq = len(qidx)
    if nq == 0:
        return -1
    inter = DiskIntersection(float(radius))
    nxt = m - 1
    for q in range(nq):
        i = int(qidx[q])
        while nxt >= i:
            inter.insert((float(red[nxt][0]), float(red[nxt][1])))
            nxt -= 1
        if not inter.contains((float(qpts[q][0]), float(qpts[q][1]))):
            return q
    return -1


def euclidean_diameter(points):
    """``(value, i, j)`` for a ``(n, 2)`` array; indices refer to ``points``."""
    from .geometry import _calipers

    return _calipers(points)
