"""Incremental intersection of equal-radius disks with point-membership queries.

The boundary of the intersection is kept as two x-ordered chains of circular
arcs: the lower envelope of the disks' upper semicircles and the upper envelope
of their lower semicircles.  Upper semicircles of equal radius are translates
of one strictly concave function, so any two of them cross at most once on
their common support; each disk therefore owns at most one arc per chain and
an insertion replaces one contiguous run of arcs.

Queries that refer to suffixes ``C_i`` of an insertion order are answered
offline: disks are inserted from the last index down and each query is
answered as soon as its suffix is complete.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right

_INF = math.inf


class _Chain:
    """Lower envelope of upper semicircles over the shared x-range ``[L, R]``.

    ``flip = -1`` mirrors y, so the same code keeps the upper envelope of the
    lower semicircles.  Arcs are ordered by decreasing centre x from left to
    right; ``bp[i]`` separates arc ``i`` from arc ``i + 1``.
    """

    def __init__(self, r: float, flip: int):
        self.r = r
        self.r2 = r * r
        self.flip = flip
        self.ncx: list[float] = []  # negated centre x, increasing
        self.cy: list[float] = []
        self.ids: list[int] = []
        self.bp: list[float] = []

    def __len__(self):
        return len(self.ids)

    def height(self, k: int, x: float) -> float:
        dx = x + self.ncx[k]
        return self.cy[k] + math.sqrt(max(0.0, self.r2 - dx * dx))

    def _arc_height(self, cx, cy, x):
        dx = x - cx
        return cy + math.sqrt(max(0.0, self.r2 - dx * dx))

    def _upper_crossing(self, gx, gy, hx, hy):
        """x of the point where both upper semicircles meet, or None."""
        dx, dy = hx - gx, hy - gy
        d2 = dx * dx + dy * dy
        if d2 == 0.0 or d2 > 4.0 * self.r2:
            return None
        h = math.sqrt(max(0.0, self.r2 - d2 / 4.0))
        d = math.sqrt(d2)
        mx, my = gx + dx / 2.0, gy + dy / 2.0
        ox, oy = -dy / d * h, dx / d * h
        px, py = (mx + ox, my + oy) if oy >= 0 else (mx - ox, my - oy)
        slack = 1e-12 * (self.r + abs(my))
        if py < max(gy, hy) - slack:
            return None
        return px

    def _cut_left(self, gx, gy, k, lo, hi):
        """Crossing x with arc ``k`` (centre right of g): g is lower to its right."""
        hx, hy = -self.ncx[k], self.cy[k]
        x = self._upper_crossing(gx, gy, hx, hy)
        if x is not None:
            return x
        mid = 0.5 * (lo + hi)
        return -_INF if self._arc_height(gx, gy, mid) < self.height(k, mid) else _INF

    def _cut_right(self, gx, gy, k, lo, hi):
        """Crossing x with arc ``k`` (centre left of or at g): g is lower to its left."""
        hx, hy = -self.ncx[k], self.cy[k]
        x = None if hx == gx else self._upper_crossing(gx, gy, hx, hy)
        if x is not None:
            return x
        mid = 0.5 * (lo + hi)
        return _INF if self._arc_height(gx, gy, mid) < self.height(k, mid) else -_INF

    def trim(self, lo: float, hi: float) -> None:
        k = bisect_right(self.bp, lo)
        if k:
            del self.ncx[:k], self.cy[:k], self.ids[:k], self.bp[:k]
        k = bisect_left(self.bp, hi)
        if k < len(self.bp):
            del self.ncx[k + 1:], self.cy[k + 1:], self.ids[k + 1:], self.bp[k:]

    def insert(self, gx: float, gy: float, gid: int, lo: float, hi: float) -> bool:
        """Add an upper semicircle; returns whether it shows up on the envelope."""
        gy = gy * self.flip
        m = len(self.ids)
        if m == 0:
            self.ncx.append(-gx)
            self.cy.append(gy)
            self.ids.append(gid)
            return True
        k = bisect_left(self.ncx, -gx)  # arcs [0, k) have centre x > gx
        if k == 0:
            xb, e = lo, self.height(0, lo)
        elif k == m:
            xb, e = hi, self.height(m - 1, hi)
        else:
            xb = self.bp[k - 1]
            e = min(self.height(k - 1, xb), self.height(k, xb))
        if not self._arc_height(gx, gy, xb) < e:
            return False

        bp = self.bp
        i = k - 1
        xl = lo
        while i >= 0:
            left_end = bp[i - 1] if i > 0 else lo
            x = self._cut_left(gx, gy, i, left_end, bp[i] if i < m - 1 else hi)
            if x <= left_end:
                i -= 1
                continue
            xl = x
            break
        j = k
        xr = hi
        while j < m:
            right_end = bp[j] if j < m - 1 else hi
            x = self._cut_right(gx, gy, j, bp[j - 1] if j > 0 else lo, right_end)
            if x >= right_end:
                j += 1
                continue
            xr = x
            break

        new_bp = bp[:max(i, 0)]
        if i >= 0:
            new_bp.append(xl)
        if j < m:
            new_bp.append(xr)
        new_bp.extend(bp[j:])
        self.ncx[i + 1:j] = [-gx]
        self.cy[i + 1:j] = [gy]
        self.ids[i + 1:j] = [gid]
        self.bp = new_bp
        return True

    def locate(self, x: float) -> int:
        return bisect_right(self.bp, x)

    def value(self, x: float) -> float:
        """Envelope height at ``x`` in un-mirrored coordinates."""
        return self.flip * self.height(self.locate(x), x)


class DiskIntersection:
    """Intersection of disks of a common radius, built by successive insertion."""

    def __init__(self, radius: float):
        if not radius >= 0.0:
            raise ValueError("radius must be nonnegative")
        self.radius = float(radius)
        self.r2 = self.radius * self.radius
        self.centers: list[tuple[float, float]] = []
        self._upper = _Chain(self.radius, 1)
        self._lower = _Chain(self.radius, -1)
        self.lo = -_INF
        self.hi = _INF
        self._lo_id = -1
        self._hi_id = -1
        self.empty = False

    def __len__(self):
        return len(self.centers)

    def insert(self, center) -> None:
        cx, cy = float(center[0]), float(center[1])
        gid = len(self.centers)
        self.centers.append((cx, cy))
        if self.empty:
            return
        if cx - self.radius > self.lo:
            self.lo, self._lo_id = cx - self.radius, gid
        if cx + self.radius < self.hi:
            self.hi, self._hi_id = cx + self.radius, gid
        if self.lo > self.hi:
            self.empty = True
            return
        for chain in (self._upper, self._lower):
            chain.trim(self.lo, self.hi)
            chain.insert(cx, cy, gid, self.lo, self.hi)

    def _in_disk(self, gid: int, x: float, y: float) -> bool:
        cx, cy = self.centers[gid]
        dx, dy = x - cx, y - cy
        return dx * dx + dy * dy <= self.r2

    def contains(self, point) -> bool:
        """Exact membership; arcs adjacent to the located one are also checked."""
        if self.empty:
            return False
        if not self.centers:
            return True  # empty intersection of no disks is the plane
        x, y = float(point[0]), float(point[1])
        if not (self._in_disk(self._lo_id, x, y) and self._in_disk(self._hi_id, x, y)):
            return False
        for chain in (self._upper, self._lower):
            k = chain.locate(x)
            for j in (k - 1, k, k + 1):
                if 0 <= j < len(chain) and not self._in_disk(chain.ids[j], x, y):
                    return False
        return True

    def chain_sizes(self) -> tuple[int, int]:
        return len(self._upper), len(self._lower)

    def _gap(self, x: float) -> float:
        return self._upper.value(x) - self._lower.value(x)

    def region(self) -> tuple[float, float] | None:
        """x-extent of the intersection, or None when it is empty."""
        if self.empty or not self.centers:
            return None
        lo, hi = self.lo, self.hi
        a, b = lo, hi
        for _ in range(200):  # the gap is concave in x
            m1 = a + (b - a) / 3.0
            m2 = b - (b - a) / 3.0
            if self._gap(m1) < self._gap(m2):
                a = m1
            else:
                b = m2
        xm = 0.5 * (a + b)
        scale = self.radius + 1.0
        if self._gap(xm) < -1e-12 * scale:
            return None

        def root(a, b, rising):
            for _ in range(200):
                m = 0.5 * (a + b)
                if (self._gap(m) >= 0.0) == rising:
                    b = m
                else:
                    a = m
            return 0.5 * (a + b)

        xl = lo if self._gap(lo) >= 0.0 else root(lo, xm, True)
        xr = hi if self._gap(hi) >= 0.0 else root(xm, hi, False)
        return xl, xr

    def vertex_count(self) -> int:
        """Number of boundary vertices (points where two different arcs meet)."""
        reg = self.region()
        if reg is None:
            return 0
        xl, xr = reg
        count = 0
        for chain in (self._upper, self._lower):
            count += sum(1 for x in chain.bp if xl < x < xr)
        for x in (xl, xr):
            up = self._upper.ids[self._upper.locate(x)]
            low = self._lower.ids[self._lower.locate(x)]
            if up != low:
                count += 1
        if xr - xl <= 1e-12 * (self.radius + 1.0):
            return min(count, 1)
        return count


class SuffixDiskIntersections:
    """Membership in every suffix ``C_i = D(c_i) ∩ ... ∩ D(c_last)`` of a centre list.

    Queries are answered offline: one structure, disks inserted from the end.
    """

    def __init__(self, centers, radius: float):
        self.centers = [(float(c[0]), float(c[1])) for c in centers]
        self.radius = float(radius)

    def __len__(self):
        return len(self.centers)

    def memberships(self, queries) -> list[bool]:
        """``queries`` holds ``(point, i)`` pairs; returns ``point ∈ C_i`` for each."""
        queries = list(queries)
        n = len(self.centers)
        out = [False] * len(queries)
        pending: dict[int, list[int]] = {}
        for q, (_, i) in enumerate(queries):
            if not 0 <= i < n:
                raise IndexError(f"suffix index {i} out of range for {n} disks")
            pending.setdefault(i, []).append(q)
        if not pending:
            return out
        inter = DiskIntersection(self.radius)
        lowest = min(pending)
        for i in range(n - 1, lowest - 1, -1):
            inter.insert(self.centers[i])
            for q in pending.get(i, ()):
                out[q] = inter.contains(queries[q][0])
        return out

    def membership(self, point, i: int) -> bool:
        return self.memberships([(point, i)])[0]


def build_suffix_intersections(centers, radius: float) -> SuffixDiskIntersections:
    """Suffix intersections for centres already sorted by the caller."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    return SuffixDiskIntersections(centers, radius)
