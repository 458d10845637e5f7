# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: ellipsoid minimax over norm-sum constraints, the suffix
disk-intersection check and hull diameter.  Signatures match ``_pure``."""

from libc.math cimport sqrt, hypot, fabs, INFINITY
from libc.stdlib cimport malloc, free
from libc.string cimport memmove

import numpy as np

COMPILED = True

cdef enum:
    MAXD = 8
    MAX_RESTARTS = 20


# -- ellipsoid minimax ---------------------------------------------------------

cdef struct Problem:
    int K
    int T
    int d
    const double* W
    const double* M
    const double* C
    const double* CAP
    int n
    int free[MAXD]
    double base[MAXD]
    double lo[MAXD]
    double hi[MAXD]


cdef double probe(Problem* p, const double* cf, double* gval, double* grad) noexcept nogil:
    cdef double x[MAXD]
    cdef double full[MAXD]
    cdef int j, k, t, best_k = -1
    cdef int d = p.d, T = p.T
    cdef double g, f, w, r0, r1, nr, best_f = -INFINITY, best_g = 0.0
    cdef const double* m
    cdef const double* c
    for j in range(d):
        x[j] = p.base[j]
    for j in range(p.n):
        x[p.free[j]] = cf[j]
    for k in range(p.K):
        g = 0.0
        for t in range(T):
            w = p.W[k * T + t]
            if w != 0.0:
                m = p.M + (k * T + t) * 2 * d
                c = p.C + (k * T + t) * 2
                r0 = c[0]
                r1 = c[1]
                for j in range(d):
                    r0 += m[j] * x[j]
                    r1 += m[d + j] * x[j]
                g += w * hypot(r0, r1)
        f = g if g < p.CAP[k] else p.CAP[k]
        if f > best_f:
            best_f = f
            best_k = k
            best_g = g
    for j in range(d):
        full[j] = 0.0
    if best_k >= 0:
        k = best_k
        for t in range(T):
            w = p.W[k * T + t]
            if w != 0.0:
                m = p.M + (k * T + t) * 2 * d
                c = p.C + (k * T + t) * 2
                r0 = c[0]
                r1 = c[1]
                for j in range(d):
                    r0 += m[j] * x[j]
                    r1 += m[d + j] * x[j]
                nr = hypot(r0, r1)
                if nr > 0.0:
                    for j in range(d):
                        full[j] += w * (m[j] * r0 + m[d + j] * r1) / nr
    for j in range(p.n):
        grad[j] = full[p.free[j]]
    gval[0] = best_g
    return best_f


# The ellipsoid is {c + B u : |u| <= 1}; keeping the factor B instead of
# Q = B B^T avoids the cancellation that ruins Q once axes differ widely.

cdef void ell_init(int n, const double* lo, const double* hi, double* c, double* B) noexcept nogil:
    cdef int i, j
    for i in range(n):
        c[i] = 0.5 * (lo[i] + hi[i])
        for j in range(n):
            B[i * n + j] = 0.0
        B[i * n + i] = sqrt(<double>n) * 0.5 * (hi[i] - lo[i])


cdef int ell_box(int n, const double* lo, const double* hi, const double* c,
                 double* sgn, double* depth) noexcept nogil:
    cdef int j, out = -1
    cdef double v, worst = 0.0, w
    for j in range(n):
        w = hi[j] - lo[j]
        if c[j] < lo[j]:
            v = (lo[j] - c[j]) / w
            if v > worst:
                worst = v
                out = j
                sgn[0] = -1.0
                depth[0] = lo[j] - c[j]
        elif c[j] > hi[j]:
            v = (c[j] - hi[j]) / w
            if v > worst:
                worst = v
                out = j
                sgn[0] = 1.0
                depth[0] = c[j] - hi[j]
    return out


cdef bint ell_cut(int n, double* c, double* B, const double* g, double depth) noexcept nogil:
    # keep g.(x - c) <= -depth; False when nothing of the ellipsoid is left
    cdef double h[MAXD]
    cdef double bv[MAXD]
    cdef double nrm = 0.0, alpha, step, sf1, f2, gam, r, lo, hi, val
    cdef int i, j
    if n == 1:
        r = fabs(B[0])
        lo = c[0] - r
        hi = c[0] + r
        if g[0] > 0.0:
            val = c[0] - depth / g[0]
            if val < hi:
                hi = val
        elif g[0] < 0.0:
            val = c[0] - depth / g[0]
            if val > lo:
                lo = val
        else:
            return depth <= 0.0
        if lo > hi:
            return False
        c[0] = 0.5 * (lo + hi)
        B[0] = 0.5 * (hi - lo)
        return True
    for j in range(n):
        h[j] = 0.0
        for i in range(n):
            h[j] += B[i * n + j] * g[i]
        nrm += h[j] * h[j]
    if not nrm > 0.0:
        return False
    nrm = sqrt(nrm)
    alpha = depth / nrm
    if alpha < 0.0:
        alpha = 0.0
    if alpha >= 1.0:
        return False
    for j in range(n):
        h[j] /= nrm
    for i in range(n):
        bv[i] = 0.0
        for j in range(n):
            bv[i] += B[i * n + j] * h[j]
    step = (1.0 + n * alpha) / (n + 1.0)
    for i in range(n):
        c[i] -= step * bv[i]
    sf1 = sqrt(n * n * (1.0 - alpha * alpha) / (n * n - 1.0))
    f2 = 2.0 * (1.0 + n * alpha) / ((n + 1.0) * (1.0 + alpha))
    gam = 1.0 - sqrt(1.0 - f2) if f2 < 1.0 else 1.0
    for i in range(n):
        for j in range(n):
            B[i * n + j] = sf1 * (B[i * n + j] - gam * bv[i] * h[j])
    return True


cdef double ell_radius(int n, const double* B) noexcept nogil:
    cdef double m = 0.0, s
    cdef int i, j
    for i in range(n):
        s = 0.0
        for j in range(n):
            s += B[i * n + j] * B[i * n + j]
        if s > m:
            m = s
    return sqrt(m)


cdef double ell_extent(int n, const double* B, int i) noexcept nogil:
    cdef double s = 0.0
    cdef int j
    for j in range(n):
        s += B[i * n + j] * B[i * n + j]
    return sqrt(s)


cdef void restart_box(Problem* p, const double* c, const double* B, const double* best,
                      bint have_best, double xtol, double* clo, double* chi) noexcept nogil:
    # bounding box of the (doubled) ellipsoid, widened to hold the best point
    cdef int n = p.n, j
    cdef double s, l, h
    for j in range(n):
        s = 2.0 * ell_extent(n, B, j)
        if s < xtol:
            s = xtol
        l = c[j] - s
        h = c[j] + s
        if have_best:
            if best[j] - xtol < l:
                l = best[j] - xtol
            if best[j] + xtol > h:
                h = best[j] + xtol
        if l < p.lo[j]:
            l = p.lo[j]
        if h > p.hi[j]:
            h = p.hi[j]
        if l > h:
            l = min(max(c[j], p.lo[j]), p.hi[j])
            h = l
        clo[j] = l
        chi[j] = h


cdef double minimize(Problem* p, double xtol, int max_iter, double* best) noexcept nogil:
    cdef int n = p.n, j, t, rs, budget = max_iter
    cdef double c[MAXD]
    cdef double B[MAXD * MAXD]
    cdef double g[MAXD]
    cdef double clo[MAXD]
    cdef double chi[MAXD]
    cdef double sgn = 0.0, depth = 0.0, f, gval = 0.0, best_f = INFINITY, prev
    cdef bint any_g, found = False, failed
    for j in range(n):
        clo[j] = p.lo[j]
        chi[j] = p.hi[j]
    for rs in range(MAX_RESTARTS):
        ell_init(n, clo, chi, c, B)
        failed = False
        prev = best_f
        while budget > 0:
            budget -= 1
            j = ell_box(n, p.lo, p.hi, c, &sgn, &depth)
            if j >= 0:
                for t in range(n):
                    g[t] = 0.0
                g[j] = sgn
                if not ell_cut(n, c, B, g, depth):
                    failed = True
                    break
                continue
            f = probe(p, c, &gval, g)
            if f < best_f:
                best_f = f
                found = True
                for j in range(n):
                    best[j] = c[j]
            any_g = False
            for j in range(n):
                if g[j] != 0.0:
                    any_g = True
            if not any_g:
                break
            depth = gval - best_f
            if depth < 0.0:
                depth = 0.0
            if not ell_cut(n, c, B, g, depth):
                failed = True
                break
            if ell_radius(n, B) < xtol:
                break
        # a failed cut with a wide ellipsoid is lost precision: restart around it
        if not failed or not best_f < prev or ell_radius(n, B) < xtol:
            break
        restart_box(p, c, B, best, found, xtol, clo, chi)
    if not found:
        for j in range(n):
            best[j] = min(max(c[j], p.lo[j]), p.hi[j])
        best_f = probe(p, best, &gval, g)
    return best_f


cdef void lexmin(Problem* p, int k, double level, double* best, double xtol, int max_iter) noexcept nogil:
    cdef int n = p.n, j, t, rs, budget = max_iter
    cdef double c[MAXD]
    cdef double B[MAXD * MAXD]
    cdef double g[MAXD]
    cdef double clo[MAXD]
    cdef double chi[MAXD]
    cdef double sgn = 0.0, depth = 0.0, f, gval = 0.0, prev
    cdef bint ok, any_g, failed
    for j in range(n):
        clo[j] = p.lo[j]
        chi[j] = p.hi[j]
    for rs in range(MAX_RESTARTS):
        ell_init(n, clo, chi, c, B)
        failed = False
        prev = best[k]
        while budget > 0:
            budget -= 1
            j = ell_box(n, p.lo, p.hi, c, &sgn, &depth)
            if j >= 0:
                for t in range(n):
                    g[t] = 0.0
                g[j] = sgn
                if not ell_cut(n, c, B, g, depth):
                    failed = True
                    break
                continue
            f = probe(p, c, &gval, g)
            if f > level:
                any_g = False
                for j in range(n):
                    if g[j] != 0.0:
                        any_g = True
                if not any_g:
                    break
                depth = gval - level
                ok = ell_cut(n, c, B, g, depth if depth > 0.0 else 0.0)
            else:
                if c[k] < best[k]:
                    for j in range(n):
                        best[j] = c[j]
                for j in range(n):
                    g[j] = 0.0
                g[k] = 1.0
                ok = ell_cut(n, c, B, g, c[k] - best[k])
            if not ok:
                failed = True
                break
            if ell_radius(n, B) < xtol:
                break
        if not failed or not best[k] < prev or ell_radius(n, B) < xtol:
            break
        restart_box(p, c, B, best, True, xtol, clo, chi)


def minimax_normsum(const double[:, ::1] W, const double[:, :, :, ::1] M,
                    const double[:, :, ::1] C, const double[::1] CAP,
                    const double[::1] lo, const double[::1] hi,
                    double xtol, bint lex=True, double lex_rel=1e-10, int max_iter=0):
    """Minimise ``max_k min(CAP_k, sum_t W_kt |M_kt x + C_kt|)`` over ``[lo, hi]``."""
    cdef Problem p
    cdef int d = lo.shape[0], j, k, iters
    cdef double best[MAXD]
    cdef double g[MAXD]
    cdef double f, level, width = 0.0, gval
    if d > MAXD:
        raise ValueError(f"at most {MAXD} dimensions are supported")
    if W.shape[0] == 0:
        raise ValueError("no constraints")
    p.K = W.shape[0]
    p.T = W.shape[1]
    p.d = d
    if M.shape[3] != d:
        raise ValueError("matrix width does not match the box dimension")
    p.W = &W[0, 0]
    p.M = &M[0, 0, 0, 0]
    p.C = &C[0, 0, 0]
    p.CAP = &CAP[0]
    p.n = 0
    for j in range(d):
        p.base[j] = lo[j]
        if hi[j] > lo[j]:
            p.free[p.n] = j
            p.lo[p.n] = lo[j]
            p.hi[p.n] = hi[j]
            if hi[j] - lo[j] > width:
                width = hi[j] - lo[j]
            p.n += 1
    if p.n == 0:
        f = probe(&p, best, &gval, g)
        return [lo[j] for j in range(d)], f
    iters = max_iter if max_iter > 0 else 150 + 60 * p.n * (p.n + 1)
    with nogil:
        f = minimize(&p, xtol, iters, best)
        if lex:
            level = f + max(1e-13, lex_rel * fabs(f))
            width = 1e-9 * width
            for k in range(p.n):
                lexmin(&p, k, level, best, xtol, iters)
                if best[k] + width < p.hi[k]:
                    p.hi[k] = best[k] + width
            f = probe(&p, best, &gval, g)
    x = [lo[j] for j in range(d)]
    for j in range(p.n):
        x[p.free[j]] = best[j]
    return x, f


# -- suffix disk intersections ---------------------------------------------------

cdef struct Chain:
    # arcs live in [s, s + m) of gap buffers; left[k] is where arc k starts
    int s
    int m
    double r
    double r2
    double flip
    double* ncx
    double* cy
    double* left
    int* ids


cdef int chain_alloc(Chain* ch, int n, double r, double flip) noexcept nogil:
    cdef int cap = 2 * n + 4
    ch.s = n + 2
    ch.m = 0
    ch.r = r
    ch.r2 = r * r
    ch.flip = flip
    ch.ncx = <double*> malloc(cap * sizeof(double))
    ch.cy = <double*> malloc(cap * sizeof(double))
    ch.left = <double*> malloc(cap * sizeof(double))
    ch.ids = <int*> malloc(cap * sizeof(int))
    if ch.ncx == NULL or ch.cy == NULL or ch.left == NULL or ch.ids == NULL:
        return -1
    return 0


cdef void chain_free(Chain* ch) noexcept nogil:
    free(ch.ncx)
    free(ch.cy)
    free(ch.left)
    free(ch.ids)


cdef inline double arc_h(double cx, double cy, double r2, double x) noexcept nogil:
    cdef double dx = x - cx, v = r2 - dx * dx
    return cy + (sqrt(v) if v > 0.0 else 0.0)


cdef inline double chain_h(Chain* ch, int k, double x) noexcept nogil:
    return arc_h(-ch.ncx[ch.s + k], ch.cy[ch.s + k], ch.r2, x)


cdef inline double chain_bp(Chain* ch, int k) noexcept nogil:
    # breakpoint between arcs k and k + 1
    return ch.left[ch.s + k + 1]


cdef bint upper_crossing(double r, double r2, double gx, double gy, double hx, double hy,
                         double* out) noexcept nogil:
    cdef double dx = hx - gx, dy = hy - gy, d2 = dx * dx + dy * dy
    cdef double h, d, mx, my, ox, oy, px, py, top
    if d2 == 0.0 or d2 > 4.0 * r2:
        return False
    h = r2 - d2 / 4.0
    h = sqrt(h) if h > 0.0 else 0.0
    d = sqrt(d2)
    mx = gx + dx / 2.0
    my = gy + dy / 2.0
    ox = -dy / d * h
    oy = dx / d * h
    if oy >= 0:
        px = mx + ox
        py = my + oy
    else:
        px = mx - ox
        py = my - oy
    top = gy if gy > hy else hy
    if py < top - 1e-12 * (r + fabs(my)):
        return False
    out[0] = px
    return True


cdef double cut_left(Chain* ch, double gx, double gy, int k, double lo, double hi) noexcept nogil:
    cdef double hx = -ch.ncx[ch.s + k], hy = ch.cy[ch.s + k], x, mid
    if upper_crossing(ch.r, ch.r2, gx, gy, hx, hy, &x):
        return x
    mid = 0.5 * (lo + hi)
    return -INFINITY if arc_h(gx, gy, ch.r2, mid) < chain_h(ch, k, mid) else INFINITY


cdef double cut_right(Chain* ch, double gx, double gy, int k, double lo, double hi) noexcept nogil:
    cdef double hx = -ch.ncx[ch.s + k], hy = ch.cy[ch.s + k], x, mid
    if hx != gx and upper_crossing(ch.r, ch.r2, gx, gy, hx, hy, &x):
        return x
    mid = 0.5 * (lo + hi)
    return INFINITY if arc_h(gx, gy, ch.r2, mid) < chain_h(ch, k, mid) else -INFINITY


cdef int chain_locate(Chain* ch, double x) noexcept nogil:
    # number of breakpoints <= x, i.e. the arc holding x
    cdef int a = 1, b = ch.m, mid
    while a < b:
        mid = (a + b) >> 1
        if ch.left[ch.s + mid] <= x:
            a = mid + 1
        else:
            b = mid
    return a - 1


cdef void chain_trim(Chain* ch, double lo, double hi) noexcept nogil:
    cdef int k, a, b, mid
    if ch.m == 0:
        return
    k = chain_locate(ch, lo)  # arcs before k end at or left of lo
    ch.s += k
    ch.m -= k
    # keep arcs that start strictly left of hi
    a = 1
    b = ch.m
    while a < b:
        mid = (a + b) >> 1
        if ch.left[ch.s + mid] < hi:
            a = mid + 1
        else:
            b = mid
    ch.m = a


cdef void move(Chain* ch, int src, int dst, int count) noexcept nogil:
    if count <= 0 or src == dst:
        return
    memmove(ch.ncx + dst, ch.ncx + src, count * sizeof(double))
    memmove(ch.cy + dst, ch.cy + src, count * sizeof(double))
    memmove(ch.left + dst, ch.left + src, count * sizeof(double))
    memmove(ch.ids + dst, ch.ids + src, count * sizeof(int))


cdef void chain_insert(Chain* ch, double gx, double gy, int gid, double lo, double hi) noexcept nogil:
    cdef int m = ch.m, a, b, mid, k, i, j, nl, nr, delta, pos
    cdef double xb, e, e2, x, left_end, right_end, xl, xr
    gy = gy * ch.flip
    if m == 0:
        ch.ncx[ch.s] = -gx
        ch.cy[ch.s] = gy
        ch.ids[ch.s] = gid
        ch.left[ch.s] = -INFINITY
        ch.m = 1
        return
    # k = number of arcs with centre x > gx
    a = 0
    b = m
    while a < b:
        mid = (a + b) >> 1
        if ch.ncx[ch.s + mid] < -gx:
            a = mid + 1
        else:
            b = mid
    k = a
    if k == 0:
        xb = lo
        e = chain_h(ch, 0, lo)
    elif k == m:
        xb = hi
        e = chain_h(ch, m - 1, hi)
    else:
        xb = chain_bp(ch, k - 1)
        e = chain_h(ch, k - 1, xb)
        e2 = chain_h(ch, k, xb)
        if e2 < e:
            e = e2
    if not arc_h(gx, gy, ch.r2, xb) < e:
        return

    i = k - 1
    xl = lo
    while i >= 0:
        left_end = chain_bp(ch, i - 1) if i > 0 else lo
        x = cut_left(ch, gx, gy, i, left_end, chain_bp(ch, i) if i < m - 1 else hi)
        if x <= left_end:
            i -= 1
            continue
        xl = x
        break
    j = k
    xr = hi
    while j < m:
        right_end = chain_bp(ch, j) if j < m - 1 else hi
        x = cut_right(ch, gx, gy, j, chain_bp(ch, j - 1) if j > 0 else lo, right_end)
        if x >= right_end:
            j += 1
            continue
        xr = x
        break

    # replace arcs (i, j) by the new one, shifting the shorter side
    nl = i + 1
    nr = m - j
    delta = 1 - (j - i - 1)
    if delta != 0:
        if nl <= nr:
            move(ch, ch.s, ch.s - delta, nl)
            ch.s -= delta
        else:
            move(ch, ch.s + j, ch.s + j + delta, nr)
    ch.m = m + delta
    pos = ch.s + i + 1
    ch.ncx[pos] = -gx
    ch.cy[pos] = gy
    ch.ids[pos] = gid
    ch.left[pos] = xl if i >= 0 else -INFINITY
    if nr > 0:
        ch.left[pos + 1] = xr


cdef inline bint in_disk(const double* red, int gid, double r2, double x, double y) noexcept nogil:
    cdef double dx = x - red[2 * gid], dy = y - red[2 * gid + 1]
    return dx * dx + dy * dy <= r2


cdef bint chain_ok(Chain* ch, const double* red, double r2, double x, double y) noexcept nogil:
    cdef int k = chain_locate(ch, x), j
    for j in range(k - 1, k + 2):
        if 0 <= j < ch.m and not in_disk(red, ch.ids[ch.s + j], r2, x, y):
            return False
    return True


def suffix_check(const double[:, ::1] red, const double[:, ::1] qpts,
                 const Py_ssize_t[::1] qidx, double radius):
    """First query outside its suffix intersection, or -1.  See ``_pure.suffix_check``."""
    cdef int m = red.shape[0], nq = qidx.shape[0], q, i, nxt = m - 1
    cdef int lo_id = -1, hi_id = -1, result = -1
    cdef double lo = -INFINITY, hi = INFINITY, cx, cy, x, y, r2 = radius * radius
    cdef bint empty = False
    cdef Chain up, dn
    cdef const double* rp
    if nq == 0:
        return -1
    if m == 0:
        raise IndexError("no disks")
    rp = &red[0, 0]
    if chain_alloc(&up, m, radius, 1.0) < 0 or chain_alloc(&dn, m, radius, -1.0) < 0:
        chain_free(&up)
        chain_free(&dn)
        raise MemoryError()
    try:
        with nogil:
            for q in range(nq):
                i = <int> qidx[q]
                while nxt >= i:
                    cx = rp[2 * nxt]
                    cy = rp[2 * nxt + 1]
                    if not empty:
                        if cx - radius > lo:
                            lo = cx - radius
                            lo_id = nxt
                        if cx + radius < hi:
                            hi = cx + radius
                            hi_id = nxt
                        if lo > hi:
                            empty = True
                        else:
                            chain_trim(&up, lo, hi)
                            chain_insert(&up, cx, cy, nxt, lo, hi)
                            chain_trim(&dn, lo, hi)
                            chain_insert(&dn, cx, cy, nxt, lo, hi)
                    nxt -= 1
                x = qpts[q, 0]
                y = qpts[q, 1]
                if empty or not (in_disk(rp, lo_id, r2, x, y) and in_disk(rp, hi_id, r2, x, y)
                                 and chain_ok(&up, rp, r2, x, y) and chain_ok(&dn, rp, r2, x, y)):
                    result = q
                    break
    finally:
        chain_free(&up)
        chain_free(&dn)
    return result


# -- hull diameter ----------------------------------------------------------------

cdef inline double cross3(const double* P, Py_ssize_t o, Py_ssize_t a, Py_ssize_t b) noexcept nogil:
    return ((P[2 * a] - P[2 * o]) * (P[2 * b + 1] - P[2 * o + 1])
            - (P[2 * a + 1] - P[2 * o + 1]) * (P[2 * b] - P[2 * o]))


def euclidean_diameter(points):
    """``(value, i, j)`` for a ``(n, 2)`` array; indices refer to ``points``."""
    pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef Py_ssize_t n = pts.shape[0]
    if n == 0:
        return 0.0, -1, -1
    order_arr = np.lexsort((pts[:, 1], pts[:, 0])).astype(np.intp)
    cdef const Py_ssize_t[::1] order = order_arr
    cdef const double[:, ::1] pv = pts
    cdef const double* P = &pv[0, 0]
    hull_arr = np.empty(2 * n + 2, dtype=np.intp)
    cdef Py_ssize_t[::1] H = hull_arr
    cdef Py_ssize_t h = 0, k, t, lower_len, i, j, i2, jn, bi = 0, bj = 0, idx, prev = -1
    cdef double best = -1.0, v, dx, dy, A, B
    with nogil:
        for k in range(n):
            idx = order[k]
            if prev >= 0 and P[2 * idx] == P[2 * prev] and P[2 * idx + 1] == P[2 * prev + 1]:
                continue
            while h >= 2 and cross3(P, H[h - 2], H[h - 1], idx) <= 0:
                h -= 1
            H[h] = idx
            h += 1
            prev = idx
        lower_len = h
        if lower_len > 1:
            for k in range(n - 2, -1, -1):
                idx = order[k]
                prev = order[k + 1]
                if P[2 * idx] == P[2 * prev] and P[2 * idx + 1] == P[2 * prev + 1]:
                    continue
                while h > lower_len and cross3(P, H[h - 2], H[h - 1], idx) <= 0:
                    h -= 1
                H[h] = idx
                h += 1
            h -= 1  # the last point closes the loop
    if h == 1:
        return 0.0, H[0], H[0]
    if h == 2:
        dx = P[2 * H[0]] - P[2 * H[1]]
        dy = P[2 * H[0] + 1] - P[2 * H[1] + 1]
        return sqrt(dx * dx + dy * dy), H[0], H[1]
    with nogil:
        j = 1
        for i in range(h):
            i2 = (i + 1) % h
            while True:
                jn = (j + 1) % h
                A = fabs(cross3(P, H[i], H[i2], H[jn]))
                B = fabs(cross3(P, H[i], H[i2], H[j]))
                if A > B:
                    j = jn
                else:
                    break
            for t in range(2):
                idx = H[i] if t == 0 else H[i2]
                dx = P[2 * idx] - P[2 * H[j]]
                dy = P[2 * idx + 1] - P[2 * H[j] + 1]
                v = dx * dx + dy * dy
                if v > best:
                    best = v
                    bi = idx
                    bj = H[j]
    return sqrt(best), bi, bj
