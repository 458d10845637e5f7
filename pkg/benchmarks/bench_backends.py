"""Compare the compiled kernels with the pure-Python fallback.

Run ``python benchmarks/bench_backends.py``.  Each kernel is timed on the
same inputs under both backends (best of a few repeats) and the results are
checked to agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from walkways import _pure
from walkways._backend import COMPILED
from walkways.plane_location import horizontal_box, pair_constraint
from walkways.qcp import _Packed, _xtol


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(rng):
    pts = rng.normal(size=(8, 2)) * 3
    p = _Packed([pair_constraint(pts[i], pts[j], 0.5) for i in range(8) for j in range(i + 1, 8)])
    lo, hi = (np.asarray(b) for b in horizontal_box(pts))
    xt = _xtol(lo, hi)
    yield ("minimax_normsum (28 pair constraints, 3 params)",
           lambda k: k.minimax_normsum(p.W, p.M, p.C, p.CAP, lo, hi, xt, True, 1e-10, 0),
           lambda a, b: abs(a[1] - b[1]) <= 1e-9 * abs(a[1]))

    m = 2000
    red = np.ascontiguousarray(rng.normal(size=(m, 2)))
    q = np.ascontiguousarray(rng.normal(size=(m, 2)) * 0.2)
    idx = np.ascontiguousarray(np.sort(rng.integers(0, m, size=m))[::-1].astype(np.intp))
    yield (f"suffix_check ({m} disks, {m} queries)",
           lambda k: k.suffix_check(red, q, idx, 5.0),
           lambda a, b: a == b)

    big = np.ascontiguousarray(rng.normal(size=(100_000, 2)))
    yield ("euclidean_diameter (1e5 points)",
           lambda k: k.euclidean_diameter(big),
           lambda a, b: a[0] == b[0])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if not COMPILED:
        print("compiled extension not built; only the pure backend is available")
        return 1
    from walkways import _core

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<50} {'compiled ms':>12} {'pure ms':>10} {'speedup':>8}  agree")
    for name, run, agree in cases(rng):
        tc, rc = best_of(lambda: run(_core), args.repeat)
        tp, rp = best_of(lambda: run(_pure), args.repeat)
        print(f"{name:<50} {tc * 1e3:12.2f} {tp * 1e3:10.2f} {tp / tc:8.1f}  {agree(rc, rp)}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
