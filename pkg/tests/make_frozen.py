"""Recompute the oracle-derived reference values in ``data/frozen.json``.

Run ``python tests/make_frozen.py`` after changing an instance below.  The
values come from the brute-force oracle only, never from the fast paths.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from walkways.oracle import (
    GridSpec,
    brute_k_elevator,
    brute_locate,
    objective_1d,
    objective_2d,
    objective_elevator,
    objective_escalator,
    objective_horizontal,
    objective_unidirectional,
)

OUT = Path(__file__).with_name("data") / "frozen.json"


def instances():
    rng = np.random.default_rng(20240611)
    uni = (rng.normal(size=(20, 2)).tolist(), (rng.normal(size=(20, 2)) + [3.0, 0.0]).tolist())
    ele = (rng.normal(size=(20, 2)).tolist(), (rng.normal(size=(20, 2)) + [2.0, 1.0]).tolist())
    kel = (rng.normal(size=(25, 2)).tolist(), rng.normal(size=(25, 2)).tolist(), rng.normal(size=(3, 2)).tolist())
    return uni, ele, kel


def main():
    out = {}
    r = brute_locate(objective_1d([0.0, 1.0], 2.0), GridSpec((0, 0), (1, 1), 1e-3))
    out["locate1d_two_points"] = {"argmin": r.argmin, "value": r.value, "resolution": r.tolerance}

    P = [0.0, 1 / 3, 2 / 3, 1.0]
    r = brute_locate(objective_1d(P, 2.0), GridSpec((0, 0), (1, 1), 1e-3))
    out["locate1d_thirds"] = {"argmin": r.argmin, "value": r.value, "resolution": r.tolerance}

    # two parallel pairs, v = inf, over (a.x, length, h)
    pts = [(0, 0), (10, 0), (0, 1), (10, 1)]
    pairs = [(0, 1), (2, 3)]
    arr = np.array(pts, dtype=float)

    def pair_obj(x):
        a, b = (x[0], x[2]), (x[0] + x[1], x[2])
        worst = 0.0
        for i, j in pairs:
            s, t = arr[i], arr[j]
            d = math.dist(s, t)
            via = min(math.dist(s, a) + math.dist(b, t), math.dist(s, b) + math.dist(a, t))
            worst = max(worst, min(d, via))
        return worst

    r = brute_locate(pair_obj, GridSpec((-1, 0, -1), (11, 12, 2), 1e-3, levels=4))
    out["pairs_parallel_inf"] = {"argmin": r.argmin, "value": r.value, "resolution": r.tolerance}

    sq = [(0, 0), (1, 0), (0, 1), (1, 1)]
    r = brute_locate(objective_horizontal(sq, math.inf), GridSpec((-1.5, 0, -1.5), (2.5, 4, 2.5), 1e-4, levels=5))
    out["square_horizontal_inf"] = {"argmin": r.argmin, "value": r.value, "resolution": r.tolerance}

    rb = ([(0, 0), (0, 2)], [(10, 0), (10, 2)])
    r = brute_locate(objective_escalator(rb, math.inf), GridSpec((-1, -1, 9, -1), (1, 3, 11, 3), 1e-3, levels=4))
    out["escalator_square_inf"] = {"argmin": r.argmin, "value": r.value, "resolution": r.tolerance}

    r = brute_locate(objective_elevator(([(0, 0)], [(10, 0)])), GridSpec((-1, -1), (11, 1), 1e-3))
    out["elevator_segment"] = {"argmin": r.argmin, "value": r.value, "resolution": r.tolerance}

    uni, ele, kel = instances()
    allp = np.array(uni[0] + uni[1])
    lo, hi = allp.min(axis=0) - 0.5, allp.max(axis=0) + 0.5
    r = brute_locate(objective_unidirectional(uni, 2.0),
                     GridSpec((lo[0], lo[1], lo[0], lo[1]), (hi[0], hi[1], hi[0], hi[1]), 2e-3, levels=5))
    out["unidirectional_random"] = {"red": uni[0], "blue": uni[1], "argmin": r.argmin,
                                    "value": r.value, "resolution": r.tolerance}

    allp = np.array(ele[0] + ele[1])
    lo, hi = allp.min(axis=0), allp.max(axis=0)
    r = brute_locate(objective_elevator(ele), GridSpec(tuple(lo), tuple(hi), 1e-4, levels=5))
    out["elevator_random"] = {"red": ele[0], "blue": ele[1], "argmin": r.argmin,
                              "value": r.value, "resolution": r.tolerance}

    value, pair = brute_k_elevator((kel[0], kel[1]), kel[2])
    out["k_elevator_random"] = {"red": kel[0], "blue": kel[1], "elevators": kel[2],
                                "value": value, "witness": [list(pair[0]), list(pair[1])]}

    OUT.write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
