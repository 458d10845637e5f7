"""Command-line front end.

Reads a point document (JSON, or CSV by file extension), runs one algorithm
and prints a JSON (or CSV) result on standard output.  Input problems exit
with status 2 and a message on standard error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from pathlib import Path

from . import line, plane_diameter, plane_location, variants
from .geometry import Speed, Walkway1, Walkway2

COMMANDS_1D = ("diam1d", "locate1d")
RED_BLUE = ("unidirectional", "escalator", "elevator", "k-elevators")
NEEDS_V = ("diam1d", "locate1d", "diam2d", "decide2d", "locate-pairs", "locate-horizontal",
           "locate-approx", "unidirectional", "escalator")
RANDOMIZED = ("locate-horizontal", "locate-approx", "unidirectional")


class InputError(ValueError):
    """Bad input document or flag; reported with exit status 2."""


# -- input -------------------------------------------------------------------------


def _number(v, what: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputError(f"{what} must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise InputError(f"{what} must be finite")
    return v


def _point(p, what: str) -> tuple[float, float]:
    if not isinstance(p, (list, tuple)) or len(p) != 2:
        raise InputError(f"{what} must be an [x, y] pair, got {p!r}")
    return _number(p[0], what), _number(p[1], what)


def _read_csv(text: str) -> dict:
    points, labels = [], []
    for k, row in enumerate(csv.reader(io.StringIO(text)), 1):
        row = [c.strip() for c in row]
        if not row or not any(row) or row[0].startswith("#"):
            continue
        nums = []
        for c in row[:2]:
            if not _is_number(c):
                break
            nums.append(float(c))
        rest = row[len(nums):]
        if not nums and k == 1 and not points:
            continue  # header line
        if not nums or len(rest) > 1:
            raise InputError(f"line {k}: expected x,y[,label] or x, got {','.join(row)!r}")
        points.append(nums[0] if len(nums) == 1 else nums)
        if rest:
            labels.append(rest[0])
    doc: dict = {"points": points}
    if labels:
        if len(labels) != len(points):
            raise InputError("either every CSV line has a label or none does")
        doc["labels"] = labels
    return doc


def _is_number(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def load_document(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    if path.lower().endswith(".csv"):
        return _read_csv(text)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None
    if not isinstance(doc, dict) or "points" not in doc:
        raise InputError('the input must be an object with a "points" list')
    return doc


def _points_1d(doc) -> list[float]:
    pts = doc["points"]
    if not isinstance(pts, list) or any(isinstance(p, (list, tuple)) for p in pts):
        raise InputError("1D commands need a flat list of numbers as points")
    return [_number(p, "point") for p in pts]


def _points_2d(doc) -> list[tuple[float, float]]:
    pts = doc["points"]
    if not isinstance(pts, list) or any(not isinstance(p, (list, tuple)) for p in pts):
        raise InputError("2D commands need points given as [x, y] pairs")
    return [_point(p, "point") for p in pts]


def _red_blue(doc, pts):
    labels = doc.get("labels")
    if labels is None:
        raise InputError("this command needs red/blue labels")
    if not isinstance(labels, list) or len(labels) != len(pts):
        raise InputError("labels must list one entry per point")
    bad = [lab for lab in labels if lab not in ("red", "blue")]
    if bad:
        raise InputError(f"labels must be 'red' or 'blue', got {bad[0]!r}")
    red = [p for p, lab in zip(pts, labels) if lab == "red"]
    blue = [p for p, lab in zip(pts, labels) if lab == "blue"]
    if not red or not blue:
        raise InputError("both a red and a blue point are required")
    return red, blue


def _speed(arg) -> Speed:
    if arg is None:
        raise InputError("--v is required for this command")
    try:
        return Speed.of("inf" if str(arg).strip().lower() in ("inf", "+inf") else float(arg))
    except ValueError:
        raise InputError(f'--v must be a number greater than 1 or "inf", got {arg!r}') from None


def _need(args, *names):
    missing = ["--" + n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"missing {', '.join(missing)}")


# -- commands --------------------------------------------------------------------------


def _pt(p):
    return [float(p[0]), float(p[1])]


def _pair(w):
    return None if w is None else [_pt(w[0]), _pt(w[1])]


def _pair_1d(w):
    return None if w is None else [[float(w[0]), 0.0], [float(w[1]), 0.0]]


def _placement(a, b):
    return {"a": _pt(a), "b": _pt(b)}


def run_command(args, doc) -> dict:
    cmd = args.command
    if cmd in COMMANDS_1D:
        pts = _points_1d(doc)
    else:
        pts = _points_2d(doc)
    if len(pts) == 0:
        raise InputError("at least one point is required")
    v = _speed(args.v) if cmd in NEEDS_V else None
    out: dict = {"command": cmd}

    if cmd == "diam1d":
        _need(args, "a", "b")
        w = Walkway1(args.a, args.b)
        value, wit = line.diameter_1d(pts, w, v)
        out.update(value=value, placement=_placement((w.a, 0.0), (w.b, 0.0)), witness=_pair_1d(wit))
    elif cmd == "locate1d":
        p = line.locate_1d(pts, v)
        out.update(value=p.diameter, placement=_placement((p.a, 0.0), (p.b, 0.0)), witness=_pair_1d(p.witness))
    elif cmd in ("diam2d", "decide2d"):
        _need(args, "ax", "ay", "bx", "by")
        w = Walkway2((args.ax, args.ay), (args.bx, args.by))
        if cmd == "diam2d":
            value, wit = plane_diameter.diameter_2d(pts, w, v)
            out.update(value=value, placement=_placement(w.a, w.b), witness=_pair(wit))
        else:
            _need(args, "y")
            if args.y < 0:
                raise InputError("--y must be nonnegative")
            wit = plane_diameter.decision_witness(pts, w, v, args.y)
            out.update(feasible=wit is None, witness=_pair(wit))
    elif cmd == "locate-pairs":
        pairs = doc.get("pairs")
        if not isinstance(pairs, list) or not pairs:
            raise InputError('locate-pairs needs a nonempty "pairs" list of [i, j] indices')
        try:
            prs = [(pts[i], pts[j]) for i, j in pairs]
        except (TypeError, ValueError, IndexError):
            raise InputError("pairs must be [i, j] indices into points") from None
        p = plane_location.locate_horizontal_pairs(prs, v, seed=args.seed)
        out.update(value=p.value, placement=_placement(p.a, p.b))
    elif cmd == "locate-horizontal":
        p = plane_location.locate_horizontal_diameter(pts, v, seed=args.seed)
        wit = plane_diameter.diameter_2d(pts, Walkway2(p.a, p.b), v)[1]
        out.update(value=p.value, placement=_placement(p.a, p.b), witness=_pair(wit))
    elif cmd == "locate-approx":
        _need(args, "eps")
        if not args.eps > 0:
            raise InputError("--eps must be positive")
        p = plane_location.locate_approx(pts, v, args.eps, seed=args.seed)
        wit = plane_diameter.diameter_2d(pts, Walkway2(p.a, p.b), v)[1]
        out.update(value=p.value, placement=_placement(p.a, p.b), witness=_pair(wit),
                   angle_index=p.angle_index)
    else:
        red, blue = _red_blue(doc, pts)
        if cmd == "unidirectional":
            w, value = variants.unidirectional_locate((red, blue), v, seed=args.seed)
            out.update(value=value, placement=_placement(w.a, w.b))
        elif cmd == "escalator":
            w, value = variants.escalator_locate((red, blue), v)
            out.update(value=value, placement=_placement(w.a, w.b))
        elif cmd == "elevator":
            e, value = variants.elevator_locate((red, blue))
            out.update(value=value, placement=_placement(e, e))
        else:
            elev = doc.get("elevators")
            if not isinstance(elev, list) or not elev:
                raise InputError('k-elevators needs a nonempty "elevators" list')
            elev = [_point(e, "elevator") for e in elev]
            value, wit = variants.k_elevator_diameter((red, blue), elev)
            out.update(value=value, elevators=[_pt(e) for e in elev], witness=_pair(wit))
    if cmd in RANDOMIZED or cmd == "locate-pairs":
        out["seed"] = args.seed
    return out


# -- output -------------------------------------------------------------------------------

CSV_FIELDS = ("command", "value", "feasible", "ax", "ay", "bx", "by",
              "sx", "sy", "tx", "ty", "seed", "angle_index", "elapsed_ms")


def to_csv(doc: dict) -> str:
    row = dict(doc)
    pl, wit = row.pop("placement", None), row.pop("witness", None)
    row.pop("elevators", None)
    if pl:
        row.update(ax=pl["a"][0], ay=pl["a"][1], bx=pl["b"][0], by=pl["b"][1])
    if wit:
        row.update(sx=wit[0][0], sy=wit[0][1], tx=wit[1][0], ty=wit[1][1])
    fields = [f for f in CSV_FIELDS if f in row]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    w.writerow([_csv_cell(row[f]) for f in fields])
    return buf.getvalue()


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return repr(v) if isinstance(v, float) else v


def write_svg(path: str, pts, doc: dict, labels=None) -> None:
    """Static figure: points, the walkway segment and the witness pair."""
    pts2 = [(p, 0.0) if not isinstance(p, (list, tuple)) else tuple(p) for p in pts]
    shapes = list(pts2)
    pl, wit = doc.get("placement"), doc.get("witness")
    if pl:
        shapes += [tuple(pl["a"]), tuple(pl["b"])]
    xs, ys = [p[0] for p in shapes], [p[1] for p in shapes]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad, size = 0.08 * span, 480.0
    scale = size / (span + 2 * pad)

    def m(p):
        return ((p[0] - x0 + pad) * scale, (y1 + pad - p[1]) * scale)

    h = (y1 - y0 + 2 * pad) * scale
    r = 3.0
    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size:.1f}" height="{h:.1f}" '
             f'viewBox="0 0 {size:.1f} {h:.1f}">',
             f'<rect width="100%" height="100%" fill="white"/>']
    if wit:
        (ax, ay), (bx, by) = m(wit[0]), m(wit[1])
        parts.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                     'stroke="gray" stroke-dasharray="4 3"/>')
    for k, p in enumerate(pts2):
        cx, cy = m(p)
        color = {"red": "#c0392b", "blue": "#2e5fa8"}.get(labels[k] if labels else "", "#333")
        parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r}" fill="{color}"/>')
    if pl:
        (ax, ay), (bx, by) = m(pl["a"]), m(pl["b"])
        parts.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" '
                     'stroke="#1e8449" stroke-width="3"/>')
        for cx, cy in ((ax, ay), (bx, by)):
            parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="#1e8449"/>')
    for e in doc.get("elevators", []):
        cx, cy = m(e)
        parts.append(f'<rect x="{cx - 4:.2f}" y="{cy - 4:.2f}" width="8" height="8" fill="#1e8449"/>')
    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")


# -- entry point --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="walkways", description="Moving walkway diameters and placements.")
    ap.add_argument("command", choices=COMMANDS_1D + ("diam2d", "decide2d", "locate-pairs",
                                                      "locate-horizontal", "locate-approx") + RED_BLUE)
    ap.add_argument("--input", required=True, help="point document (.json, or .csv)")
    ap.add_argument("--v", help='walkway speed > 1, or "inf"')
    ap.add_argument("--eps", type=float)
    ap.add_argument("--y", type=float)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--svg", help="also write a figure to this path")
    ap.add_argument("--timing", action="store_true", help="add elapsed_ms (output no longer reproducible)")
    for name in ("ax", "ay", "bx", "by", "a", "b"):
        ap.add_argument(f"--{name}", type=float)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = load_document(args.input)
        t0 = time.perf_counter()
        out = run_command(args, doc)
        if args.timing:
            out["elapsed_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    except (InputError, ValueError) as exc:
        print(f"walkways {args.command}: {exc}", file=sys.stderr)
        return 2
    if args.svg:
        write_svg(args.svg, doc["points"], out, doc.get("labels"))
    if args.format == "csv":
        sys.stdout.write(to_csv(out))
    else:
        sys.stdout.write(json.dumps(out) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
