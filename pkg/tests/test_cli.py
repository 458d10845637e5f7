from __future__ import annotations

import json
import math
import subprocess
import sys

import numpy as np
import pytest

from walkways.cli import main
from walkways.geometry import Walkway2, tol
from walkways.line import diameter_1d
from walkways.plane_diameter import diameter_2d


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


@pytest.fixture
def two_points(tmp_path):
    return write(tmp_path, "two.json", {"points": [[0, 0], [10, 0]]})


@pytest.fixture
def cloud(tmp_path):
    rng = np.random.default_rng(3)
    pts = np.round(rng.normal(size=(12, 2)) * 3, 6).tolist()
    labels = ["red"] * 6 + ["blue"] * 6
    return write(tmp_path, "cloud.json", {"points": pts, "labels": labels,
                                          "pairs": [[0, 1], [2, 3], [4, 11]],
                                          "elevators": [[0, 0], [1, 1]]}), pts


def test_locate1d_example(tmp_path, capsys):
    path = write(tmp_path, "p.json", {"points": [0, 1]})
    out = run_json(capsys, "locate1d", "--input", path, "--v", "2")
    assert out["value"] == 0.5
    assert out["placement"] == {"a": [0.0, 0.0], "b": [1.0, 0.0]}


def test_decide2d_example(two_points, capsys):
    out = run_json(capsys, "decide2d", "--input", two_points, "--ax", 1, "--ay", 0, "--bx", 9, "--by", 0,
                   "--v", "inf", "--y", 2)
    assert out["feasible"] is True and out["witness"] is None
    out = run_json(capsys, "decide2d", "--input", two_points, "--ax", 1, "--ay", 0, "--bx", 9, "--by", 0,
                   "--v", "inf", "--y", 1.5)
    assert out["feasible"] is False and out["witness"] == [[0.0, 0.0], [10.0, 0.0]]


def test_diam_commands(tmp_path, two_points, capsys):
    out = run_json(capsys, "diam2d", "--input", two_points, "--ax", 1, "--ay", 0, "--bx", 9, "--by", 0, "--v", 2)
    assert out["value"] == 6.0
    path = write(tmp_path, "p.json", {"points": [0, 1]})
    out = run_json(capsys, "diam1d", "--input", path, "--a", 0, "--b", 1, "--v", 2)
    assert out["value"] == 0.5


@pytest.mark.parametrize("argv", [
    ("locate-approx", "--v", "2", "--eps", "0.25", "--seed", "7"),
    ("locate-horizontal", "--v", "2", "--seed", "3"),
    ("unidirectional", "--v", "2", "--seed", "5"),
    ("locate-pairs", "--v", "3", "--seed", "1"),
])
def test_reruns_are_byte_identical(cloud, capsys, argv):
    path, _ = cloud
    first = run(capsys, argv[0], "--input", path, *argv[1:])
    second = run(capsys, argv[0], "--input", path, *argv[1:])
    assert first[0] == 0 and first == second
    assert json.loads(first[1])["seed"] == int(argv[-1])


@pytest.mark.parametrize("cmd,extra", [
    ("escalator", ("--v", "2")),
    ("elevator", ()),
    ("k-elevators", ()),
])
def test_red_blue_commands(cloud, capsys, cmd, extra):
    path, _ = cloud
    out = run_json(capsys, cmd, "--input", path, *extra)
    assert out["command"] == cmd and out["value"] > 0


def test_round_trip_2d(cloud, capsys):
    path, pts = cloud
    for cmd, extra in (("locate-horizontal", ()), ("locate-approx", ("--eps", "0.5"))):
        out = run_json(capsys, cmd, "--input", path, "--v", "2", *extra)
        pl = out["placement"]
        d = diameter_2d(pts, Walkway2(pl["a"], pl["b"]), 2)[0]
        assert abs(d - out["value"]) <= 10 * tol(out["value"])
        again = run_json(capsys, "diam2d", "--input", path, "--v", "2",
                         "--ax", pl["a"][0], "--ay", pl["a"][1], "--bx", pl["b"][0], "--by", pl["b"][1])
        assert abs(again["value"] - out["value"]) <= 10 * tol(out["value"])


def test_round_trip_1d(tmp_path, capsys):
    pts = [0.0, 0.3, 1.7, 2.2, 5.0]
    path = write(tmp_path, "p.json", {"points": pts})
    out = run_json(capsys, "locate1d", "--input", path, "--v", "3")
    a, b = out["placement"]["a"][0], out["placement"]["b"][0]
    again = run_json(capsys, "diam1d", "--input", path, "--v", "3", "--a", repr(a), "--b", repr(b))
    assert abs(again["value"] - out["value"]) <= tol(out["value"])


def test_csv_and_json_inputs_agree(tmp_path, cloud, capsys):
    path, pts = cloud
    labels = ["red"] * 6 + ["blue"] * 6
    csv_path = write(tmp_path, "cloud.csv",
                     "x,y,label\n" + "".join(f"{x!r},{y!r},{lab}\n" for (x, y), lab in zip(pts, labels)))
    for cmd, extra in (("locate-horizontal", ("--v", "2")), ("elevator", ()), ("unidirectional", ("--v", "2"))):
        assert run(capsys, cmd, "--input", path, *extra) == run(capsys, cmd, "--input", csv_path, *extra)


def test_csv_output(two_points, capsys):
    code, out, _ = run(capsys, "diam2d", "--input", two_points, "--ax", 1, "--ay", 0, "--bx", 9, "--by", 0,
                       "--v", 2, "--format", "csv")
    header, row = out.strip().split("\n")
    rec = dict(zip(header.split(","), row.split(",")))
    assert code == 0 and rec["command"] == "diam2d" and float(rec["value"]) == 6.0
    assert float(rec["bx"]) == 9.0


def test_svg_and_timing(tmp_path, two_points, capsys):
    svg = tmp_path / "f.svg"
    out = run_json(capsys, "locate-horizontal", "--input", two_points, "--v", 2, "--svg", svg, "--timing")
    assert "elapsed_ms" in out
    assert svg.read_text().startswith("<svg")


@pytest.mark.parametrize("doc,argv", [
    ("{not json", ("locate1d", "--v", "2")),
    ({"points": [0, 1]}, ("locate1d", "--v", "1")),
    ({"points": [0, 1]}, ("locate1d", "--v", "0.5")),
    ({"points": [0, 1]}, ("locate1d",)),
    ({"points": [[0, 0], [1, 1]]}, ("locate1d", "--v", "2")),
    ({"points": [0, 1]}, ("diam2d", "--v", "2", "--ax", 0, "--ay", 0, "--bx", 1, "--by", 0)),
    ({"points": [[0, 0], [1, 1]]}, ("locate-approx", "--v", "2", "--eps", "0")),
    ({"points": [[0, 0], [1, 1]]}, ("locate-approx", "--v", "2", "--eps", "-1")),
    ({"points": [[0, 0], [1, 1]]}, ("locate-approx", "--v", "inf", "--eps", "0.5")),
    ({"points": [[0, 0], [1, 1]]}, ("elevator",)),
    ({"points": [[0, 0], [1, 1]], "labels": ["red", "red"]}, ("escalator", "--v", "2")),
    ({"points": [[0, 0], [1, 1]], "labels": ["red", "green"]}, ("elevator",)),
    ({"points": [[0, 0], [1, 1]]}, ("decide2d", "--v", "2", "--ax", 0, "--ay", 0, "--bx", 1, "--by", 0)),
    ({"points": [[0, 0], [1, 1]]}, ("decide2d", "--v", "2", "--ax", 0, "--ay", 0, "--bx", 0, "--by", 0,
                                    "--y", 1)),
    ({"points": [[0, 0], [1, 1]]}, ("locate-pairs", "--v", "2")),
    ({"points": []}, ("locate-horizontal", "--v", "2")),
    ({"pts": []}, ("locate-horizontal", "--v", "2")),
])
def test_bad_input_exits_2(tmp_path, capsys, doc, argv):
    path = write(tmp_path, "bad.json", doc)
    code, out, err = run(capsys, argv[0], "--input", path, *argv[1:])
    assert code == 2 and out == ""
    assert err.startswith(f"walkways {argv[0]}:")


def test_bad_csv_exits_2(tmp_path, capsys):
    path = write(tmp_path, "bad.csv", "1,2\n3,oops,red,extra\n")
    assert run(capsys, "locate-horizontal", "--input", path, "--v", "2")[0] == 2


def test_missing_file_exits_2(tmp_path, capsys):
    assert run(capsys, "locate1d", "--input", tmp_path / "nope.json", "--v", "2")[0] == 2


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "p.json", {"points": [0, 1]})
    proc = subprocess.run([sys.executable, "-m", "walkways.cli", "locate1d", "--input", path, "--v", "inf"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["value"] == 0.0
