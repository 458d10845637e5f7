from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "repo",
    derandomize=True,
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")

FROZEN = json.loads((Path(__file__).with_name("data") / "frozen.json").read_text())

coord = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)
inv_speed = st.sampled_from([0.0, 0.1, 0.5, 2 / 3, 0.9])


def close(a, b, rel=1e-9, abs_=1e-12):
    return abs(a - b) <= max(abs_, rel * max(abs(a), abs(b)))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def frozen():
    return FROZEN


def speed_from_inv(u):
    return math.inf if u == 0 else 1.0 / u


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
