from __future__ import annotations

import functools
import math
import sys
from pathlib import Path

import pytest

from rlcm import CoxeterMatrix, artin_presentation, enumerate_ball, free_presentation

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"
INF = math.inf

B4_MATRIX = CoxeterMatrix.from_rows([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
PATH_MATRIX = CoxeterMatrix.from_rows([[1, 2, INF], [2, 1, 2], [INF, 2, 1]])


def _monoids():
    """The six monoids every suite runs over, keyed by a short name."""
    return {
        "N2": artin_presentation(CoxeterMatrix.uniform(2, 2)),
        "F2": free_presentation(2),
        "I2(3)": artin_presentation(CoxeterMatrix.uniform(2, 3)),
        "I2(4)": artin_presentation(CoxeterMatrix.uniform(2, 4)),
        "B4": artin_presentation(B4_MATRIX, ("s1", "s2", "s3")),
        "path": artin_presentation(PATH_MATRIX),
    }


MONOIDS = _monoids()


@functools.cache
def ball_for(name: str, radius: int = 5):
    return enumerate_ball(MONOIDS[name], radius)


@pytest.fixture(scope="session")
def balls():
    return {name: ball_for(name) for name in MONOIDS}


@pytest.fixture(scope="session")
def regular_reps(balls):
    from rlcm import build_regular_rep

    return {name: build_regular_rep(b) for name, b in balls.items()}


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
