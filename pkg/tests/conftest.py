import random

import pytest

from tropweil import Divisor, TropicalCurve, segment
from tropweil.expr import compile_on_segment

MAXPLUS_EXPR = "max(x,3)+max(x,2)-max(x,1)"


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def maxplus_f():
    return compile_on_segment(MAXPLUS_EXPR, 7)


@pytest.fixture
def identity_g():
    return compile_on_segment("x", 7)


@pytest.fixture
def bigon():
    return TropicalCurve(["u", "v"], [("e1", "u", "v", 1), ("e2", "u", "v", 1)])


@pytest.fixture
def unit_segment():
    return segment(1)


@pytest.fixture
def bigon_dipole(bigon):
    return Divisor.at_vertices(bigon, {"u": 1, "v": -1})


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
