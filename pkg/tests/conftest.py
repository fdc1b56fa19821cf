"""Shared fixtures and the acceptance report hook.

The acceptance tests append one line per criterion to ``ACCEPTANCE_LINES``;
the terminal-summary hook echoes them at the end of every run so the
pass/fail status of each criterion is visible regardless of capture mode.
"""

import random

import pytest

from shufflecalc import CumulantTable, MomentTable

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20240824)


@pytest.fixture
def moments(rng):
    return MomentTable.random(["a", "b"], 4, rng)


@pytest.fixture
def cumulants_table(rng):
    return CumulantTable.random(["a", "b"], 4, rng)
