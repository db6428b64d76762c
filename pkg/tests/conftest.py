import itertools

import pytest


def bitstrings(n):
    return list(itertools.product((0, 1), repeat=n))


@pytest.fixture
def small():
    from metaqaoa.qubo import NppInstance

    return NppInstance((1, 2, 3))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
