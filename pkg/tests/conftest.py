from __future__ import annotations

import os

import pytest

from bisectlab.graphcore import SimpleGraph, as_cubic

from oracles import random_cubic


def pytest_collection_modifyitems(config, items):
    if os.environ.get("BISECTLAB_SLOW"):
        return
    skip = pytest.mark.skip(reason="set BISECTLAB_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def random_graph():
    def make(n: int, seed: int):
        return as_cubic(SimpleGraph(n, random_cubic(n, seed)))

    return make


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
