import random

import pytest

from thompsonlinks import parse_pd
from thompsonlinks.diagram import LinkDiagram

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"

_acceptance_lines: list[str] = []


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL)


@pytest.fixture
def figure_eight():
    return parse_pd(FIGURE_EIGHT)


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(name: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        _acceptance_lines.append(line)
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def random_gluing(n_crossings: int, rng: random.Random, free_loops: int = 0) -> LinkDiagram:
    """Crossings whose 4n slots are paired uniformly at random.

    Not necessarily planar, but a valid input for the coloring equations.
    """
    slots = list(range(4 * n_crossings))
    rng.shuffle(slots)
    labels = [0] * (4 * n_crossings)
    for k in range(0, len(slots), 2):
        labels[slots[k]] = labels[slots[k + 1]] = k // 2 + 1
    crossings = [tuple(labels[4 * c:4 * c + 4]) for c in range(n_crossings)]
    return LinkDiagram(tuple(crossings), free_loops)
