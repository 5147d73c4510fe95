import os
import sys

import pytest
from hypothesis import strategies as st

from forestats.forest import Forest, parse_forest

sys.path.insert(0, os.path.dirname(__file__))

EXAMPLE = "3,3,5,5,0"
EXAMPLE_W = (3, -5, 1, -4, 2)
MAJ_EXAMPLE = "4,3,4,5,0"
MAJ_EXAMPLE_W = (5, 3, 4, 2, 1)


@pytest.fixture
def example():
    return parse_forest(EXAMPLE)


@pytest.fixture
def maj_example():
    return parse_forest(MAJ_EXAMPLE)


@st.composite
def forests(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    parents = [draw(st.sampled_from([0] + list(range(j + 1, n + 1)))) for j in range(1, n + 1)]
    return Forest(tuple(parents))


@st.composite
def labeled_forests(draw, min_n=1, max_n=6, signed=True):
    f = draw(forests(min_n, max_n))
    perm = draw(st.permutations(range(1, f.n + 1)))
    if signed:
        signs = draw(st.lists(st.sampled_from((1, -1)), min_size=f.n, max_size=f.n))
    else:
        signs = [1] * f.n
    return f, tuple(a * b for a, b in zip(perm, signs))


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
