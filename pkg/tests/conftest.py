from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from chordless.graph import Graph

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, max_n: int = 9, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(n), [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def bipartite_graphs(draw, max_n: int = 10):
    p = draw(st.integers(1, max_n - 1))
    q = draw(st.integers(1, max_n - p))
    pairs = [(i, p + j) for i in range(p) for j in range(q)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(range(p + q), [e for e, keep in zip(pairs, mask) if keep]), set(range(p)), set(range(p, p + q))


@pytest.fixture
def data_dir() -> Path:
    return DATA


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
