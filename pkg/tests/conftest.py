from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from gallai_edmonds.graph import Graph

GOLDEN = Path(__file__).parent / "golden"

K1 = Graph(1)
K2 = Graph(2, [(0, 1)])
P3 = Graph(3, [(0, 1), (1, 2)])
K3 = Graph(3, [(0, 1), (1, 2), (0, 2)])
K4 = Graph(4, list(combinations(range(4), 2)))
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
STAR3 = Graph(4, [(0, 1), (0, 2), (0, 3)])
TRIANGLE_PENDANT = Graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(0, max_n))
    slots = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return Graph(n, [e for e, keep in zip(slots, chosen) if keep])


@pytest.fixture
def golden():
    return GOLDEN


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion."""

    def record(name: str, ok: bool, detail: str) -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
        print(line)
        ACCEPTANCE_LINES.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
