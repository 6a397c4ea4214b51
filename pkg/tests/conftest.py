from itertools import permutations

import pytest
from hypothesis import strategies as st

from bootperc.graph import Graph, path


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def graph_and_subset(draw, max_n=10):
    g = draw(graphs(max_n=max_n))
    a0 = draw(st.frozensets(st.integers(0, g.n - 1))) if g.n else frozenset()
    return g, a0


def naive_degeneracy(g):
    """min over every permutation of the max left-degree, no pruning."""
    best = None
    for order in permutations(range(g.n)):
        pos = {v: i for i, v in enumerate(order)}
        worst = max(
            (sum(1 for u in g.adjacency[v] if pos[u] < pos[v]) for v in range(g.n)),
            default=0,
        )
        if best is None or worst < best:
            best = worst
    return best or 0


def naive_final_set(g, a0, r):
    """Literal set recurrence A_t = A_{t-1} + {v : |N(v) & A_{t-1}| >= r}."""
    current = set(a0)
    while True:
        nxt = current | {v for v in range(g.n) if len(set(g.adjacency[v]) & current) >= r}
        if nxt == current:
            return frozenset(current)
        current = nxt


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def record(criterion, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
