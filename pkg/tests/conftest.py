"""Shared graph builders, hypothesis strategies, acceptance reporting."""

from itertools import combinations

import hypothesis.strategies as st

from arbolist import Graph, from_edge_list


def pytest_terminal_summary(terminalreporter):
    """Replay the acceptance pass/fail lines after the test summary."""
    try:
        from .test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(RESULTS):
        terminalreporter.write_line(line)


def complete(n: int) -> Graph:
    return from_edge_list(list(combinations(range(n), 2)), n)


def cycle(n: int) -> Graph:
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def path(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def star(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list([(i, a + j) for i in range(a) for j in range(b)],
                          a + b)


def wheel(rim: int) -> Graph:
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(rim, i) for i in range(rim)]
    return from_edge_list(edges, rim + 1)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(edges, 10)


@st.composite
def small_graphs(draw, max_n: int = 12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), unique=True,
                              max_size=len(pairs)))
    else:
        edges = []
    return from_edge_list(edges, n)
