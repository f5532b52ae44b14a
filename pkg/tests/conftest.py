import random
from pathlib import Path

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from zpgraph import fixtures
from zpgraph.graph import DualGraph, total_genus

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@st.composite
def stable_graphs(draw, max_vertices=6, max_genus=10):
    """Connected stable graphs: random tree plus extra edges, then repaired."""
    k = draw(st.integers(1, max_vertices))
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, k)]
    extra = draw(st.lists(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)), max_size=4))
    edges += extra
    genera = draw(st.lists(st.integers(0, 2), min_size=k, max_size=k))
    deg = [0] * k
    for u, w in edges:
        deg[u] += 1
        deg[w] += 1
    for v in range(k):
        while 2 * genera[v] - 2 + deg[v] <= 0:
            if draw(st.booleans()):
                edges.append((v, v))
                deg[v] += 2
            else:
                genera[v] += 1
    G = DualGraph(tuple(genera), tuple(edges))
    assume(total_genus(G) <= max_genus)
    return G


@pytest.fixture
def fig1():
    return fixtures.figure1()


@pytest.fixture
def heawood():
    return fixtures.heawood()


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
