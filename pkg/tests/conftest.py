import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from netrobust.graph import BipartiteGraph, Graph  # noqa: E402

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "netrobust" / "data"


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def barbell():
    """Two triangles joined by the bridge 2-3."""
    return Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


def two_edges():
    return Graph(4, [(0, 1), (2, 3)])


def five_node_graph():
    """Five nodes a..e = 0..4 with edges ab, ad, bc, be, cd, ce."""
    a, b, c, d, e = range(5)
    return Graph(5, [(a, b), (a, d), (b, c), (b, e), (c, d), (c, e)])


def identity_bipartite():
    return BipartiteGraph(["p0", "p1"], ["q0", "q1"], [(0, 0), (1, 1)], "id2")


@st.composite
def small_graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def bipartite_graphs(draw, max_side=6):
    r = draw(st.integers(1, max_side))
    c = draw(st.integers(1, max_side))
    pairs = [(i, j) for i in range(r) for j in range(c)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return BipartiteGraph([f"r{i}" for i in range(r)], [f"c{j}" for j in range(c)],
                          [p for p, keep in zip(pairs, mask) if keep], "h")


@pytest.fixture
def data_dir():
    return DATA_DIR


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
