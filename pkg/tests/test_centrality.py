import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete_graph, cycle_graph, path_graph, small_graphs, star_graph
from oracles import brute_betweenness, pagerank_linear
from netrobust.centrality import betweenness, pagerank, variance
from netrobust.errors import EmptyInputError, EmptyNetworkError
from netrobust.graph import Graph


class TestBetweenness:
    def test_path(self):
        np.testing.assert_allclose(betweenness(path_graph(3)).values, [0, 1, 0])

    def test_triangle(self):
        np.testing.assert_allclose(betweenness(complete_graph(3)).values, [0, 0, 0])

    def test_star(self):
        np.testing.assert_allclose(betweenness(star_graph(4)).values, [6, 0, 0, 0, 0])

    def test_disconnected_pairs_contribute_nothing(self):
        g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
        np.testing.assert_allclose(betweenness(g).values, [0, 1, 0, 0, 1, 0])

    @settings(max_examples=150, deadline=None)
    @given(small_graphs())
    def test_matches_brute_force(self, g):
        np.testing.assert_allclose(betweenness(g).values, brute_betweenness(g.n, g.edges),
                                   atol=1e-9)

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_complete_graph_zero(self, n):
        assert np.all(betweenness(complete_graph(n)).values == 0)


class TestPageRank:
    def test_initial_value(self):
        # a single zero-tolerance iteration on a regular graph leaves the uniform start
        pr = pagerank(cycle_graph(4), max_iterations=1)
        np.testing.assert_allclose(pr.values, 0.25)

    @pytest.mark.parametrize("d", [0.3, 0.85, 1.0])
    def test_cycle_uniform(self, d):
        pr = pagerank(cycle_graph(4), damping=d)
        np.testing.assert_allclose(pr.values, 0.25, atol=1e-12)
        assert pr.converged

    def test_path(self):
        pr = pagerank(path_graph(3), damping=0.85)
        # closed form of the 3x3 stationary system: a = c = 19/74, b = 18/37
        np.testing.assert_allclose(pr.values, [19 / 74, 18 / 37, 19 / 74], atol=1e-9)
        np.testing.assert_allclose(pr.values, pagerank_linear(3, path_graph(3).edges, 0.85),
                                   atol=1e-9)

    def test_isolated_nodes(self):
        g = Graph(4, [(0, 1)])
        pr = pagerank(g)
        np.testing.assert_allclose(pr.values, pagerank_linear(4, g.edges, 0.85), atol=1e-9)
        assert abs(pr.values.sum() - 1) < 1e-12

    def test_empty(self):
        with pytest.raises(EmptyNetworkError):
            pagerank(Graph(0, []))

    def test_non_convergence_flag(self):
        # undamped walk on a bipartite graph oscillates
        pr = pagerank(path_graph(3), damping=1.0, max_iterations=50)
        assert not pr.converged and pr.iterations == 50
        assert abs(pr.values.sum() - 1) < 1e-12

    @settings(max_examples=100, deadline=None)
    @given(small_graphs(), st.randoms(use_true_random=False))
    def test_properties(self, g, rnd):
        pr = pagerank(g)
        assert np.all(pr.values >= 0)
        assert abs(pr.values.sum() - 1) < 1e-9
        np.testing.assert_allclose(pr.values, pagerank_linear(g.n, g.edges, 0.85), atol=1e-8)
        perm = list(range(g.n))
        rnd.shuffle(perm)
        relabelled = pagerank(g.relabel(perm)).values
        np.testing.assert_allclose(relabelled[perm], pr.values, atol=1e-9)

    @given(small_graphs(min_n=2))
    def test_adding_edge_keeps_normalisation(self, g):
        missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
        if missing:
            h = Graph(g.n, list(g.edges) + [missing[0]])
            assert abs(pagerank(h).values.sum() - 1) < 1e-9


class TestVariance:
    def test_constant(self):
        assert variance([0.3, 0.3, 0.3]) == 0.0

    def test_pair(self):
        assert variance([0, 1]) == 0.25

    def test_star(self):
        assert variance(betweenness(star_graph(4))) == pytest.approx(5.76, abs=1e-12)

    def test_empty(self):
        with pytest.raises(EmptyInputError):
            variance([])

    @given(st.lists(st.floats(-1e3, 1e3), min_size=1, max_size=30),
           st.floats(-1e3, 1e3), st.floats(-10, 10))
    def test_translation_and_scaling(self, xs, shift, scale):
        base = variance(xs)
        assert variance([x + shift for x in xs]) == pytest.approx(base, rel=1e-9, abs=1e-6)
        assert variance([scale * x for x in xs]) == pytest.approx(scale**2 * base, rel=1e-12,
                                                                  abs=1e-12)
