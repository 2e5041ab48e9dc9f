import numpy as np
import pytest

from atompivot import new_graph, pivot_step, run_pivot


def complete_graph(n):
    return new_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


class TestPivotStep:
    def test_single_vertex(self):
        g = new_graph([], 1)
        assert pivot_step(g, np.random.default_rng(0)) == {0}

    def test_disjoint_triangles_give_whole_triangle(self):
        edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
        g = new_graph(edges, 6)
        rng = np.random.default_rng(1)
        for _ in range(20):
            cluster = pivot_step(g, rng)
            assert cluster in ({0, 1, 2}, {3, 4, 5})
            assert g.step_cost(cluster).alg_cost == 0

    def test_path_pivots(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        seen = set()
        rng = np.random.default_rng(2)
        for _ in range(50):
            seen.add(frozenset(pivot_step(g, rng)))
        assert seen == {frozenset({0, 1}), frozenset({0, 1, 2}), frozenset({1, 2})}

    def test_does_not_mutate(self):
        g = new_graph([(0, 1)], 2)
        pivot_step(g, np.random.default_rng(3))
        assert g.n == 2 and g.m == 1

    def test_empty_graph_raises(self):
        g = new_graph([], 1)
        g.remove_cluster({0})
        with pytest.raises(ValueError):
            pivot_step(g, np.random.default_rng(4))

    def test_uniform_over_live_vertices(self):
        # dead ids must never be picked, and survivors are drawn evenly
        g = new_graph([], 3)
        g.remove_cluster({1})
        rng = np.random.default_rng(5)
        counts = {0: 0, 2: 0}
        for _ in range(4000):
            cluster = pivot_step(g, rng)
            counts[next(iter(cluster))] += 1
        assert counts[0] + counts[2] == 4000
        assert abs(counts[0] - 2000) < 200


class TestRunPivot:
    def test_disjoint_cliques_recovered_exactly(self):
        edges = [(i, j) for base in (0, 4) for i in range(base, base + 4)
                 for j in range(i + 1, base + 4)]
        g = new_graph(edges, 8)
        for seed in range(10):
            clustering = run_pivot(g, np.random.default_rng(seed))
            assert clustering.canonical() == ((0, 1, 2, 3), (4, 5, 6, 7))
            assert g.clustering_cost(clustering) == 0

    def test_k4_minus_matching_always_costs_three(self):
        g = new_graph([(0, 2), (0, 3), (1, 2), (1, 3)], 4)
        for seed in range(25):
            clustering = run_pivot(g, np.random.default_rng(seed))
            assert g.clustering_cost(clustering) == 3

    def test_output_partitions_input_vertices(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            n = int(rng.integers(1, 12))
            edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                     if rng.random() < 0.4]
            g = new_graph(edges, n)
            clustering = run_pivot(g, rng)
            assert clustering.vertex_set() == set(range(n))

    def test_caller_graph_untouched(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        run_pivot(g, np.random.default_rng(8))
        assert g.n == 3 and g.m == 2

    def test_step_accumulator_matches_cost(self):
        g = new_graph([(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)], 4)
        for seed in range(10):
            steps = []
            clustering = run_pivot(g, np.random.default_rng(seed), steps=steps)
            assert sum(s.alg_cost for s in steps) == g.clustering_cost(clustering)
