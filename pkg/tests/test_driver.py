import numpy as np
import pytest

from atompivot import (
    GoodnessParams,
    new_graph,
    run_atom_only,
    run_atom_pivot,
    run_with_summary,
)
from atompivot.sweep import EXPERIMENT_GOODNESS, experiment_budget
from atompivot.synth import generate


def complete_graph(n):
    return new_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def disjoint_cliques(sizes):
    edges = []
    base = 0
    for size in sizes:
        edges += [(i, j) for i in range(base, base + size)
                  for j in range(i + 1, base + size)]
        base += size
    return new_graph(edges, base)


def random_graph(n, p, rng):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return new_graph(edges, n)


GP = EXPERIMENT_GOODNESS


class TestAtomPivot:
    def test_disjoint_cliques_recovered_at_zero_cost(self):
        g = disjoint_cliques([20, 20, 20])
        g.enable_dense_index()
        for seed in range(5):
            clustering, steps = run_atom_pivot(
                g, GP, np.random.default_rng(seed), budget_fn=experiment_budget
            )
            assert g.clustering_cost(clustering) == 0
            assert sum(s.alg_cost for s in steps) == 0

    def test_all_isolated_vertices_become_singletons(self):
        g = new_graph([], 8)
        clustering, steps = run_atom_pivot(
            g, GP, np.random.default_rng(0), budget_fn=experiment_budget
        )
        assert len(clustering) == 8
        assert sum(s.alg_cost for s in steps) == 0

    def test_accounting_identity_on_random_graphs(self):
        rng = np.random.default_rng(1)
        for seed in range(20):
            g = random_graph(int(rng.integers(2, 25)), rng.uniform(0.1, 0.9), rng)
            clustering, steps = run_atom_pivot(
                g, GP, np.random.default_rng(seed), budget_fn=experiment_budget
            )
            assert sum(s.alg_cost for s in steps) == g.clustering_cost(clustering)

    def test_determinism(self):
        inst = generate(120, 4, 0.01, seed=5)
        inst.graph.enable_dense_index()
        runs = [
            run_atom_pivot(inst.graph, GP, np.random.default_rng(33),
                           budget_fn=experiment_budget)[0].canonical()
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_caller_graph_untouched(self):
        g = disjoint_cliques([5, 5])
        run_atom_pivot(g, GP, np.random.default_rng(0), budget_fn=experiment_budget)
        assert g.n == 10

    def test_invalid_goodness_rejected(self):
        # reported bound lands above 1/6
        bad = GoodnessParams(eps=0.05, delta=0.01, gamma=0.01)
        with pytest.raises(ValueError):
            run_atom_pivot(complete_graph(4), bad, np.random.default_rng(0))

    def test_output_partitions_vertices(self):
        rng = np.random.default_rng(2)
        for seed in range(10):
            n = int(rng.integers(1, 30))
            g = random_graph(n, rng.uniform(0, 1), rng)
            clustering, _ = run_atom_pivot(
                g, GP, np.random.default_rng(seed), budget_fn=experiment_budget
            )
            assert clustering.vertex_set() == set(range(n))

    def test_planted_instance_tracked_within_factor_two(self):
        from atompivot.synth import planted_cost

        inst = generate(300, 3, 0.001, seed=9)
        inst.graph.enable_dense_index()
        clustering, _ = run_atom_pivot(
            inst.graph, GP, np.random.default_rng(0), budget_fn=experiment_budget
        )
        cost = inst.graph.clustering_cost(clustering)
        base = planted_cost(inst)
        assert cost <= 2 * max(base, 1)

    def test_summary_counts_steps(self):
        inst = generate(150, 3, 0.005, seed=11)
        inst.graph.enable_dense_index()
        clustering, steps, summary = run_with_summary(
            inst.graph, GP, np.random.default_rng(3), "atom_pivot",
            budget_fn=experiment_budget,
        )
        assert summary.atom_steps + summary.pivot_steps == len(steps)
        assert summary.atom_steps >= 3  # the planted cliques
        assert summary.total_cost == inst.graph.clustering_cost(clustering)
        assert summary.check_calls > 0
        assert summary.enqueued_copies > 0


class TestAtomOnly:
    def test_disjoint_cliques_recovered(self):
        g = disjoint_cliques([15, 15])
        g.enable_dense_index()
        clustering = run_atom_only(g, GP, np.random.default_rng(0),
                                   budget_fn=experiment_budget)
        assert g.clustering_cost(clustering) == 0
        assert clustering.canonical() == (tuple(range(15)), tuple(range(15, 30)))

    def test_path_graph_falls_back_to_singletons(self):
        n = 30
        g = new_graph([(i, i + 1) for i in range(n - 1)], n)
        steps = []
        clustering = run_atom_only(g, GP, np.random.default_rng(1),
                                   budget_fn=experiment_budget, steps=steps)
        assert len(clustering) == n
        assert g.clustering_cost(clustering) == g.m0
        assert sum(s.alg_cost for s in steps) == g.m0

    def test_accounting_identity(self):
        rng = np.random.default_rng(4)
        for seed in range(10):
            g = random_graph(int(rng.integers(2, 25)), rng.uniform(0.1, 0.9), rng)
            steps = []
            clustering = run_atom_only(
                g, GP, np.random.default_rng(seed),
                budget_fn=experiment_budget, steps=steps,
            )
            assert sum(s.alg_cost for s in steps) == g.clustering_cost(clustering)

    def test_determinism(self):
        inst = generate(100, 4, 0.02, seed=6)
        inst.graph.enable_dense_index()
        runs = [
            run_atom_only(inst.graph, GP, np.random.default_rng(77),
                          budget_fn=experiment_budget).canonical()
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_unknown_algorithm_rejected(self):
        with pytest.raises(ValueError):
            run_with_summary(complete_graph(3), GP, np.random.default_rng(0), "magic")
