import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atompivot import Clustering, DeadVertexError, new_graph


def complete_graph(n):
    return new_graph([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def brute_force_cost(g, clustering):
    """Independent O(n^2) pair scan over the live vertices."""
    vertices = sorted(g.live)
    label = clustering.assignment
    cost = 0
    for i, u in enumerate(vertices):
        for v in vertices[i + 1 :]:
            adjacent = v in g.neighbors(u)
            same = label[u] == label[v]
            if adjacent != same:
                cost += 1
    return cost


def random_graph(n, p, rng):
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return new_graph(edges, n)


class TestConstruction:
    def test_isolated_vertices_have_closed_degree_one(self):
        g = new_graph([], 3)
        assert all(g.degree(v) == 1 for v in range(3))
        assert g.m == 0

    def test_path_degrees(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        assert g.degree(1) == 3
        assert g.degree(0) == g.degree(2) == 2

    def test_k4_minus_matching_degrees(self):
        g = new_graph([(0, 2), (0, 3), (1, 2), (1, 3)], 4)
        assert [g.degree(v) for v in range(4)] == [3, 3, 3, 3]
        assert g.m0 == 4

    def test_duplicate_edges_deduplicated(self):
        g = new_graph([(0, 1), (1, 0), (0, 1)], 2)
        assert g.m0 == 1

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            new_graph([(0, 5)], 3)

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            new_graph([(1, 1)], 3)


class TestSymmetricDifference:
    def test_twins_in_clique(self):
        g = complete_graph(4)
        assert g.symmetric_difference_size(0, 1) == 0

    def test_path_endpoints(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        assert g.symmetric_difference_size(0, 2) == 2
        assert g.symmetric_difference_size(0, 1) == 1

    def test_dead_vertex_raises(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        g.remove_cluster({0})
        with pytest.raises(DeadVertexError):
            g.symmetric_difference_size(0, 1)


class TestClusterSymmetricDifference:
    def test_member_of_clique(self):
        g = complete_graph(4)
        assert g.cluster_symmetric_difference(0, {0, 1, 2, 3}) == 0

    def test_k4_missing_edge(self):
        g = new_graph([(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4)
        assert g.cluster_symmetric_difference(0, {0, 1, 2, 3}) == 1

    def test_disjoint_vertex(self):
        # isolated v against a set of size k: k+1 if v outside, k-1 if inside
        g = new_graph([(1, 2), (1, 3), (2, 3)], 5)
        assert g.cluster_symmetric_difference(0, {1, 2, 3}) == 4
        assert g.cluster_symmetric_difference(0, {0, 1, 2}) == 2

    def test_dead_member_raises(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        g.remove_cluster({2})
        with pytest.raises(DeadVertexError):
            g.cluster_symmetric_difference(0, {0, 1, 2})


class TestClusteringCost:
    def test_triangle_single_cluster(self):
        g = complete_graph(3)
        assert g.clustering_cost(Clustering.from_clusters([{0, 1, 2}])) == 0

    @pytest.mark.parametrize(
        "clusters,expected",
        [([{0, 1, 2}], 1), ([{0, 1}, {2}], 1), ([{0}, {1}, {2}], 2)],
    )
    def test_path_clusterings(self, clusters, expected):
        g = new_graph([(0, 1), (1, 2)], 3)
        assert g.clustering_cost(Clustering.from_clusters(clusters)) == expected

    def test_k4_minus_matching_single_cluster(self):
        g = new_graph([(0, 2), (0, 3), (1, 2), (1, 3)], 4)
        assert g.clustering_cost(Clustering.from_clusters([{0, 1, 2, 3}])) == 2

    def test_missing_vertex_rejected(self):
        g = complete_graph(3)
        with pytest.raises(ValueError):
            g.clustering_cost(Clustering.from_clusters([{0, 1}]))

    def test_agrees_with_brute_force_on_random_graphs(self):
        rng = np.random.default_rng(11)
        for _ in range(60):
            n = int(rng.integers(1, 11))
            g = random_graph(n, rng.uniform(0, 1), rng)
            labels = {v: int(rng.integers(0, 3)) for v in range(n)}
            clustering = Clustering.from_assignment(labels)
            assert g.clustering_cost(clustering) == brute_force_cost(g, clustering)


class TestStepCost:
    def test_isolated_triangle_removed_whole(self):
        g = complete_graph(3)
        assert g.step_cost({0, 1, 2}).alg_cost == 0

    def test_path_center(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        assert g.step_cost({1}).alg_cost == 2

    def test_k4_minus_matching_three_set(self):
        g = new_graph([(0, 2), (0, 3), (1, 2), (1, 3)], 4)
        assert g.step_cost({0, 2, 3}).alg_cost == 3

    def test_empty_cluster_rejected(self):
        with pytest.raises(ValueError):
            complete_graph(3).step_cost(set())


class TestRemoveCluster:
    def test_path_center_events(self):
        g = new_graph([(0, 1), (1, 2)], 3)
        assert g.remove_cluster({1}) == [(0, 1), (2, 1)]
        assert sorted(g.live) == [0, 2]

    def test_isolated_clique_no_events(self):
        g = complete_graph(4)
        assert g.remove_cluster({0, 1, 2, 3}) == []
        assert g.n == 0 and g.m == 0

    def test_k4_vertex_events(self):
        g = complete_graph(4)
        assert g.remove_cluster({0}) == [(1, 3), (2, 3), (3, 3)]

    def test_successive_degrees_for_shared_neighbor(self):
        # removing {0, 1} from K4: vertex 2 and 3 each lose two edges
        g = complete_graph(4)
        events = g.remove_cluster({0, 1})
        assert events == [(2, 3), (3, 3), (2, 2), (3, 2)]

    def test_invariants_after_removal(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            n = int(rng.integers(2, 12))
            g = random_graph(n, rng.uniform(0.1, 0.9), rng)
            size = int(rng.integers(1, n + 1))
            cluster = set(rng.choice(n, size=size, replace=False).tolist())
            g.remove_cluster(cluster)
            g.check_invariants()
            assert g.m == sum(len(g.neighbors(v)) - 1 for v in g.live) // 2

    def test_dense_index_stays_in_sync(self):
        rng = np.random.default_rng(6)
        g = random_graph(9, 0.5, rng)
        dense = g.enable_dense_index()
        g.remove_cluster({0, 4})
        for v in range(9):
            for u in range(9):
                expected = g.is_live(v) and u in g.neighbors(v)
                assert dense[v, u] == expected


class TestSequentialAccounting:
    @given(st.integers(0, 2**32 - 1))
    @settings(max_examples=40, deadline=None)
    def test_step_costs_sum_to_clustering_cost(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(1, 13))
        g = random_graph(n, rng.uniform(0, 1), rng)
        work = g.copy()
        clusters = []
        total = 0
        while work.n > 0:
            live = sorted(work.live)
            size = int(rng.integers(1, len(live) + 1))
            cluster = set(rng.choice(live, size=size, replace=False).tolist())
            total += work.step_cost(cluster).alg_cost
            work.remove_cluster(cluster)
            clusters.append(cluster)
        clustering = Clustering.from_clusters(clusters)
        assert total == g.clustering_cost(clustering)


class TestMonotoneGoodness:
    def test_deleting_outside_vertex_never_worsens_a_cluster(self):
        rng = np.random.default_rng(13)
        for _ in range(30):
            n = int(rng.integers(3, 12))
            g = random_graph(n, rng.uniform(0.2, 0.9), rng)
            size = int(rng.integers(1, n))
            cluster = set(rng.choice(n, size=size, replace=False).tolist())
            outside = [v for v in g.live if v not in cluster]
            if not outside:
                continue
            before = sum(g.cluster_symmetric_difference(u, cluster) for u in cluster)
            g.remove_cluster({outside[0]})
            after = sum(g.cluster_symmetric_difference(u, cluster) for u in cluster)
            assert after <= before


class TestClustering:
    def test_overlapping_clusters_rejected(self):
        with pytest.raises(ValueError):
            Clustering.from_clusters([{0, 1}, {1, 2}])

    def test_canonical_is_order_independent(self):
        a = Clustering.from_clusters([{2, 1}, {0}])
        b = Clustering.from_clusters([{0}, {1, 2}])
        assert a.canonical() == b.canonical()
