"""Mutable undirected graph with closed neighborhoods and disagreement accounting.

Every vertex is a member of its own neighborhood, so degree(v) counts v
itself and is at least 1 for a live vertex.  Edges are only ever removed;
vertex ids are dense integers assigned at construction and never reused.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class DeadVertexError(KeyError):
    """Raised when an operation touches a vertex that has been removed."""


@dataclass(frozen=True)
class StepAccounting:
    """Cost charged for removing one cluster, measured just before removal.

    alg_cost counts the non-adjacent pairs inside the removed cluster plus
    the edges from the cluster to the rest of the graph.
    """

    alg_cost: int
    removed_cluster: frozenset[int]


@dataclass
class Clustering:
    """A partition of a vertex set into clusters."""

    clusters: list[frozenset[int]]
    assignment: dict[int, int] = field(repr=False, default_factory=dict)

    @classmethod
    def from_clusters(cls, clusters) -> "Clustering":
        out = []
        assignment: dict[int, int] = {}
        for idx, cluster in enumerate(clusters):
            fs = frozenset(cluster)
            if not fs:
                raise ValueError("empty cluster")
            for v in fs:
                if v in assignment:
                    raise ValueError(f"vertex {v} assigned twice")
                assignment[v] = idx
            out.append(fs)
        return cls(clusters=out, assignment=assignment)

    @classmethod
    def from_assignment(cls, assignment: dict[int, int]) -> "Clustering":
        by_label: dict[int, set[int]] = {}
        for v, label in assignment.items():
            by_label.setdefault(label, set()).add(v)
        return cls.from_clusters(by_label[k] for k in sorted(by_label))

    def vertex_set(self) -> set[int]:
        return set(self.assignment)

    def canonical(self) -> tuple[tuple[int, ...], ...]:
        """Order-independent form, for equality checks in tests."""
        return tuple(sorted(tuple(sorted(c)) for c in self.clusters))

    def __len__(self) -> int:
        return len(self.clusters)


class Graph:
    """Adjacency-set graph supporting cluster deletion with boundary events.

    The adjacency sets are closed (v is in adj[v]).  Mutation is limited to
    remove_cluster; a Graph instance is single-writer, and read-only sharing
    between mutations is safe.
    """

    def __init__(self, adjacency: dict[int, set[int]], n0: int, m0: int):
        self.adj = adjacency
        self.n0 = n0
        self.m0 = m0
        self._m = m0
        self._dense: np.ndarray | None = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edges(cls, edges, n: int) -> "Graph":
        adjacency = {v: {v} for v in range(n)}
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range [0, {n})")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v not in adjacency[u]:
                adjacency[u].add(v)
                adjacency[v].add(u)
                m += 1
        return cls(adjacency, n0=n, m0=m)

    def copy(self) -> "Graph":
        g = Graph({v: set(nbrs) for v, nbrs in self.adj.items()}, self.n0, self.m0)
        g._m = self._m
        if self._dense is not None:
            g._dense = self._dense.copy()
        return g

    # -- queries -----------------------------------------------------------

    @property
    def live(self):
        return self.adj.keys()

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        """Current number of edges (self-membership not counted)."""
        return self._m

    def is_live(self, v: int) -> bool:
        return v in self.adj

    def degree(self, v: int) -> int:
        """Closed degree: number of neighbors including v itself."""
        try:
            return len(self.adj[v])
        except KeyError:
            raise DeadVertexError(v) from None

    def neighbors(self, v: int) -> set[int]:
        """Closed neighborhood of v.  Returned set must not be mutated."""
        try:
            return self.adj[v]
        except KeyError:
            raise DeadVertexError(v) from None

    def edges(self):
        """Iterate current edges as (u, v) with u < v."""
        for u in sorted(self.adj):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    # -- dense index -------------------------------------------------------

    def enable_dense_index(self) -> np.ndarray:
        """Build (or return) an n0 x n0 boolean adjacency matrix.

        The matrix mirrors the closed adjacency sets and is kept in sync by
        remove_cluster.  Intended for vectorized neighborhood sampling; costs
        n0^2 bytes, so only suitable for graphs that fit such a table.
        """
        if self._dense is None:
            dense = np.zeros((self.n0, self.n0), dtype=bool)
            for v, nbrs in self.adj.items():
                dense[v, list(nbrs)] = True
            self._dense = dense
        return self._dense

    @property
    def dense_index(self) -> np.ndarray | None:
        return self._dense

    # -- set arithmetic ----------------------------------------------------

    def intersection_size(self, members: set[int], other: set[int]) -> int:
        """|members & other|, iterating the smaller set."""
        if len(members) > len(other):
            members, other = other, members
        return sum(1 for x in members if x in other)

    def symmetric_difference_size(self, a: int, b: int) -> int:
        """|N(a) symdiff N(b)| for live vertices a, b."""
        na, nb = self.neighbors(a), self.neighbors(b)
        return len(na) + len(nb) - 2 * self.intersection_size(na, nb)

    def cluster_symmetric_difference(self, v: int, cluster: set[int]) -> int:
        """|N(v) symdiff C| for a live vertex v and a set C of live vertices."""
        for u in cluster:
            if u not in self.adj:
                raise DeadVertexError(u)
        nv = self.neighbors(v)
        return len(nv) + len(cluster) - 2 * self.intersection_size(nv, cluster)

    # -- disagreement accounting --------------------------------------------

    def _internal_edges(self, cluster) -> int:
        # closed sets: |N(u) & C| counts u itself, subtract it per member
        total = 0
        for u in cluster:
            total += self.intersection_size(self.adj[u], cluster) - 1
        return total // 2

    def clustering_cost(self, clustering: Clustering) -> int:
        """Edges across clusters plus non-adjacent pairs inside clusters."""
        assigned = clustering.assignment
        for v in self.adj:
            if v not in assigned:
                raise ValueError(f"assignment missing live vertex {v}")
        if len(assigned) != len(self.adj):
            extra = set(assigned) - set(self.adj)
            raise ValueError(f"assignment covers dead vertices: {sorted(extra)[:5]}")
        internal_edges = 0
        internal_pairs = 0
        for cluster in clustering.clusters:
            size = len(cluster)
            internal_pairs += size * (size - 1) // 2
            internal_edges += self._internal_edges(cluster)
        cross_edges = self._m - internal_edges
        return (internal_pairs - internal_edges) + cross_edges

    def step_cost(self, cluster: set[int]) -> StepAccounting:
        """Cost of removing cluster now: internal non-edges plus boundary edges."""
        if not cluster:
            raise ValueError("empty cluster")
        internal_edges = 0
        boundary = 0
        for u in cluster:
            inside = self.intersection_size(self.adj[u], cluster)
            internal_edges += inside - 1
            boundary += len(self.adj[u]) - inside
        internal_edges //= 2
        size = len(cluster)
        cost = (size * (size - 1) // 2 - internal_edges) + boundary
        return StepAccounting(alg_cost=cost, removed_cluster=frozenset(cluster))

    # -- mutation ------------------------------------------------------------

    def remove_cluster(self, cluster: set[int]) -> list[tuple[int, int]]:
        """Delete the cluster's vertices and incident edges.

        Returns one (outside_vertex, degree_after) event per boundary edge,
        where degree_after is the outside endpoint's closed degree right
        after that particular edge deletion.  Events are emitted in sorted
        order of the inside endpoint, then of the outside endpoint.
        """
        members = sorted(cluster)
        for u in members:
            if u not in self.adj:
                raise DeadVertexError(u)
        events: list[tuple[int, int]] = []
        processed: set[int] = set()
        for u in members:
            for v in sorted(self.adj[u]):
                if v == u:
                    continue
                if v in cluster:
                    if v not in processed:
                        self._m -= 1
                else:
                    self.adj[v].discard(u)
                    self._m -= 1
                    events.append((v, len(self.adj[v])))
            processed.add(u)
            del self.adj[u]
        if self._dense is not None:
            self._dense[members, :] = False
            self._dense[:, members] = False
        return events

    def check_invariants(self) -> None:
        """Full-scan symmetry and reflexivity assertion, for tests."""
        for v, nbrs in self.adj.items():
            assert v in nbrs, f"{v} missing from its own neighborhood"
            for u in nbrs:
                if u != v:
                    assert u in self.adj, f"dead neighbor {u} of {v}"
                    assert v in self.adj[u], f"asymmetric edge ({v}, {u})"


def new_graph(edges, n: int) -> Graph:
    """Build a graph on vertices [0, n) from an edge list, ignoring duplicates."""
    return Graph.from_edges(edges, n)
