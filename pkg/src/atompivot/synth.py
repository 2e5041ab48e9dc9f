"""Planted-partition instances: disjoint cliques with independent pair flips.

Each vertex is assigned uniformly to one of k clusters, intra-cluster pairs
start as edges, and then every one of the C(n, 2) pairs is flipped
independently with probability eps_noise.  Pairs are visited in lexicographic
order with one Bernoulli draw each, so the same seed reproduces the instance
bit for bit and the generator can keep an exact flip counter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Clustering, Graph


@dataclass(frozen=True)
class PlantedInstance:
    graph: Graph
    planted: Clustering
    n: int
    k: int
    eps_noise: float
    seed: int
    flip_count: int


def generate(n: int, k: int, eps_noise: float, seed: int) -> PlantedInstance:
    """Draw a planted-partition instance.

    The assignment consumes k-sided draws first, then the pair flips consume
    one uniform each in lexicographic pair order.  Empty clusters are
    dropped from the planted clustering.
    """
    if n < 1 or k < 1:
        raise ValueError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if not (0 <= eps_noise <= 1):
        raise ValueError(f"eps_noise must be in [0, 1], got {eps_noise}")
    rng = np.random.default_rng(seed)
    assignment = rng.integers(0, k, size=n)
    if n >= 2:
        iu, iv = np.triu_indices(n, k=1)
        same = assignment[iu] == assignment[iv]
        flips = rng.random(len(iu)) < eps_noise
        present = same ^ flips
        edges = zip(iu[present].tolist(), iv[present].tolist())
        flip_count = int(flips.sum())
    else:
        edges = []
        flip_count = 0
    graph = Graph.from_edges(edges, n)
    clusters = [
        set(np.flatnonzero(assignment == c).tolist())
        for c in range(k)
        if (assignment == c).any()
    ]
    planted = Clustering.from_clusters(clusters)
    return PlantedInstance(
        graph=graph,
        planted=planted,
        n=n,
        k=k,
        eps_noise=eps_noise,
        seed=seed,
        flip_count=flip_count,
    )


def planted_cost(inst: PlantedInstance) -> int:
    """Disagreements of the noisy graph under the planted clustering.

    Equals the number of flipped pairs: a flipped intra pair is a missing
    edge inside a planted cluster, a flipped inter pair is an edge across.
    """
    return inst.graph.clustering_cost(inst.planted)
