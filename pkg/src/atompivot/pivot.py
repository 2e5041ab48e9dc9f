"""The classic random-pivot step and the pivot baseline algorithm."""

from __future__ import annotations

import numpy as np

from .graph import Clustering, Graph, StepAccounting


def pivot_step(g: Graph, rng: np.random.Generator) -> set[int]:
    """Closed neighborhood of a pivot drawn uniformly from the live vertices.

    Does not mutate the graph.  Uses rejection sampling over the original id
    range; ids are dense, so the expected number of draws is n0 / n_live.
    """
    if g.n == 0:
        raise ValueError("pivot on empty graph")
    while True:
        p = int(rng.integers(0, g.n0))
        if g.is_live(p):
            return set(g.neighbors(p))


def run_pivot(
    g: Graph,
    rng: np.random.Generator,
    steps: list[StepAccounting] | None = None,
) -> Clustering:
    """Repeat pivot_step + remove_cluster until the graph is empty.

    Operates on an internal copy; the caller's graph is left untouched.
    Pass a list as `steps` to collect the per-step accounting.
    """
    work = g.copy()
    clusters = []
    while work.n > 0:
        cluster = pivot_step(work, rng)
        accounting = work.step_cost(cluster)
        work.remove_cluster(cluster)
        clusters.append(cluster)
        if steps is not None:
            steps.append(accounting)
    return Clustering.from_clusters(clusters)
