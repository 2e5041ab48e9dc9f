"""Expand a well-knit cluster and round its fringe into the removed cluster.

For a vertex v outside the cluster K, alpha_v = |N(v) \\ K| / |K| and
beta_v = |N(v) & K| / |K|.  Expansion absorbs every v whose attachment
satisfies beta_v > 1 - beta_v + alpha_v + 2 eps', recomputed against the
growing set; afterwards each remaining neighbor of K is included in the
output cluster independently with probability beta_v / (1 + alpha_v).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

#: Absolute slack on the expansion condition margin, absorbing the floating
#: point evaluation of eps'; the attachment counts themselves are exact.
CONDITION_TOLERANCE = 1e-12


@dataclass(frozen=True)
class VertexAffinity:
    """Attachment of one outside vertex to a cluster."""

    alpha_v: float
    beta_v: float
    p_v: float


def affinity(g: Graph, cluster: set[int], v: int) -> VertexAffinity:
    """Attachment fractions of a live vertex v not in the cluster."""
    if v in cluster:
        raise ValueError(f"vertex {v} is in the cluster")
    if not cluster:
        raise ValueError("empty cluster")
    size = len(cluster)
    inside = g.intersection_size(g.neighbors(v), cluster)
    beta_v = inside / size
    alpha_v = (g.degree(v) - inside) / size
    return VertexAffinity(alpha_v=alpha_v, beta_v=beta_v, p_v=beta_v / (1 + alpha_v))


def _insertable(inside: int, degree: int, size: int, eps_prime: float) -> bool:
    # beta > 1 - beta + alpha + 2 eps'  <=>  3*inside - degree - size > 2 eps' * size
    return 3 * inside - degree - size > (2 * eps_prime + CONDITION_TOLERANCE) * size


def expand(g: Graph, cluster: set[int], eps_prime: float) -> set[int]:
    """Absorb strongly attached outside vertices until none qualify.

    Returns a new set; the input cluster is not mutated.  On return every
    outside vertex v satisfies 2 beta_v <= 1 + alpha_v + 2 eps'.
    """
    if eps_prime >= 1 / 6:
        raise ValueError(f"expansion requires eps' < 1/6, got {eps_prime}")
    if not cluster:
        raise ValueError("empty cluster")
    grown = set(cluster)
    # inside-neighbor counts for the fringe, maintained incrementally
    inside: dict[int, int] = {}
    for u in grown:
        for w in g.neighbors(u):
            if w not in grown:
                inside[w] = inside.get(w, 0) + 1
    worklist = sorted(inside)
    while worklist:
        next_round: list[int] = []
        for v in worklist:
            if v in grown:
                continue
            if _insertable(inside[v], g.degree(v), len(grown), eps_prime):
                grown.add(v)
                del inside[v]
                for w in g.neighbors(v):
                    if w not in grown:
                        inside[w] = inside.get(w, 0) + 1
                        next_round.append(w)
        # growing |K| can only switch the condition off for non-neighbors, so
        # revisiting fresh neighbors of inserted vertices suffices
        worklist = sorted(set(next_round))
    return grown


def sample_cluster(
    g: Graph, expanded: set[int], rng: np.random.Generator
) -> set[int]:
    """Round the fringe: include each neighbor of the expanded cluster
    independently with probability beta_v / (1 + alpha_v).

    Vertices with no neighbor in the cluster have p_v = 0 and are never
    drawn, so the work is proportional to the cluster's incident edges.
    """
    size = len(expanded)
    if size == 0:
        raise ValueError("empty cluster")
    inside: dict[int, int] = {}
    for u in expanded:
        for w in g.neighbors(u):
            if w not in expanded:
                inside[w] = inside.get(w, 0) + 1
    out = set(expanded)
    for v in sorted(inside):
        count = inside[v]
        # p_v = beta/(1+alpha) = count / (size + degree - count)
        p_v = count / (size + g.degree(v) - count)
        if rng.random() < p_v:
            out.add(v)
    return out
