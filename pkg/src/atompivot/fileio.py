"""Text formats for graphs and clusterings.

Edge list: first line ``n m``, then m lines ``u v`` with 0-indexed endpoints,
canonicalized to u < v on write.  Clustering: n lines ``vertex cluster_id``.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Clustering, Graph, new_graph


def write_edgelist(g: Graph, path) -> None:
    edges = list(g.edges())
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    Path(path).write_text("\n".join(lines) + "\n")


def read_edgelist(path) -> Graph:
    tokens = Path(path).read_text().split()
    if len(tokens) < 2:
        raise ValueError(f"{path}: missing header")
    n, m = int(tokens[0]), int(tokens[1])
    if len(tokens) != 2 + 2 * m:
        raise ValueError(f"{path}: expected {m} edges, found {(len(tokens) - 2) // 2}")
    it = iter(tokens[2:])
    edges = [(int(u), int(v)) for u, v in zip(it, it)]
    return new_graph(edges, n)


def write_clustering(clustering: Clustering, path) -> None:
    lines = [f"{v} {c}" for v, c in sorted(clustering.assignment.items())]
    Path(path).write_text("\n".join(lines) + "\n")


def read_clustering(path) -> Clustering:
    assignment: dict[int, int] = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line:
            continue
        v, c = line.split()
        assignment[int(v)] = int(c)
    if not assignment:
        raise ValueError(f"{path}: empty clustering")
    return Clustering.from_assignment(assignment)
