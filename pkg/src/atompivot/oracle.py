"""Exact small-instance solvers used as ground truth.

exact_opt enumerates all set partitions (restricted-growth strings), so it
is limited to n <= 12.  exact_pivot_expectation runs a memoized recursion
over the 2^n subsets of vertices and returns an exact rational.
"""

from __future__ import annotations

from fractions import Fraction

from .graph import Clustering, Graph

MAX_OPT_N = 12
MAX_PIVOT_N = 14


def _partitions(n: int):
    """Yield all partitions of range(n) as lists of lists, via RGS."""
    if n == 0:
        yield []
        return
    labels = [0] * n
    maxes = [0] * n
    while True:
        blocks: dict[int, list[int]] = {}
        for v, c in enumerate(labels):
            blocks.setdefault(c, []).append(v)
        yield [blocks[c] for c in sorted(blocks)]
        # next restricted-growth string
        i = n - 1
        while i > 0 and labels[i] == maxes[i - 1] + 1:
            i -= 1
        if i == 0:
            return
        labels[i] += 1
        maxes[i] = max(maxes[i - 1], labels[i])
        for j in range(i + 1, n):
            labels[j] = 0
            maxes[j] = maxes[i]


def exact_opt(g: Graph) -> tuple[Clustering, int]:
    """Minimum-disagreement clustering by exhaustive partition search."""
    vertices = sorted(g.live)
    n = len(vertices)
    if n > MAX_OPT_N:
        raise ValueError(f"exact_opt limited to n <= {MAX_OPT_N}, got {n}")
    if n == 0:
        return Clustering.from_clusters([]), 0
    adj = [g.neighbors(v) for v in vertices]
    best_cost = None
    best_blocks = None
    for blocks in _partitions(n):
        cost = 0
        label = [0] * n
        for c, block in enumerate(blocks):
            for i in block:
                label[i] = c
            # non-adjacent pairs inside the block
            for a in range(len(block)):
                for b in range(a + 1, len(block)):
                    if vertices[block[b]] not in adj[block[a]]:
                        cost += 1
        for i in range(n):
            for j in range(i + 1, n):
                if label[i] != label[j] and vertices[j] in adj[i]:
                    cost += 1
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_blocks = blocks
    clustering = Clustering.from_clusters(
        [{vertices[i] for i in block} for block in best_blocks]
    )
    return clustering, best_cost


def exact_pivot_expectation(g: Graph) -> Fraction:
    """Expected pivot-process cost over uniform pivot choices, exact.

    E[S] = avg over v in S of step_cost(N(v) & S within S) + E[S minus that
    cluster]; the step cost counts non-edges inside the cluster plus edges
    from the cluster to the rest of S, all in the subgraph induced by S.
    """
    vertices = sorted(g.live)
    n = len(vertices)
    if n > MAX_PIVOT_N:
        raise ValueError(f"exact_pivot_expectation limited to n <= {MAX_PIVOT_N}, got {n}")
    index = {v: i for i, v in enumerate(vertices)}
    adj_mask = [0] * n
    for v in vertices:
        mask = 0
        for u in g.neighbors(v):
            mask |= 1 << index[u]
        adj_mask[index[v]] = mask

    memo: dict[int, Fraction] = {0: Fraction(0)}

    def solve(s: int) -> Fraction:
        cached = memo.get(s)
        if cached is not None:
            return cached
        total = Fraction(0)
        count = 0
        rest = s
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            cluster = adj_mask[v] & s
            outside = s & ~cluster
            internal_edges = 0
            boundary = 0
            cbits = cluster
            while cbits:
                ul = cbits & -cbits
                u = ul.bit_length() - 1
                cbits ^= ul
                internal_edges += (adj_mask[u] & cluster).bit_count() - 1
                boundary += (adj_mask[u] & outside).bit_count()
            internal_edges //= 2
            size = cluster.bit_count()
            step = (size * (size - 1) // 2 - internal_edges) + boundary
            total += step + solve(outside)
            count += 1
        result = total / count
        memo[s] = result
        return result

    return solve((1 << n) - 1)
