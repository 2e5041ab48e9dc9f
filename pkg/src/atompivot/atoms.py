"""Dynamic near-clique detection driven by a multiset of vertex copies.

Every vertex is seeded with copies proportional to log n; each boundary-edge
deletion enqueues more copies of the surviving endpoint ("hits").  Popping a
copy triggers the sampling check and, on success, the clean filter.  Across
a whole deletion sequence the total number of copies, and hence of check
calls, stays within O(m log n).
"""

from __future__ import annotations

import enum
import logging
import math
from typing import Callable

import numpy as np

from .goodness import (
    CheckBudget,
    CleanParams,
    GoodnessParams,
    check,
    clean,
    derive_clean_params,
    guarantee_budget,
)
from .graph import Graph

log = logging.getLogger(__name__)


def _clamped_log(d: int, delta: float) -> float:
    # the raw log is useless for d <= e(1+delta); tiny-degree checks are O(1)
    # anyway, so over-enqueueing there is harmless
    return max(1.0, math.log(d / (1 + delta)))


def initial_copies(d: int, n: int, delta: float) -> int:
    """Copies seeded per vertex: ceil(2(1+delta) ln n / ln(d/(1+delta))),
    with the denominator clamped to at least 1."""
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return math.ceil(2 * (1 + delta) * math.log(n) / _clamped_log(d, delta))


def hit_copies(d_after: int, n: int, delta: float) -> int:
    """Copies enqueued per boundary-edge deletion, at the degree right after
    that deletion: ceil(2(1+delta) ln n / (delta d ln(d/(1+delta)))), with the
    log factor clamped to at least 1."""
    if d_after < 1:
        raise ValueError(f"degree must be >= 1, got {d_after}")
    return math.ceil(
        2 * (1 + delta) * math.log(n) / (delta * d_after * _clamped_log(d_after, delta))
    )


class CopyQueue:
    """Multiset of vertex copies with LIFO pop order."""

    def __init__(self):
        self._stack: list[int] = []

    def push(self, v: int, count: int) -> None:
        if count < 0:
            raise ValueError(f"negative multiplicity {count}")
        self._stack.extend([v] * count)

    def pop(self) -> int:
        if not self._stack:
            raise IndexError("pop from empty copy queue")
        return self._stack.pop()

    def __len__(self) -> int:
        return len(self._stack)

    def __bool__(self) -> bool:
        return bool(self._stack)


class PopStatus(enum.Enum):
    FOUND = "found"
    POPPED = "popped"
    QUEUE_EMPTY = "queue_empty"


class AtomFinder:
    """Reports well-knit clusters of one graph as its vertices are deleted.

    Bound to a single Graph instance; mutated only between graph mutations.
    Copies of deleted vertices are skipped lazily at pop time rather than
    purged, which keeps the work budget linear in the copies ever enqueued.

    budget_fn maps a current degree to the CheckBudget for one check call;
    by default the guarantee budget (per-call error <= 1/d^2) is used.
    """

    def __init__(
        self,
        graph: Graph,
        params: GoodnessParams,
        budget_fn: Callable[[int], CheckBudget] | None = None,
        short_circuit: bool = False,
    ):
        self.graph = graph
        self.params = params
        self.clean_params: CleanParams = derive_clean_params(params)
        self.queue = CopyQueue()
        self.log_n = math.log(graph.n0)
        self.budget_fn = budget_fn
        self.short_circuit = short_circuit
        # work counters
        self.total_enqueued = 0
        self.check_calls = 0
        self.check_draws = 0
        self.clean_calls = 0

    def seed_initial_copies(self) -> None:
        """Enqueue the per-vertex starting copies, in vertex order."""
        n0 = self.graph.n0
        delta = self.params.delta
        for v in sorted(self.graph.live):
            self._push(v, initial_copies(self.graph.degree(v), n0, delta))

    def _push(self, v: int, count: int) -> None:
        self.queue.push(v, count)
        self.total_enqueued += count

    def _budget(self, degree: int) -> CheckBudget:
        if self.budget_fn is not None:
            return self.budget_fn(degree)
        return guarantee_budget(self.clean_params, self.params.gamma, degree)

    def on_cluster_removed(self, boundary_events: list[tuple[int, int]]) -> None:
        """Enqueue hit copies for each boundary-edge deletion event."""
        n0 = self.graph.n0
        delta = self.params.delta
        for v, degree_after in boundary_events:
            self._push(v, hit_copies(degree_after, n0, delta))

    def try_report(self, rng: np.random.Generator) -> tuple[PopStatus, set[int] | None]:
        """Pop one copy and attempt to report a cluster around it.

        Returns (FOUND, cluster) when check passes and clean is nonempty,
        (POPPED, None) when the copy was dead or yielded no cluster, and
        (QUEUE_EMPTY, None) when there are no copies left, which certifies
        the absence of very good clusters.
        """
        if not self.queue:
            return (PopStatus.QUEUE_EMPTY, None)
        v = self.queue.pop()
        if not self.graph.is_live(v):
            if log.isEnabledFor(logging.DEBUG):
                log.debug("pop v=%d dead", v)
            return (PopStatus.POPPED, None)
        degree = self.graph.degree(v)
        budget = self._budget(degree)
        self.check_calls += 1
        self.check_draws += budget.eta * (1 + budget.eta_prime)
        passed = check(
            self.graph,
            v,
            self.clean_params,
            self.params.gamma,
            rng,
            budget=budget,
            short_circuit=self.short_circuit,
        )
        if not passed:
            if log.isEnabledFor(logging.DEBUG):
                log.debug("pop v=%d d=%d check=False", v, degree)
            return (PopStatus.POPPED, None)
        self.clean_calls += 1
        cluster = clean(self.graph, self.graph.neighbors(v), self.clean_params)
        if not cluster:
            if log.isEnabledFor(logging.DEBUG):
                log.debug("pop v=%d d=%d check=True clean=empty", v, degree)
            return (PopStatus.POPPED, None)
        if log.isEnabledFor(logging.DEBUG):
            log.debug("pop v=%d d=%d report |K|=%d", v, degree, len(cluster))
        return (PopStatus.FOUND, cluster)
