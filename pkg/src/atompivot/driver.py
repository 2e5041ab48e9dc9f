"""Driver loops: the merged algorithm and the detection-only baseline.

The merged loop pops one copy per iteration while the queue is nonempty.  A
found cluster is expanded, rounded, and removed; a pop that yields nothing
removes nothing.  Only when the queue is empty does a uniform pivot step
fire.  Every removal feeds its boundary events back into the finder.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .atoms import AtomFinder, PopStatus
from .goodness import CheckBudget, GoodnessParams, reported_goodness_bound
from .graph import Clustering, Graph, StepAccounting
from .pivot import pivot_step
from .rounding import expand, sample_cluster

EXPANSION_LIMIT = 1 / 6


@dataclass
class RunSummary:
    """Rollup of one driver run, for the harness and the work-budget checks."""

    algorithm: str
    total_cost: int
    atom_steps: int
    pivot_steps: int
    wall_ms: float
    enqueued_copies: int = 0
    check_calls: int = 0
    check_sample_budget: int = 0
    clean_calls: int = 0

    @property
    def steps(self) -> int:
        return self.atom_steps + self.pivot_steps


def _validate(gp: GoodnessParams) -> float:
    eps_prime = reported_goodness_bound(gp)
    if eps_prime >= EXPANSION_LIMIT:
        raise ValueError(
            f"reported goodness bound {eps_prime:.5f} is not below 1/6; "
            "pick smaller eps/delta/gamma"
        )
    return eps_prime


def run_atom_pivot(
    g: Graph,
    gp: GoodnessParams,
    rng: np.random.Generator,
    budget_fn: Callable[[int], CheckBudget] | None = None,
    short_circuit: bool = False,
) -> tuple[Clustering, list[StepAccounting]]:
    """Interleave cluster reports with pivot steps until the graph is empty.

    Operates on an internal copy of g.  Returns the clustering of the
    original vertex set and the per-removal accounting; the accounted costs
    sum to the clustering's disagreement cost on the input graph.
    """
    clustering, steps, _ = run_with_summary(
        g, gp, rng, "atom_pivot", budget_fn=budget_fn, short_circuit=short_circuit
    )
    return clustering, steps


def run_atom_only(
    g: Graph,
    gp: GoodnessParams,
    rng: np.random.Generator,
    budget_fn: Callable[[int], CheckBudget] | None = None,
    short_circuit: bool = False,
    steps: list[StepAccounting] | None = None,
) -> Clustering:
    """Remove reported clusters as-is; leftovers become singletons.

    No expansion, no rounding, no pivot fallback.  When the copy queue
    empties, every remaining vertex forms its own cluster.
    """
    clustering, collected, _ = run_with_summary(
        g, gp, rng, "atom", budget_fn=budget_fn, short_circuit=short_circuit
    )
    if steps is not None:
        steps.extend(collected)
    return clustering


def run_with_summary(
    g: Graph,
    gp: GoodnessParams,
    rng: np.random.Generator,
    algorithm: str,
    budget_fn: Callable[[int], CheckBudget] | None = None,
    short_circuit: bool = False,
) -> tuple[Clustering, list[StepAccounting], RunSummary]:
    """Run `atom_pivot` or `atom` on a copy of g, with full accounting."""
    if algorithm not in ("atom_pivot", "atom"):
        raise ValueError(f"unknown algorithm {algorithm!r}")
    eps_prime = _validate(gp)
    started = time.perf_counter()
    work = g.copy()
    finder = AtomFinder(work, gp, budget_fn=budget_fn, short_circuit=short_circuit)
    finder.seed_initial_copies()

    clusters: list[set[int]] = []
    steps: list[StepAccounting] = []
    atom_steps = 0
    pivot_steps = 0

    def remove(cluster: set[int]) -> None:
        steps.append(work.step_cost(cluster))
        events = work.remove_cluster(cluster)
        finder.on_cluster_removed(events)
        clusters.append(cluster)

    while work.n > 0:
        status, reported = finder.try_report(rng)
        if status is PopStatus.FOUND:
            if algorithm == "atom_pivot":
                grown = expand(work, reported, eps_prime)
                remove(sample_cluster(work, grown, rng))
            else:
                remove(reported)
            atom_steps += 1
        elif status is PopStatus.QUEUE_EMPTY:
            if algorithm == "atom_pivot":
                remove(pivot_step(work, rng))
                pivot_steps += 1
            else:
                # terminal sweep, the finder is done watching
                for v in sorted(work.live):
                    singleton = {v}
                    steps.append(work.step_cost(singleton))
                    work.remove_cluster(singleton)
                    clusters.append(singleton)
        # POPPED: nothing was removed, so nothing is re-enqueued either

    clustering = Clustering.from_clusters(clusters)
    summary = RunSummary(
        algorithm=algorithm,
        total_cost=sum(s.alg_cost for s in steps),
        atom_steps=atom_steps,
        pivot_steps=pivot_steps,
        wall_ms=(time.perf_counter() - started) * 1e3,
        enqueued_copies=finder.total_enqueued,
        check_calls=finder.check_calls,
        check_sample_budget=finder.check_draws,
        clean_calls=finder.clean_calls,
    )
    return clustering, steps, summary
