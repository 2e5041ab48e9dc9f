"""Correlation clustering toolkit: random pivoting merged with dynamic
near-clique detection, plus exact small-instance oracles, a planted-partition
generator, and a benchmark harness."""

from .atoms import AtomFinder, CopyQueue, PopStatus, hit_copies, initial_copies
from .driver import RunSummary, run_atom_only, run_atom_pivot, run_with_summary
from .goodness import (
    CheckBudget,
    CleanParams,
    DEFAULT_PARAMS,
    GoodnessParams,
    check,
    clean,
    clean_goodness_bound,
    derive_clean_params,
    guarantee_budget,
    is_good,
    is_good_on_average,
    pivot_ratio_bound,
    reported_goodness_bound,
    rounding_ratio_bound,
    vertex_is_good,
)
from .graph import Clustering, DeadVertexError, Graph, StepAccounting, new_graph
from .oracle import exact_opt, exact_pivot_expectation
from .pivot import pivot_step, run_pivot
from .rounding import VertexAffinity, affinity, expand, sample_cluster
from .synth import PlantedInstance, generate, planted_cost

__all__ = [
    "AtomFinder",
    "CheckBudget",
    "CleanParams",
    "Clustering",
    "CopyQueue",
    "DEFAULT_PARAMS",
    "DeadVertexError",
    "GoodnessParams",
    "Graph",
    "PlantedInstance",
    "PopStatus",
    "RunSummary",
    "StepAccounting",
    "VertexAffinity",
    "affinity",
    "check",
    "clean",
    "clean_goodness_bound",
    "derive_clean_params",
    "exact_opt",
    "exact_pivot_expectation",
    "expand",
    "generate",
    "guarantee_budget",
    "hit_copies",
    "initial_copies",
    "is_good",
    "is_good_on_average",
    "new_graph",
    "pivot_ratio_bound",
    "pivot_step",
    "planted_cost",
    "reported_goodness_bound",
    "rounding_ratio_bound",
    "run_atom_only",
    "run_atom_pivot",
    "run_pivot",
    "run_with_summary",
    "sample_cluster",
    "vertex_is_good",
]
