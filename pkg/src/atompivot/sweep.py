"""Experiment sweep: run every algorithm across noise levels and seeds.

One cell is a (seed, eps) pair; all algorithms within a cell share the same
generated instance.  Per-cell random sources are derived by hashing the
master seed with the cell key, so records are identical no matter how cells
are scheduled, including across worker processes.
"""

from __future__ import annotations

import csv
import hashlib
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from io import StringIO
from pathlib import Path

import numpy as np

from .driver import run_with_summary
from .goodness import CheckBudget, GoodnessParams
from .pivot import run_pivot
from .synth import generate, planted_cost

ALGORITHMS = ("pivot", "atom", "atom_pivot", "planted")

CSV_HEADER = ["seed", "eps", "algo", "cost", "wall_ms", "atom_steps", "pivot_steps"]

#: Goodness parameters used for experiment sweeps.  The guarantee-grade
#: defaults make the sampling budgets and per-hit copy counts astronomically
#: large (tiny delta and gamma enter the formulas inversely), so sweeps run
#: with this profile: the reported-goodness bound stays below 1/6 while the
#: copy counts stay near one per boundary edge at experiment degrees.
EXPERIMENT_GOODNESS = GoodnessParams(eps=0.002, delta=0.04, gamma=0.09)


def experiment_budget(degree: int) -> CheckBudget:
    """Reduced sampling budget for experiment-scale runs.

    Keeps the outer count logarithmic in the degree and the inner count
    fixed; large enough to separate near-clique neighborhoods from noise at
    planted-partition scales, far below the guarantee-grade budget.
    """
    eta = math.ceil(6.0 * math.log(degree)) if degree > 1 else 0
    return CheckBudget(eta=eta, eta_prime=500)


def format_eps(eps: float) -> str:
    return f"{eps:.10g}"


@dataclass(frozen=True)
class SweepRecord:
    seed: int
    eps_noise: float
    algorithm: str
    cost: int
    wall_ms: float
    atom_steps: int
    pivot_steps: int

    def sort_key(self):
        return (self.seed, self.eps_noise, self.algorithm)


@dataclass
class SweepConfig:
    n: int = 1000
    k: int = 10
    eps_grid: list[float] = field(default_factory=lambda: default_eps_grid())
    seeds: list[int] = field(default_factory=lambda: [0])
    goodness: GoodnessParams = EXPERIMENT_GOODNESS
    jobs: int = 1
    out_csv: str | None = None

    def __post_init__(self):
        if sorted(self.eps_grid) != list(self.eps_grid):
            raise ValueError("eps_grid must be sorted ascending")


def default_eps_grid(points: int = 200, lo: float = 1e-4, hi: float = 0.5) -> list[float]:
    """Log-spaced noise grid covering both the recoverable and the saturated
    regimes."""
    return [float(x) for x in np.geomspace(lo, hi, points)]


def cell_rng(master_seed: int, *key_parts) -> np.random.Generator:
    """Random source derived from the master seed and a cell key, stable
    across platforms and schedulings."""
    material = "|".join([str(master_seed), *map(str, key_parts)])
    digest = hashlib.sha256(material.encode()).digest()
    return np.random.default_rng(int.from_bytes(digest[:8], "little"))


def _cell_seed(master_seed: int, *key_parts) -> int:
    material = "|".join([str(master_seed), *map(str, key_parts)])
    return int.from_bytes(hashlib.sha256(material.encode()).digest()[:8], "little")


def run_cell(cfg: SweepConfig, seed: int, eps: float) -> list[SweepRecord]:
    """Run all four algorithms on one generated instance."""
    eps_key = format_eps(eps)
    inst = generate(cfg.n, cfg.k, eps, _cell_seed(seed, eps_key, "instance"))
    records = []

    started = time.perf_counter()
    base_cost = planted_cost(inst)
    records.append(
        SweepRecord(seed, eps, "planted", base_cost,
                    (time.perf_counter() - started) * 1e3, 0, 0)
    )

    started = time.perf_counter()
    pivot_clustering = run_pivot(inst.graph, cell_rng(seed, eps_key, "pivot"))
    pivot_ms = (time.perf_counter() - started) * 1e3
    records.append(
        SweepRecord(seed, eps, "pivot",
                    inst.graph.clustering_cost(pivot_clustering), pivot_ms, 0, 0)
    )

    work = inst.graph.copy()
    work.enable_dense_index()
    for algo in ("atom", "atom_pivot"):
        _, _, summary = run_with_summary(
            work,
            cfg.goodness,
            cell_rng(seed, eps_key, algo),
            algo,
            budget_fn=experiment_budget,
            short_circuit=True,
        )
        records.append(
            SweepRecord(seed, eps, algo, summary.total_cost, summary.wall_ms,
                        summary.atom_steps, summary.pivot_steps)
        )
    return records


def _run_cell_star(args):
    return run_cell(*args)


def run_sweep(cfg: SweepConfig) -> list[SweepRecord]:
    """One record per (seed, eps, algorithm), emitted in sorted key order."""
    cells = [(cfg, seed, eps) for seed in cfg.seeds for eps in cfg.eps_grid]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_run_cell_star, cells, chunksize=4))
    else:
        chunks = [run_cell(*cell) for cell in cells]
    records = [rec for chunk in chunks for rec in chunk]
    records.sort(key=SweepRecord.sort_key)
    if cfg.out_csv:
        write_csv(records, cfg.out_csv)
    return records


# -- CSV ---------------------------------------------------------------------


def records_to_csv(records: list[SweepRecord]) -> str:
    buf = StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            [r.seed, format_eps(r.eps_noise), r.algorithm, r.cost,
             f"{r.wall_ms:.3f}", r.atom_steps, r.pivot_steps]
        )
    return buf.getvalue()


def write_csv(records: list[SweepRecord], path) -> None:
    Path(path).write_text(records_to_csv(records))


def read_csv(path) -> list[SweepRecord]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {header}")
        return [
            SweepRecord(
                seed=int(row[0]),
                eps_noise=float(row[1]),
                algorithm=row[2],
                cost=int(row[3]),
                wall_ms=float(row[4]),
                atom_steps=int(row[5]),
                pivot_steps=int(row[6]),
            )
            for row in reader
        ]


# -- smoothing ----------------------------------------------------------------

#: Zero costs have no logarithm; they enter the geometric mean as this value.
ZERO_COST_FLOOR = 0.5


def smooth_logspace(costs, window: int = 11) -> list[float]:
    """Geometric-mean smoothing over a sliding window.

    The window is truncated symmetrically at the boundaries, so entry i
    averages ln(cost) over [i - h, i + h] with h = min(i, len - 1 - i,
    window // 2).  Zeros are floored to ZERO_COST_FLOOR before the log.
    """
    if window < 1 or window % 2 == 0:
        raise ValueError(f"window must be odd and positive, got {window}")
    values = list(costs)
    if not values:
        raise ValueError("empty cost series")
    if any(c < 0 for c in values):
        raise ValueError("costs must be nonnegative")
    logs = [math.log(c if c > 0 else ZERO_COST_FLOOR) for c in values]
    half = window // 2
    out = []
    for i in range(len(logs)):
        h = min(i, len(logs) - 1 - i, half)
        segment = logs[i - h : i + h + 1]
        out.append(math.exp(sum(segment) / len(segment)))
    return out
