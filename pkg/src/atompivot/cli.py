"""Command-line interface: generate, run, score, solve exactly, sweep, plot."""

from __future__ import annotations

import argparse
import statistics
import sys
import time
from collections import defaultdict

import numpy as np

from . import fileio, sweep as sweepmod
from .driver import run_with_summary
from .goodness import (
    GoodnessParams,
    derive_clean_params,
    guarantee_budget,
    reported_goodness_bound,
)
from .oracle import exact_opt, exact_pivot_expectation
from .pivot import run_pivot
from .svgplot import emit_plot
from .synth import generate, planted_cost

ALGO_CHOICES = ("pivot", "atom", "atom-pivot")


def _common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
    parser.add_argument("--eps", type=float, default=0.0287,
                        help="goodness target (default 0.0287)")
    parser.add_argument("--delta", type=float, default=None,
                        help="slack parameter (default eps/100)")
    parser.add_argument("--gamma", type=float, default=None,
                        help="sampling slack (default eps/100)")
    parser.add_argument("--out", default=None, help="output path")


def _goodness(args) -> GoodnessParams:
    delta = args.delta if args.delta is not None else args.eps / 100
    gamma = args.gamma if args.gamma is not None else args.eps / 100
    return GoodnessParams(eps=args.eps, delta=delta, gamma=gamma)


def _cmd_gen(args) -> int:
    inst = generate(args.n, args.k, args.noise, args.seed)
    prefix = args.out or f"planted_n{args.n}_k{args.k}"
    fileio.write_edgelist(inst.graph, f"{prefix}.edges")
    fileio.write_clustering(inst.planted, f"{prefix}.planted")
    print(f"wrote {prefix}.edges ({inst.graph.n} vertices, {inst.graph.m} edges)")
    print(f"wrote {prefix}.planted ({len(inst.planted)} clusters, "
          f"planted cost {planted_cost(inst)})")
    return 0


def _cmd_run(args) -> int:
    g = fileio.read_edgelist(args.graph)
    rng = np.random.default_rng(args.seed)
    algo = args.algo.replace("-", "_")
    if algo == "pivot":
        started = time.perf_counter()
        clustering = run_pivot(g, rng)
        wall_ms = (time.perf_counter() - started) * 1e3
        cost = g.clustering_cost(clustering)
        print(f"pivot: cost={cost} steps={len(clustering)} wall_ms={wall_ms:.1f}")
    else:
        gp = _goodness(args)
        budget_fn = None
        if args.check_budget == "experiment":
            budget_fn = sweepmod.experiment_budget
        else:
            p = derive_clean_params(gp)
            sample = guarantee_budget(p, gp.gamma, max(g.degree(v) for v in g.live))
            per_call = sample.eta * (1 + sample.eta_prime)
            if per_call > 10**7:
                print(
                    f"note: guarantee budgets need ~{per_call:.2e} samples per "
                    "check at these parameters; consider --check-budget experiment",
                    file=sys.stderr,
                )
        g.enable_dense_index()
        clustering, _, summary = run_with_summary(
            g, gp, rng, algo, budget_fn=budget_fn,
            short_circuit=args.check_budget == "experiment",
        )
        cost = g.clustering_cost(clustering)
        print(
            f"{args.algo}: cost={cost} atom_steps={summary.atom_steps} "
            f"pivot_steps={summary.pivot_steps} checks={summary.check_calls} "
            f"wall_ms={summary.wall_ms:.1f}"
        )
    if args.out:
        fileio.write_clustering(clustering, args.out)
        print(f"wrote {args.out}")
    return 0


def _cmd_cost(args) -> int:
    g = fileio.read_edgelist(args.graph)
    clustering = fileio.read_clustering(args.clustering)
    print(g.clustering_cost(clustering))
    return 0


def _cmd_oracle(args) -> int:
    g = fileio.read_edgelist(args.graph)
    if args.what in ("opt", "both"):
        clustering, cost = exact_opt(g)
        sizes = sorted((len(c) for c in clustering.clusters), reverse=True)
        print(f"opt cost={cost} cluster_sizes={sizes}")
        if args.out:
            fileio.write_clustering(clustering, args.out)
            print(f"wrote {args.out}")
    if args.what in ("pivot-expectation", "both"):
        expectation = exact_pivot_expectation(g)
        print(f"pivot expectation={expectation} (~{float(expectation):.6f})")
    return 0


def _cmd_sweep(args) -> int:
    gp = _goodness(args) if args.eps != 0.0287 or args.delta or args.gamma \
        else sweepmod.EXPERIMENT_GOODNESS
    cfg = sweepmod.SweepConfig(
        n=args.n,
        k=args.k,
        eps_grid=sweepmod.default_eps_grid(args.points, args.eps_min, args.eps_max),
        seeds=list(range(args.seed, args.seed + args.repeats)),
        goodness=gp,
        jobs=args.jobs,
        out_csv=args.out or "sweep.csv",
    )
    reported = reported_goodness_bound(cfg.goodness)
    print(f"sweep: n={cfg.n} k={cfg.k} points={len(cfg.eps_grid)} "
          f"seeds={cfg.seeds} reported_goodness={reported:.4f}")
    records = sweepmod.run_sweep(cfg)
    print(f"wrote {cfg.out_csv} ({len(records)} records)")
    return 0


def _cmd_plot(args) -> int:
    records = sweepmod.read_csv(args.csv)
    by_algo_eps: dict[str, dict[float, list[int]]] = defaultdict(lambda: defaultdict(list))
    for r in records:
        by_algo_eps[r.algorithm][r.eps_noise].append(r.cost)
    series = {}
    for algo, by_eps in by_algo_eps.items():
        grid = sorted(by_eps)
        medians = [statistics.median(by_eps[e]) for e in grid]
        smoothed = sweepmod.smooth_logspace(medians, window=args.window)
        series[algo] = list(zip(grid, smoothed))
    out = args.out or "sweep.svg"
    emit_plot(series, out, title=args.title)
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="atompivot",
        description="Correlation clustering: pivoting merged with near-clique detection",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a planted-partition instance")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--noise", type=float, required=True, help="pair flip probability")
    _common_flags(p)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("run", help="cluster a graph with one algorithm")
    p.add_argument("--algo", choices=ALGO_CHOICES, required=True)
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument("--check-budget", choices=("guarantee", "experiment"),
                   default="experiment",
                   help="sampling budget for the detection check (default experiment)")
    _common_flags(p)
    p.set_defaults(fn=_cmd_run)

    p = sub.add_parser("cost", help="score a clustering file against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--clustering", required=True)
    p.set_defaults(fn=_cmd_cost)

    p = sub.add_parser("oracle", help="exact solutions for small graphs")
    p.add_argument("--graph", required=True)
    p.add_argument("--what", choices=("opt", "pivot-expectation", "both"),
                   default="both")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("sweep", help="run the benchmark sweep, emit CSV")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--eps-min", type=float, default=1e-4)
    p.add_argument("--eps-max", type=float, default=0.5)
    p.add_argument("--repeats", type=int, default=1,
                   help="seeds per eps point (default 1)")
    p.add_argument("--jobs", type=int, default=1)
    _common_flags(p)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("plot", help="render a sweep CSV as an SVG")
    p.add_argument("--csv", required=True)
    p.add_argument("--window", type=int, default=11, help="smoothing window (odd)")
    p.add_argument("--title", default="")
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_plot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
