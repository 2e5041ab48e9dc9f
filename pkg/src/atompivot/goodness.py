"""Goodness predicates, the clean filter, the sampling check, and the
closed-form parameter and ratio evaluators.

A cluster C is eps-good when every member's symmetric difference with C is
at most eps*|C|, and eps-good-on-average when the summed symmetric
difference is at most eps*|C|^2.  clean() filters a candidate cluster down
to its well-attached members; check() is a cheap sampling pre-test that
predicts whether clean() would succeed, wrong with probability at most
1/degree(v)^2 per call when run at the guarantee budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class GoodnessParams:
    """Target goodness eps with slack parameters delta and gamma."""

    eps: float
    delta: float
    gamma: float

    def __post_init__(self):
        if not (0 < self.eps < 1):
            raise ValueError(f"eps must be in (0, 1), got {self.eps}")
        if self.delta <= 0 or self.gamma <= 0:
            raise ValueError("delta and gamma must be positive")
        if self.gamma >= 0.5:
            raise ValueError(f"gamma must be below 1/2, got {self.gamma}")


#: Parameter choice backing the headline approximation guarantee.
DEFAULT_PARAMS = GoodnessParams(eps=0.0287, delta=0.0287 / 100, gamma=0.0287 / 100)


@dataclass(frozen=True)
class CleanParams:
    """Member threshold alpha and survivor-fraction slack beta for clean()."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (0 < self.alpha < 1):
            raise ValueError(f"alpha must be in (0, 1), got {self.alpha}")
        if not (0 < self.beta < 1):
            raise ValueError(f"beta must be in (0, 1), got {self.beta}")


@dataclass(frozen=True)
class CheckBudget:
    """Outer and inner sample counts for one check() call."""

    eta: int
    eta_prime: int


def derive_clean_params(gp: GoodnessParams) -> CleanParams:
    """Clean parameters induced by (eps, delta, gamma).

    alpha = (2 eps + 2 delta) / ((1 - eps)(1 - 2 gamma))
    beta  = (2 eps / (1 - eps) + delta) / ((1 + delta)(1 - 2 gamma))

    Raises if either lands outside (0, 1).
    """
    eps, delta, gamma = gp.eps, gp.delta, gp.gamma
    alpha = (2 * eps + 2 * delta) / ((1 - eps) * (1 - 2 * gamma))
    beta = (2 * eps / (1 - eps) + delta) / ((1 + delta) * (1 - 2 * gamma))
    if alpha >= 1 or beta >= 1:
        raise ValueError(
            f"parameterization rejected: alpha={alpha:.4f}, beta={beta:.4f} must be < 1"
        )
    return CleanParams(alpha=alpha, beta=beta)


def reported_goodness_bound(gp: GoodnessParams) -> float:
    """Goodness guaranteed for every reported cluster.

    (4 eps + 3 delta + 2 delta^2 + eps delta)
    / (1 - 3 eps - 2 gamma (1 - eps)(1 + delta))
    """
    eps, delta, gamma = gp.eps, gp.delta, gp.gamma
    denom = 1 - 3 * eps - 2 * gamma * (1 - eps) * (1 + delta)
    if denom <= 0:
        raise ValueError(f"denominator {denom} <= 0; parameters too large")
    return (4 * eps + 3 * delta + 2 * delta**2 + eps * delta) / denom


def clean_goodness_bound(p: CleanParams) -> float:
    """Every nonempty clean() output is (alpha + beta)/(1 - beta)-good."""
    return (p.alpha + p.beta) / (1 - p.beta)


def rounding_ratio_bound(eps_prime: float) -> float:
    """Per-step cost ratio when removing a rounded eps'-good cluster:
    2 + 7 eps' (1 + 2 eps') / (2 (1 - 2 eps')^2)."""
    if eps_prime >= 0.5:
        raise ValueError(f"eps' must be below 1/2, got {eps_prime}")
    return 2 + 7 * eps_prime * (1 + 2 * eps_prime) / (2 * (1 - 2 * eps_prime) ** 2)


def pivot_ratio_bound(eps: float) -> float:
    """Per-step pivot ratio when no eps^2-good-on-average cluster exists:
    3 - eps^2 / ((5/6) eps^2 + 1)."""
    if eps < 0:
        raise ValueError(f"eps must be nonnegative, got {eps}")
    return 3 - eps**2 / ((5 / 6) * eps**2 + 1)


# -- predicates -------------------------------------------------------------


def is_good(g: Graph, cluster: set[int], eps: float) -> bool:
    """True iff every member u satisfies |N(u) symdiff C| <= eps * |C|."""
    if not cluster:
        raise ValueError("empty cluster")
    bound = eps * len(cluster)
    return all(g.cluster_symmetric_difference(u, cluster) <= bound for u in cluster)


def is_good_on_average(g: Graph, cluster: set[int], eps: float) -> bool:
    """True iff the summed symmetric difference is <= eps * |C|^2."""
    if not cluster:
        raise ValueError("empty cluster")
    total = sum(g.cluster_symmetric_difference(u, cluster) for u in cluster)
    return total <= eps * len(cluster) ** 2


def clean(g: Graph, cluster: set[int], p: CleanParams) -> set[int]:
    """Keep members within symmetric difference alpha*|C| of the cluster.

    Returns the survivor set K when at least (1 - beta)*|C| members survive,
    otherwise the empty set.  Never mutates the graph.
    """
    if not cluster:
        raise ValueError("empty cluster")
    size = len(cluster)
    threshold = p.alpha * size
    survivors = {
        u for u in cluster if g.cluster_symmetric_difference(u, cluster) <= threshold
    }
    if len(survivors) >= (1 - p.beta) * size:
        return survivors
    return set()


def vertex_is_good(g: Graph, v: int, p: CleanParams) -> bool:
    """True iff clean() succeeds on v's closed neighborhood."""
    return bool(clean(g, g.neighbors(v), p))


# -- sampling check ---------------------------------------------------------


def guarantee_budget(p: CleanParams, gamma: float, degree: int) -> CheckBudget:
    """Sample counts sized for a per-call error of at most 1/degree^2.

    eta  = ceil(16 / (beta gamma^2) * ln degree)
    eta' = ceil(8 / (alpha gamma^2) * ln(2 / (beta gamma)))

    Both are rounded up; running more samples only tightens the tail bounds.
    """
    eta = math.ceil(16 / (p.beta * gamma * gamma) * math.log(degree))
    eta_prime = math.ceil(8 / (p.alpha * gamma * gamma) * math.log(2 / (p.beta * gamma)))
    return CheckBudget(eta=eta, eta_prime=eta_prime)


def _outer_flagged_loop(g, nv_list, u, eta_prime, threshold, rng) -> bool:
    nu = g.neighbors(u)
    draws = rng.integers(0, len(nv_list), size=eta_prime)
    misses = sum(1 for j in draws if nv_list[j] not in nu)
    return misses > threshold


def check(
    g: Graph,
    v: int,
    p: CleanParams,
    gamma: float,
    rng: np.random.Generator,
    budget: CheckBudget | None = None,
    short_circuit: bool = False,
) -> bool:
    """Estimate by sampling whether clean(N(v)) would return a cluster.

    Draws eta pivots u_i uniformly with replacement from N(v); for each,
    draws eta' probes w_j from N(v) and counts the misses w_j not in N(u_i).
    A pivot is flagged when its miss count strictly exceeds
    (1/2)(1 + alpha(1 - gamma) - d(u_i)/d(v)) * eta', and the call returns
    False when the number of flagged pivots strictly exceeds
    beta (1 - gamma) eta.

    The default budget carries the 1/d(v)^2 error guarantee.  With
    short_circuit the call returns False as soon as the flag count exceeds
    the threshold; the decision is identical in distribution but fewer
    samples are drawn, so the consumed random stream differs.
    """
    d_v = g.degree(v)
    if budget is None:
        budget = guarantee_budget(p, gamma, d_v)
    eta, eta_prime = budget.eta, budget.eta_prime
    if eta <= 0 or eta_prime <= 0:
        return True
    nv_sorted = sorted(g.neighbors(v))
    outer = rng.integers(0, d_v, size=eta)
    flag_limit = p.beta * (1 - gamma) * eta
    half_inner = 0.5 * eta_prime
    alpha_term = p.alpha * (1 - gamma)

    dense = g.dense_index
    if dense is not None and not short_circuit:
        nv = np.array(nv_sorted, dtype=np.int64)
        pivots = nv[outer]
        probes = nv[rng.integers(0, d_v, size=(eta, eta_prime))]
        misses = eta_prime - dense[pivots[:, None], probes].sum(axis=1)
        pivot_degrees = np.fromiter(
            (g.degree(int(u)) for u in pivots), dtype=np.int64, count=eta
        )
        thresholds = half_inner * (1 + alpha_term - pivot_degrees / d_v)
        flagged = int((misses > thresholds).sum())
        return not (flagged > flag_limit)

    flagged = 0
    if dense is not None:
        nv = np.array(nv_sorted, dtype=np.int64)
        for i in outer:
            u = int(nv[i])
            threshold = half_inner * (1 + alpha_term - g.degree(u) / d_v)
            probes = nv[rng.integers(0, d_v, size=eta_prime)]
            misses = eta_prime - int(dense[u, probes].sum())
            if misses > threshold:
                flagged += 1
                if short_circuit and flagged > flag_limit:
                    return False
    else:
        for i in outer:
            u = nv_sorted[int(i)]
            threshold = half_inner * (1 + alpha_term - g.degree(u) / d_v)
            if _outer_flagged_loop(g, nv_sorted, u, eta_prime, threshold, rng):
                flagged += 1
                if short_circuit and flagged > flag_limit:
                    return False
    return not (flagged > flag_limit)
