# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/cost/search.py


"""Search of the fictitious time t0 for Johnson-Mehl and Laguerre, and
sampled cost curves.

The cost of step 1 increases with t0 and the cost of step 2
decreases, so the optimum lies between min_s t_s and the time at which
the earliest crystal covers the domain:

    johnson-mehl  periodic:     min t_s + sqrt(sum L_i^2) / (2 G)
                  non-periodic: min t_s + sqrt(sum L_i^2) / G
    laguerre      periodic:     min t_s + sum L_i^2 / (4 G)
                  non-periodic: min t_s + sum L_i^2 / G

The bracket is scanned on SCAN_POINTS points, then a bounded scalar
minimization refines the best scan cell. Each model evaluation is O(N_s).
"""


import logging

import numpy as np
from scipy.optimize import minimize_scalar

from ..geometry import GROWTH_KINDS, KIND_JOHNSON_MEHL, KIND_VORONOI
from ..misc import log_enter_exit
from .model import (
    CostError,
    CostModel,
    ball_volume,
    growth_cost,
    voronoi_cost,
)


logger = logging.getLogger(__name__)


REFINE_ITERATIONS = 60
SCAN_POINTS = 513


def t0_bracket(sites, domain):
    """Return (lo, hi), the interval holding the optimal t0."""

    if sites.kind not in GROWTH_KINDS:
        raise CostError(f"kind ({sites.kind}) has no fictitious time")

    lo = float(np.min(sites.births))
    sum_sq = float(np.sum(domain.lengths**2))
    growth = sites.growth

    if sites.kind == KIND_JOHNSON_MEHL:
        reach = np.sqrt(sum_sq) / (2.0 * growth) if domain.periodic else np.sqrt(sum_sq) / growth
    else:
        reach = sum_sq / (4.0 * growth) if domain.periodic else sum_sq / growth
    return lo, lo + float(reach)


@log_enter_exit()
def search_optimal_t0(sites, grid, scan_points=SCAN_POINTS, iterations=REFINE_ITERATIONS):
    """Return the t0 minimizing growth_cost() within t0_bracket().

    Args:
        sites: Johnson-Mehl or Laguerre SiteSet.
        grid: VoxelGrid to rasterize.
        scan_points: Number of points of the initial bracket scan.
        iterations: Iteration limit of the refinement in the best scan cell.
    """

    lo, hi = t0_bracket(sites, grid.domain)
    if not hi > lo:
        return lo

    def f(t0):
        return growth_cost(t0, sites, grid)

    ts = np.linspace(lo, hi, max(3, int(scan_points)))
    costs = np.array([f(t) for t in ts])
    i = int(np.argmin(costs))
    best_t, best_cost = float(ts[i]), float(costs[i])

    a = float(ts[max(i - 1, 0)])
    b = float(ts[min(i + 1, ts.size - 1)])
    refined = minimize_scalar(
        f,
        bounds=(a, b),
        method="bounded",
        options={"xatol": (b - a) * 1e-9, "maxiter": iterations},
    )
    if refined.fun < best_cost:
        best_t, best_cost = float(refined.x), float(refined.fun)

    logger.debug(f"t0 bracket ({lo}, {hi}) t0 ({best_t}) model cost ({best_cost})")
    return best_t


def cost_curve(sites, grid, n_points=65, lo=None, hi=None):
    """Sample the model cost along the kind's parameter.

    Voronoi samples the ball radius r0 over (0, max distance]; other
    kinds sample t0 over the t0 bracket.

    Returns:
        (param_name, [(param, model_cost), ...])
    """

    n_points = int(n_points)
    if n_points < 2:
        raise CostError(f"need at least 2 points, got ({n_points})")

    domain = grid.domain
    if sites.kind == KIND_VORONOI:
        top = domain.max_distance if hi == None else hi
        bottom = top / n_points if lo == None else lo
        rows = [(float(r0), predicted_cost(sites, grid, r0)) for r0 in np.linspace(bottom, top, n_points)]
        return "r0", rows

    blo, bhi = t0_bracket(sites, domain)
    lo = blo if lo == None else lo
    hi = bhi if hi == None else hi
    rows = [(float(t0), growth_cost(t0, sites, grid)) for t0 in np.linspace(lo, hi, n_points)]
    return "t0", rows


def predicted_cost(sites, grid, param):
    """Model total evaluations at r0 (voronoi) or t0 (other kinds).
    Voronoi ball volumes are capped at the domain volume.
    """

    if sites.kind == KIND_VORONOI:
        v0 = min(ball_volume(float(param), grid.d), grid.domain.volume)
        return voronoi_cost(v0, CostModel.from_grid(grid, sites.n_sites))
    return growth_cost(float(param), sites, grid)
