# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/fast.py


"""Two-step ball-investigation engine.

Step 1 visits the voxels of a ball around every site and keeps, per
voxel, the smallest proximity found (sites in ascending order, strict
improvement only). For voronoi all balls have radius r0; for the growth
kinds site s gets radius r_s(t0) and sites born after t0 get none. Ball
membership is decided on the proximity itself (d^2 <= r0^2, or
proximity <= t0), so a voxel's winner always has it in its ball.

Step 2 assigns the voxels no ball reached by a full scan over the sites.
Both steps use ProximityKernel, so labels agree bit for bit with
tessellate_brute().
"""


import logging

import numpy as np

from ..cost import growth_radii, optimal_r0, predicted_cost, search_optimal_t0
from ..geometry import GROWTH_KINDS, KIND_VORONOI
from ..misc import log_enter_exit
from ..sites import prune_ineffective_sites
from .ball import ball_axes
from .brute import assign_voxels, check_inputs
from .image import LABEL_DTYPE, UNASSIGNED, DistanceImage, EvalCounters, LabelImage, TessellateError
from .kernel import ProximityKernel
from .workers import map_chunks, split


logger = logging.getLogger(__name__)


def _scan_sites(kernel, grid, radii, thresholds, site_range, dist, labels):
    """Run step 1 for the sites in site_range on (dist, labels) in
    place; return the number of ball members evaluated.
    """

    evals = 0
    for s in range(*site_range):
        radius = radii[s]
        if not radius >= 0:
            continue
        axes = ball_axes(kernel.positions[s], radius, grid)
        if any(idx.size == 0 for idx in axes):
            continue

        vals = kernel.box_values([grid.axis_centers(i)[idx] for i, idx in enumerate(axes)], s)
        inside = vals <= thresholds[s]
        n_inside = int(np.count_nonzero(inside))
        if n_inside == 0:
            continue
        evals += n_inside

        ix = np.ix_(*axes)
        block = dist[ix]
        owner = labels[ix]
        better = inside & (vals < block)
        block[better] = vals[better]
        owner[better] = s
        dist[ix] = block
        labels[ix] = owner
    return evals


def _step1(kernel, grid, radii, thresholds, threads):
    n_sites = kernel.positions.shape[0]
    ranges = split(n_sites, threads)

    if len(ranges) == 1:
        dist = np.full(grid.shape, np.inf)
        labels = np.full(grid.shape, UNASSIGNED, dtype=LABEL_DTYPE)
        evals = _scan_sites(kernel, grid, radii, thresholds, ranges[0], dist, labels)
        return dist, labels, evals

    def work(site_range):
        dist = np.full(grid.shape, np.inf)
        labels = np.full(grid.shape, UNASSIGNED, dtype=LABEL_DTYPE)
        evals = _scan_sites(kernel, grid, radii, thresholds, site_range, dist, labels)
        return dist, labels, evals

    results = map_chunks(work, ranges, threads)

    # merge in site order; a later chunk only wins on strict improvement
    dist, labels, evals = results[0]
    for other_dist, other_labels, other_evals in results[1:]:
        better = other_dist < dist
        dist[better] = other_dist[better]
        labels[better] = other_labels[better]
        evals += other_evals
    return dist, labels, evals


def _ball_parameter(sites, grid, override_param):
    """Return (param_name, param, radii, thresholds) for step 1."""

    n_sites = sites.n_sites
    if sites.kind == KIND_VORONOI:
        if override_param is None:
            r0 = optimal_r0(n_sites, grid.domain)
        else:
            r0 = float(override_param)
            if not r0 > 0:
                raise TessellateError(f"r0 ({override_param}) must be positive")
        return "r0", r0, np.full(n_sites, r0), np.full(n_sites, r0 * r0)

    if override_param is None:
        t0 = search_optimal_t0(sites, grid)
    else:
        t0 = float(override_param)
        if not t0 >= sites.births.min():
            raise TessellateError(f"t0 ({override_param}) below earliest birth ({sites.births.min()})")

    # sites born after t0 get no ball
    radii = np.where(sites.births <= t0, growth_radii(t0, sites), -1.0)
    return "t0", t0, radii, np.full(n_sites, t0)


@log_enter_exit()
def tessellate_fast(sites, grid, override_param=None, prune=True, threads=1):
    """Tessellate with the two-step ball investigation.

    Args:
        sites: SiteSet of any kind.
        grid: VoxelGrid over the sites' domain.
        override_param: r0 (voronoi) or t0 (growth kinds); chosen by
            cost minimization when None.
        prune: Drop sites that own no point (growth kinds) first.
        threads: Worker threads.

    Returns:
        (LabelImage, DistanceImage, EvalCounters); labels index the
        sites as given, pruning or not.
    """

    check_inputs(sites, grid)

    kept = None
    work_sites = sites
    if prune and sites.kind in GROWTH_KINDS:
        work_sites, removed = prune_ineffective_sites(sites, grid.domain)
        if removed.size:
            kept = np.setdiff1d(np.arange(sites.n_sites), removed)
            logger.debug(f"pruned ({removed.size}) of ({sites.n_sites}) sites")

    param_name, param, radii, thresholds = _ball_parameter(work_sites, grid, override_param)
    logger.debug(f"kind ({sites.kind}) {param_name} ({param})")

    kernel = ProximityKernel(work_sites, grid)
    dist, labels, step1_evals = _step1(kernel, grid, radii, thresholds, threads)

    flat_dist = dist.reshape(-1)
    flat_labels = labels.reshape(-1)
    unassigned = np.flatnonzero(flat_dist == np.inf)
    if unassigned.size:
        assign_voxels(kernel, grid, unassigned, flat_labels, flat_dist, threads)
    step2_evals = int(unassigned.size) * work_sites.n_sites

    if kept is not None:
        labels = kept[labels].astype(LABEL_DTYPE)

    model_step12 = predicted_cost(work_sites, grid, param)
    counters = EvalCounters(step1_evals, step2_evals, param_name, param, model_step12)
    logger.debug(f"unassigned after step 1 ({unassigned.size}) counters ({counters})")

    return (
        LabelImage(grid, labels, sites.kind, sites.n_sites),
        DistanceImage.from_proximity(grid, dist, sites.kind),
        counters,
    )
