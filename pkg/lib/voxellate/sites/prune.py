# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/sites/prune.py


"""Removal of ineffective sites: sites overtaken by another crystal
before their own birth, which therefore own no cell.

Johnson-Mehl: site s is dominated by s' when d(x_s, x_s') / G + t_s'
< t_s. The triangle inequality then gives proximity_s'(x) <
proximity_s(x) everywhere.

Laguerre: the squared distance has no triangle inequality, so the
reached-before-birth test alone is not sound. A site is dropped only
when s' beats it over the whole domain:
    periodic:     (delta^2 + 2 D delta) / G + t_s' < t_s, with delta =
                  d_L(x_s, x_s') and D the largest distance in the domain
    non-periodic: max over the box of d^2(x, x_s') - d^2(x, x_s) is
                  reached at a corner and computed exactly.

Equality also dominates when s' has the lower index (ties go to the
lowest index). The check is the plain O(N_s^2) pairwise scan, done in
row blocks to bound memory.
"""


import logging

import numpy as np

from ..geometry import KIND_JOHNSON_MEHL, KIND_LAGUERRE, axis_component_sq
from ..misc import log_enter_exit
from .base import SiteError


logger = logging.getLogger(__name__)


BLOCK_ELEMENTS = 1 << 22


def _pair_distance_sq(positions, rows, domain):
    """Squared distances (len(rows), N_s) between sites[rows] and all sites."""

    acc = None
    for axis in range(domain.d):
        comp = axis_component_sq(
            positions[rows, axis][:, None],
            positions[None, :, axis],
            domain.lengths[axis],
            domain.periodic,
        )
        acc = comp if acc is None else acc + comp
    return acc


def _corner_excess(positions, rows, domain):
    """max over the box of d^2(x, x_j) - d^2(x, x_i), i in rows, all j."""

    acc = None
    for axis in range(domain.d):
        length = domain.lengths[axis]
        xi = positions[rows, axis][:, None]
        xj = positions[None, :, axis]
        at_zero = xj * xj - xi * xi
        at_length = (length - xj) ** 2 - (length - xi) ** 2
        comp = np.maximum(at_zero, at_length)
        acc = comp if acc is None else acc + comp
    return acc


def _reach_times(sites, rows, domain):
    """Time by which each site j dominates site i (rows i, columns j)."""

    growth = sites.growth
    births = sites.births[None, :]

    if sites.kind == KIND_JOHNSON_MEHL:
        dist_sq = _pair_distance_sq(sites.positions, rows, domain)
        return np.sqrt(dist_sq) / growth + births

    if domain.periodic:
        dist_sq = _pair_distance_sq(sites.positions, rows, domain)
        excess = dist_sq + 2.0 * domain.max_distance * np.sqrt(dist_sq)
    else:
        excess = _corner_excess(sites.positions, rows, domain)
    return excess / growth + births


@log_enter_exit()
def prune_ineffective_sites(sites, domain):
    """Remove sites that cannot own any voxel.

    Args:
        sites: Johnson-Mehl or Laguerre SiteSet.
        domain: Domain giving the metric.

    Returns:
        (pruned SiteSet, removed indices). Surviving sites keep their
        relative order.
    """

    if sites.kind not in [KIND_JOHNSON_MEHL, KIND_LAGUERRE]:
        raise SiteError(f"kind ({sites.kind}) has no ineffective sites")
    if sites.d != domain.d:
        raise SiteError(f"sites of dimension ({sites.d}) for domain of dimension ({domain.d})")

    n = sites.n_sites
    removed = np.zeros(n, dtype=bool)
    block = max(1, BLOCK_ELEMENTS // n)
    index = np.arange(n)

    for start in range(0, n, block):
        rows = np.arange(start, min(n, start + block))
        reach = _reach_times(sites, rows, domain)
        own = sites.births[rows][:, None]
        others = index[None, :] != rows[:, None]
        lower = index[None, :] < rows[:, None]
        dominated = others & ((reach < own) | ((reach <= own) & lower))
        removed[rows] = np.any(dominated, axis=1)

    removed = np.flatnonzero(removed)
    if removed.size == 0:
        return sites, removed

    kept = np.setdiff1d(index, removed)
    logger.debug(f"pruned kind ({sites.kind}) removed ({removed.size}) kept ({kept.size})")
    return sites.subset(kept), removed
