# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/brute.py


"""Reference engine: every voxel against every site.
"""


import logging

import numpy as np

from ..misc import log_enter_exit
from .image import LABEL_DTYPE, DistanceImage, EvalCounters, LabelImage, TessellateError
from .kernel import ProximityKernel
from .workers import map_chunks, voxel_chunks


logger = logging.getLogger(__name__)


VOXEL_CHUNK = 1 << 12


def check_inputs(sites, grid):
    """Raise TessellateError unless sites fit the grid's domain."""

    if sites.n_sites < 1:
        raise TessellateError("no sites to tessellate")
    if sites.d != grid.d:
        raise TessellateError(f"sites of dimension ({sites.d}) for grid of dimension ({grid.d})")
    sites.check_domain(grid.domain)


def assign_voxels(kernel, grid, flat, labels, values, threads=1):
    """Assign the given flat voxels to their closest site, in place."""

    def work(chunk):
        a, b = chunk
        sel = flat[a:b]
        lab, val = kernel.argmin(grid.coords(sel))
        labels[sel] = lab
        values[sel] = val

    map_chunks(work, voxel_chunks(flat.size, VOXEL_CHUNK), threads)


@log_enter_exit()
def tessellate_brute(sites, grid, threads=1):
    """Tessellate by exhaustive search.

    Args:
        sites: SiteSet of any kind.
        grid: VoxelGrid over the sites' domain.
        threads: Worker threads over voxel chunks.

    Returns:
        (LabelImage, DistanceImage, EvalCounters) with
        step2_evals == N_v * N_s.
    """

    check_inputs(sites, grid)

    n_voxels = grid.n_voxels
    kernel = ProximityKernel(sites, grid)
    labels = np.empty(n_voxels, dtype=LABEL_DTYPE)
    values = np.empty(n_voxels, dtype=np.float64)
    assign_voxels(kernel, grid, np.arange(n_voxels), labels, values, threads)

    n_evals = n_voxels * sites.n_sites
    counters = EvalCounters(step1_evals=0, step2_evals=n_evals, model_step12=float(n_evals))
    logger.debug(f"brute kind ({sites.kind}) N_v ({n_voxels}) N_s ({sites.n_sites}) counters ({counters})")

    return (
        LabelImage(grid, labels, sites.kind, sites.n_sites),
        DistanceImage.from_proximity(grid, values, sites.kind),
        counters,
    )
