# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/validate.py


"""Independent check of a label image against its site set.
"""


import logging

import numpy as np

from ..geometry import KIND_VORONOI
from ..misc import log_enter_exit
from .brute import VOXEL_CHUNK
from .image import TessellateError
from .kernel import ProximityKernel
from .workers import voxel_chunks


logger = logging.getLogger(__name__)


DISTANCE_RTOL = 1e-12


class Violation:
    """A voxel failing the check.

    Attributes:
        flat: Flat (C-order) voxel index.
        index: Multi-index.
        label: Label found in the image.
        expected: Lowest-index closest site.
        reasons: List of "label", "range" and/or "distance".
    """

    def __init__(self, flat, index, label, expected, reasons):
        self.flat = int(flat)
        self.index = tuple(int(k) for k in index)
        self.label = int(label)
        self.expected = int(expected)
        self.reasons = reasons

    def __repr__(self):
        return (
            f"<{self.__module__}.{self.__class__.__name__} index ({self.index})"
            f" label ({self.label}) expected ({self.expected}) reasons ({self.reasons})>"
        )


class PartitionReport:
    """Outcome of validate_partition()."""

    def __init__(self, checked, violations):
        self.checked = int(checked)
        self.violations = violations

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__} checked ({self.checked}) violations ({len(self.violations)})>"

    @property
    def ok(self):
        return len(self.violations) == 0


@log_enter_exit()
def validate_partition(labels, sites, grid, distances=None, sample=None, seed=0):
    """Check that each voxel carries the lowest-index closest site and,
    if given, that its distance value matches that site.

    Args:
        labels: LabelImage to check.
        sites: SiteSet the image claims to tessellate.
        grid: VoxelGrid of the image.
        distances: Optional DistanceImage to check alongside.
        sample: Check this many random voxels instead of all.
        seed: Seed of the voxel sample.

    Returns:
        PartitionReport.
    """

    if tuple(labels.grid.counts) != tuple(grid.counts):
        raise TessellateError(f"label image dims ({list(labels.grid.counts)}) do not match grid ({list(grid.counts)})")
    if distances is not None and tuple(distances.grid.counts) != tuple(grid.counts):
        raise TessellateError("distance image dims do not match grid")

    n_voxels = grid.n_voxels
    if sample is None or sample >= n_voxels:
        flat = np.arange(n_voxels)
    else:
        rng = np.random.default_rng(seed)
        flat = np.sort(rng.choice(n_voxels, size=int(sample), replace=False))

    kernel = ProximityKernel(sites, grid)
    found = labels.labels.reshape(-1)
    stored = None if distances is None else distances.values.reshape(-1)

    violations = []
    for a, b in voxel_chunks(flat.size, VOXEL_CHUNK):
        sel = flat[a:b]
        coords = grid.coords(sel)
        expected, _ = kernel.argmin(coords)
        got = found[sel].astype(np.int64)

        in_range = got < sites.n_sites
        bad_label = got != expected
        bad_distance = np.zeros(sel.size, dtype=bool)
        if stored is not None:
            own = kernel.values_to(coords, np.where(in_range, got, 0))
            if sites.kind == KIND_VORONOI:
                own = np.sqrt(own)
            bad_distance = in_range & ~np.isclose(stored[sel], own, rtol=DISTANCE_RTOL, atol=0.0)

        for j in np.flatnonzero(bad_label | bad_distance):
            reasons = []
            if not in_range[j]:
                reasons.append("range")
            elif bad_label[j]:
                reasons.append("label")
            if bad_distance[j]:
                reasons.append("distance")
            index = np.unravel_index(int(sel[j]), grid.counts)
            violations.append(Violation(sel[j], index, got[j], expected[j], reasons))

    report = PartitionReport(flat.size, violations)
    logger.debug(f"report ({report})")
    return report
