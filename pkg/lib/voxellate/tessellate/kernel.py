# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/kernel.py


"""Blocked proximity evaluation shared by every engine and by the
partition checker.

Distances are accumulated axis by axis, in axis order, from the same
coordinate arrays (VoxelGrid.axis_centers()) and the same elementwise
operations. Whether the values come from a voxel-by-site block or from
a ball around one site, identical inputs therefore produce identical
bits, and the (value, site index) tie-break is shared exactly.
"""


import numpy as np

from ..geometry import axis_component_sq, proximity_from_distance_sq


BLOCK_ELEMENTS = 1 << 20


class ProximityKernel:
    """Proximity of voxels to the sites of a SiteSet."""

    def __init__(self, sites, grid, block_elements=BLOCK_ELEMENTS):
        self.sites = sites
        self.grid = grid
        self.kind = sites.kind
        self.growth = sites.growth
        self.positions = sites.positions
        self.births = sites.births
        self.lengths = grid.domain.lengths
        self.periodic = grid.domain.periodic
        self.block_elements = int(block_elements)

    def _finish(self, dist_sq, births):
        return proximity_from_distance_sq(self.kind, dist_sq, self.growth, births)

    def values(self, coords, sites_slice):
        """Return proximities (m, b) of m voxels to a slice of b sites.

        Args:
            coords: Per-axis coordinate arrays of shape (m,).
            sites_slice: Slice over site indices.
        """

        acc = None
        for axis, c in enumerate(coords):
            comp = axis_component_sq(
                c[:, None],
                self.positions[sites_slice, axis][None, :],
                self.lengths[axis],
                self.periodic,
            )
            acc = comp if acc is None else acc + comp
        return self._finish(acc, self.births[sites_slice][None, :])

    def values_to(self, coords, site_indices):
        """Return proximities (m,) of voxel j to site site_indices[j]."""

        acc = None
        for axis, c in enumerate(coords):
            comp = axis_component_sq(c, self.positions[site_indices, axis], self.lengths[axis], self.periodic)
            acc = comp if acc is None else acc + comp
        return self._finish(acc, self.births[site_indices])

    def box_values(self, axes_coords, s):
        """Return proximities of the voxels of an index box to site s.

        Args:
            axes_coords: Per-axis 1-D coordinate arrays of the box.
            s: Site index.

        Returns:
            d-dimensional array shaped by the box.
        """

        d = len(axes_coords)
        acc = None
        for axis, c in enumerate(axes_coords):
            shape = [1] * d
            shape[axis] = -1
            comp = axis_component_sq(c.reshape(shape), self.positions[s, axis], self.lengths[axis], self.periodic)
            acc = comp if acc is None else acc + comp
        return self._finish(acc, self.births[s])

    def argmin(self, coords):
        """Return (labels, values) of the closest site for each voxel;
        exact ties go to the lowest site index.
        """

        m = coords[0].size
        n = self.positions.shape[0]
        best = np.full(m, np.inf)
        labels = np.zeros(m, dtype=np.int64)
        if m == 0:
            return labels, best

        block = max(1, self.block_elements // m)
        rows = np.arange(m)
        for start in range(0, n, block):
            vals = self.values(coords, slice(start, min(n, start + block)))
            j = np.argmin(vals, axis=1)
            v = vals[rows, j]
            better = v < best
            best[better] = v[better]
            labels[better] = j[better] + start
        return labels, best
