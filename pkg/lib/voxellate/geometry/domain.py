# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/geometry/domain.py


"""The rectangular domain and the regular voxel grid laid over it.

The domain is the box [0, L_1) x ... x [0, L_d). Voxel k (0-based
multi-index) has its center at x(k)_i = (k_i + 1/2) L_i / n_i, so all
centers are strictly inside the box.
"""


import logging

import numpy as np

from ..misc import UsageError


logger = logging.getLogger(__name__)


PERIODIC = "periodic"
NON_PERIODIC = "non-periodic"

BOUNDARIES = [
    PERIODIC,
    NON_PERIODIC,
]


class GeometryError(UsageError):
    pass


class Domain:
    """d-dimensional rectangular box with a boundary mode."""

    def __init__(self, lengths, boundary=PERIODIC):
        lengths = np.array(lengths, dtype=np.float64, ndmin=1)
        if lengths.ndim != 1 or lengths.size < 1:
            raise GeometryError("lengths must be a non-empty vector")
        if not np.all(np.isfinite(lengths)) or np.any(lengths <= 0):
            raise GeometryError(f"lengths ({lengths.tolist()}) must be positive")
        if boundary not in BOUNDARIES:
            raise GeometryError(f"boundary ({boundary}) not one of {BOUNDARIES}")

        lengths.flags.writeable = False
        self.lengths = lengths
        self.boundary = boundary

    def __eq__(self, other):
        return (
            isinstance(other, Domain)
            and self.boundary == other.boundary
            and np.array_equal(self.lengths, other.lengths)
        )

    def __repr__(self):
        return (
            f"<{self.__module__}.{self.__class__.__name__} lengths ({self.lengths.tolist()})"
            f" boundary ({self.boundary})>"
        )

    @property
    def d(self):
        return self.lengths.size

    @property
    def diagonal(self):
        """Length of the box diagonal."""
        return float(np.sqrt(np.sum(self.lengths**2)))

    @property
    def max_distance(self):
        """Largest distance between two points of the domain under the
        boundary mode's metric.
        """
        if self.periodic:
            return 0.5 * self.diagonal
        return self.diagonal

    @property
    def periodic(self):
        return self.boundary == PERIODIC

    @property
    def volume(self):
        return float(np.prod(self.lengths))

    def contains(self, points):
        """Return a boolean per point: inside [0, L_1) x ... x [0, L_d)."""

        points = np.asarray(points, dtype=np.float64)
        if points.ndim == 1:
            points = points[None, :]
        if points.shape[-1] != self.d:
            raise GeometryError(f"points of dimension ({points.shape[-1]}) for domain of dimension ({self.d})")
        return np.all((points >= 0.0) & (points < self.lengths), axis=-1)


class VoxelGrid:
    """Regular grid of n_1 x ... x n_d voxels over a domain."""

    def __init__(self, counts, domain):
        counts = tuple(int(n) for n in np.array(counts, ndmin=1).tolist())
        if len(counts) != domain.d:
            raise GeometryError(f"grid has ({len(counts)}) axes, domain has ({domain.d})")
        if any(n < 1 for n in counts):
            raise GeometryError(f"voxel counts ({list(counts)}) must be positive")

        self.counts = counts
        self.domain = domain
        self._centers = {}

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__} counts ({list(self.counts)}) domain ({self.domain})>"

    @property
    def d(self):
        return self.domain.d

    @property
    def n_voxels(self):
        return int(np.prod(self.counts, dtype=np.int64))

    @property
    def shape(self):
        return self.counts

    @property
    def spacing(self):
        return self.domain.lengths / np.asarray(self.counts, dtype=np.float64)

    def axis_centers(self, axis):
        """Return the (read-only) center coordinates along an axis.

        All engines take voxel coordinates from here so that they see
        identical floating point values.
        """

        centers = self._centers.get(axis)
        if centers is None:
            n = self.counts[axis]
            centers = (np.arange(n, dtype=np.float64) + 0.5) * (self.domain.lengths[axis] / n)
            centers.flags.writeable = False
            self._centers[axis] = centers
        return centers

    def center(self, index):
        """Return the center of the voxel at a multi-index."""

        if len(index) != self.d:
            raise GeometryError(f"index ({index}) has wrong dimension")
        for k, n in zip(index, self.counts):
            if not 0 <= k < n:
                raise GeometryError(f"index ({index}) outside grid ({list(self.counts)})")
        return np.array([self.axis_centers(i)[k] for i, k in enumerate(index)])

    def coords(self, flat):
        """Return per-axis center coordinates for flat (C-order) voxel
        indices.
        """

        index = self.unravel(flat)
        return [self.axis_centers(i)[index[i]] for i in range(self.d)]

    def unravel(self, flat):
        return np.unravel_index(np.asarray(flat, dtype=np.int64), self.counts)
