# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/image.py


"""Result types of the engines: label image, distance image and
evaluation counters.
"""


import numpy as np

from ..geometry import KIND_VORONOI
from ..misc import UsageError


LABEL_DTYPE = np.uint32
DISTANCE_DTYPE = np.float64

# label of voxels not yet reached in step 1
UNASSIGNED = np.iinfo(LABEL_DTYPE).max


class TessellateError(UsageError):
    pass


class LabelImage:
    """Per-voxel winning site index, shaped like the grid."""

    def __init__(self, grid, labels, kind, n_sites):
        labels = np.asarray(labels, dtype=LABEL_DTYPE).reshape(grid.shape)
        self.grid = grid
        self.labels = labels
        self.kind = kind
        self.n_sites = int(n_sites)

    def __eq__(self, other):
        return (
            isinstance(other, LabelImage)
            and self.grid.counts == other.grid.counts
            and self.grid.domain == other.grid.domain
            and self.kind == other.kind
            and self.n_sites == other.n_sites
            and np.array_equal(self.labels, other.labels)
        )

    def __repr__(self):
        return (
            f"<{self.__module__}.{self.__class__.__name__} dims ({list(self.grid.counts)})"
            f" kind ({self.kind}) n_sites ({self.n_sites})>"
        )

    def is_complete(self):
        """Return True if every voxel carries a site index in [0, N_s)."""

        return bool(np.all(self.labels < self.n_sites))


class DistanceImage:
    """Per-voxel proximity to the winning site.

    For voronoi the values are true distances (the Euclidean distance
    transform of the site set); for johnson-mehl and laguerre they are
    the arrival times d / G + t_s and d^2 / G + t_s.
    """

    def __init__(self, grid, values, kind):
        self.grid = grid
        self.values = np.asarray(values, dtype=DISTANCE_DTYPE).reshape(grid.shape)
        self.kind = kind

    def __eq__(self, other):
        return (
            isinstance(other, DistanceImage)
            and self.grid.counts == other.grid.counts
            and self.grid.domain == other.grid.domain
            and self.kind == other.kind
            and np.array_equal(self.values, other.values)
        )

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__} dims ({list(self.grid.counts)}) kind ({self.kind})>"

    @classmethod
    def from_proximity(cls, grid, proximity, kind):
        """Build from engine proximities (squared distances for voronoi)."""

        if kind == KIND_VORONOI:
            proximity = np.sqrt(proximity)
        return cls(grid, proximity, kind)


class EvalCounters:
    """Exact tallies of proximity evaluations.

    Attributes:
        step1_evals: Evaluations inside the investigation balls.
        step2_evals: Evaluations of the full scan of unassigned voxels.
        param_name: "r0", "t0" or None (brute force).
        param: Value of the ball parameter used.
        model_step12: Total predicted by the cost model, if known.
    """

    def __init__(self, step1_evals=0, step2_evals=0, param_name=None, param=None, model_step12=None):
        self.step1_evals = int(step1_evals)
        self.step2_evals = int(step2_evals)
        self.param_name = param_name
        self.param = param
        self.model_step12 = model_step12

    def __repr__(self):
        return (
            f"<{self.__module__}.{self.__class__.__name__} step1 ({self.step1_evals})"
            f" step2 ({self.step2_evals}) {self.param_name} ({self.param})>"
        )

    @property
    def total(self):
        return self.step1_evals + self.step2_evals


def cell_sizes(labels):
    """Return the number of voxels owned by each site."""

    return np.bincount(labels.labels.ravel(), minlength=labels.n_sites)
