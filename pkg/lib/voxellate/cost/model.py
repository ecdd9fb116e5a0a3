# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/cost/model.py


"""Analytic cost models.

Voronoi, common ball volume v0 (periodic, balls smaller than the
domain):

    E(n_step1 + n_step2) = N_s N_v (v0 / V + (1 - v0 / V)^N_s)

minimized by v0 / V = 1 - (1 / N_s)^(1 / (N_s - 1)), which tends to
ln N_s / N_s, with a total of about N_v (ln N_s + 1).

Johnson-Mehl and Laguerre, per-site ball volumes v_s approximated by
v'_s = min(V, v_s):

    E(n_step1 + n_step2) = N_v sum_s v'_s / V + N_s N_v prod_s (1 - v'_s / V)

The non-periodic case uses the same expressions (an upper bound for
step 1 that tightens as N_s grows).
"""


import logging

import numpy as np
from scipy.special import gamma

from ..geometry import KIND_JOHNSON_MEHL, KIND_LAGUERRE
from ..misc import UsageError


logger = logging.getLogger(__name__)


class CostError(UsageError):
    pass


class CostModel:
    """Sizes entering the cost expressions."""

    def __init__(self, n_voxels, n_sites, volume, d=None):
        if n_voxels < 1 or n_sites < 1 or not volume > 0:
            raise CostError(
                f"n_voxels ({n_voxels}), n_sites ({n_sites}) and volume ({volume}) must be positive"
            )
        self.n_voxels = int(n_voxels)
        self.n_sites = int(n_sites)
        self.volume = float(volume)
        self.d = d

    def __repr__(self):
        return (
            f"<{self.__module__}.{self.__class__.__name__} n_voxels ({self.n_voxels})"
            f" n_sites ({self.n_sites}) volume ({self.volume})>"
        )

    @classmethod
    def from_grid(cls, grid, n_sites):
        return cls(grid.n_voxels, n_sites, grid.domain.volume, grid.d)


def unit_ball_volume(d):
    """Volume of the d-dimensional unit ball."""

    if d < 1:
        raise CostError(f"dimension ({d}) must be positive")
    return float(np.pi ** (d / 2.0) / gamma(d / 2.0 + 1.0))


def ball_volume(r, d):
    """Volume pi^(d/2) r^d / Gamma(d/2 + 1); vectorized over r."""

    r = np.asarray(r, dtype=np.float64)
    if np.any(r < 0):
        raise CostError("radius must be non-negative")
    v = unit_ball_volume(d) * r**d
    return float(v) if v.ndim == 0 else v


def radius_from_volume(v, d):
    """Inverse of ball_volume()."""

    v = np.asarray(v, dtype=np.float64)
    if np.any(v < 0):
        raise CostError("volume must be non-negative")
    r = (v / unit_ball_volume(d)) ** (1.0 / d)
    return float(r) if r.ndim == 0 else r


def optimal_v0(n_sites, volume):
    """Ball volume minimizing the Voronoi cost:
    V (1 - (1 / N_s)^(1 / (N_s - 1))).
    """

    if n_sites < 2:
        raise CostError(f"optimal ball volume needs at least 2 sites, got ({n_sites})")
    # 1 - exp(-ln N / (N - 1)) without cancellation
    return float(-volume * np.expm1(-np.log(n_sites) / (n_sites - 1.0)))


def asymptotic_v0(n_sites, volume):
    """Large N_s approximation V ln N_s / N_s of optimal_v0()."""

    if n_sites < 2:
        raise CostError(f"needs at least 2 sites, got ({n_sites})")
    return float(volume * np.log(n_sites) / n_sites)


def optimal_r0(n_sites, domain):
    """Radius of the optimal Voronoi investigation ball.

    A single site needs no search: the ball covers the whole domain.
    """

    if n_sites < 2:
        return domain.max_distance
    return radius_from_volume(optimal_v0(n_sites, domain.volume), domain.d)


def voronoi_cost_terms(v0, model):
    """Return (step1, step2) predicted evaluation counts."""

    if not 0 < v0 <= model.volume:
        raise CostError(f"ball volume ({v0}) outside (0, {model.volume}]")
    frac = v0 / model.volume
    scale = float(model.n_sites) * model.n_voxels
    with np.errstate(divide="ignore"):
        outside = np.exp(model.n_sites * np.log1p(-frac))
    return scale * frac, scale * float(outside)


def voronoi_cost(v0, model):
    """Predicted N_s N_v (v0 / V + (1 - v0 / V)^N_s)."""

    step1, step2 = voronoi_cost_terms(v0, model)
    return step1 + step2


def optimal_voronoi_cost(model):
    """Closed-form cost at optimal_v0()."""

    n = model.n_sites
    if n < 2:
        raise CostError(f"needs at least 2 sites, got ({n})")
    p = np.exp(-np.log(n) / (n - 1.0))
    return float(model.n_voxels) * n * float(1.0 + p * (1.0 / n - 1.0))


def asymptotic_voronoi_cost(n_voxels, n_sites):
    """Large N_s approximation N_v (ln N_s + 1)."""

    if n_sites < 2:
        raise CostError(f"needs at least 2 sites, got ({n_sites})")
    return float(n_voxels) * (float(np.log(n_sites)) + 1.0)


def growth_radii(t0, sites):
    """Ball radii at fictitious time t0: G (t0 - t_s)^+ (johnson-mehl)
    or sqrt(G (t0 - t_s)^+) (laguerre).
    """

    gaps = np.maximum(t0 - sites.births, 0.0)
    if sites.kind == KIND_JOHNSON_MEHL:
        return sites.growth * gaps
    elif sites.kind == KIND_LAGUERRE:
        return np.sqrt(sites.growth * gaps)
    raise CostError(f"kind ({sites.kind}) has no growth radii")


def growth_cost_terms(t0, sites, grid):
    """Return (step1, step2) predicted evaluation counts at t0."""

    volume = grid.domain.volume
    n_voxels = float(grid.n_voxels)
    frac = np.minimum(ball_volume(growth_radii(t0, sites), grid.d), volume) / volume
    frac = np.atleast_1d(frac)

    step1 = n_voxels * float(np.sum(frac))
    with np.errstate(divide="ignore"):
        outside = float(np.exp(np.sum(np.log1p(-frac))))
    step2 = sites.n_sites * n_voxels * outside
    return step1, step2


def growth_cost(t0, sites, grid):
    """Predicted total evaluations of the Johnson-Mehl/Laguerre engine
    at fictitious time t0.
    """

    step1, step2 = growth_cost_terms(t0, sites, grid)
    return step1 + step2
