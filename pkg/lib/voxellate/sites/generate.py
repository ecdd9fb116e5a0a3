# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/sites/generate.py


"""Uniform (Poisson) site generation.
"""


import logging

import numpy as np

from ..geometry import GROWTH_KINDS, KIND_VORONOI, KINDS
from ..misc import log_enter_exit
from .base import SiteError, SiteSet


logger = logging.getLogger(__name__)


def _half_open(values, upper):
    """Clamp values into [0, upper); rounding of u * upper can reach upper."""

    return np.minimum(values, np.nextafter(upper, 0.0))


@log_enter_exit()
def generate_uniform_sites(domain, n_sites, kind=KIND_VORONOI, growth=None, horizon=1.0, seed=0):
    """Generate sites i.i.d. uniform over the domain.

    Args:
        domain: Domain to fill.
        n_sites: Number of sites (>= 1).
        kind: Tessellation kind.
        growth: Growth rate G (johnson-mehl and laguerre).
        horizon: Birth times are uniform over [0, horizon).
        seed: Seed of the numpy generator; equal seeds give equal sites.
    """

    if kind not in KINDS:
        raise SiteError(f"kind ({kind}) not one of {KINDS}")
    if int(n_sites) != n_sites or n_sites < 1:
        raise SiteError(f"number of sites ({n_sites}) must be a positive integer")
    n_sites = int(n_sites)

    rng = np.random.default_rng(seed)
    positions = _half_open(rng.random((n_sites, domain.d)) * domain.lengths, domain.lengths)

    if kind not in GROWTH_KINDS:
        sites = SiteSet(kind, positions)
    else:
        if horizon == None or not np.isfinite(horizon) or horizon <= 0:
            raise SiteError(f"time horizon ({horizon}) must be positive")
        births = _half_open(rng.random(n_sites) * horizon, float(horizon))
        sites = SiteSet(kind, positions, births, growth)

    logger.debug(f"generated kind ({kind}) n_sites ({n_sites}) seed ({seed})")
    return sites
