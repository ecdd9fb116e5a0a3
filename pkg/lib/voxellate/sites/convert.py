# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/sites/convert.py


"""Conversions between sphere radii and birth times, and changes of the
time reference.

A sphere of radius r_s maps to the birth time t_s = -r_s^2 / G. Then
d^2 / G + t_s = (d^2 - r_s^2) / G, so the Laguerre proximity orders
sites exactly as the power distance does. Shifting all birth times by
the same t_ref never changes an argmin.
"""


import numpy as np

from ..geometry import GROWTH_KINDS, KIND_LAGUERRE
from .base import LaguerreSpheres, SiteError, SiteSet


def shift_time_reference(sites, t_ref):
    """Return sites with birth times t_s - t_ref."""

    if sites.kind not in GROWTH_KINDS:
        raise SiteError(f"kind ({sites.kind}) has no birth times")
    if t_ref == 0:
        return sites
    return sites.with_births(sites.births - float(t_ref))


def spheres_from_timed_sites(sites, t_ref=None):
    """Return the spheres of Laguerre sites: r_s = sqrt(G (t_ref - t_s)).

    Args:
        sites: Laguerre SiteSet.
        t_ref: Time reference; defaults to the latest birth time (which
            gets radius 0). Must not be before any birth time.
    """

    if sites.kind != KIND_LAGUERRE:
        raise SiteError(f"kind ({sites.kind}) is not {KIND_LAGUERRE}")
    if t_ref == None:
        t_ref = float(np.max(sites.births))
    gaps = t_ref - sites.births
    if np.any(gaps < 0):
        raise SiteError(f"time reference ({t_ref}) before a birth time")
    return LaguerreSpheres(sites.positions, np.sqrt(sites.growth * gaps))


def spheres_to_timed_sites(spheres, growth):
    """Return Laguerre sites with t_s = -r_s^2 / G."""

    if growth == None or not np.isfinite(growth) or growth <= 0:
        raise SiteError(f"growth rate ({growth}) must be positive")
    births = -(spheres.radii**2) / growth
    return SiteSet(KIND_LAGUERRE, spheres.positions, births, growth)
