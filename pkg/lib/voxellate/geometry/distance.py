# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/geometry/distance.py


"""Euclidean and L-periodic distances, and the proximity functions of
the three tessellation kinds.

The L-periodic distance is computed per axis with the nearest integer
function N(x) = floor(x + 1/2):

    d_L^2(a, b) = sum_i (D_i - N(D_i / L_i) L_i)^2,  D = b - a

which is exact for orthogonal, axis-aligned periods and valid for
points anywhere in space (not only inside the unit cell).

Squared distances are used end to end; Johnson-Mehl takes the one
square root it needs in proximity_from_distance_sq().
"""


import itertools

import numpy as np

from .domain import GeometryError


KIND_VORONOI = "voronoi"
KIND_JOHNSON_MEHL = "johnson-mehl"
KIND_LAGUERRE = "laguerre"

KINDS = [
    KIND_VORONOI,
    KIND_JOHNSON_MEHL,
    KIND_LAGUERRE,
]

# kinds whose proximity carries a growth rate and birth times
GROWTH_KINDS = [
    KIND_JOHNSON_MEHL,
    KIND_LAGUERRE,
]


def as_point(a, d=None):
    """Return a as a 1-D float array, optionally checking dimension."""

    a = np.array(a, dtype=np.float64, ndmin=1)
    if a.ndim != 1:
        raise GeometryError("point must be a vector")
    if d != None and a.size != d:
        raise GeometryError(f"point dimension ({a.size}) does not match ({d})")
    return a


def _pair(a, b):
    a = as_point(a)
    b = as_point(b, a.size)
    return a, b


def nearest_integer(x):
    """Nearest integer function N(x) = floor(x + 1/2); ties go up."""

    return np.floor(np.asarray(x, dtype=np.float64) + 0.5)


def axis_component_sq(coords, site_coord, length, periodic):
    """Squared per-axis component between coordinates and a site
    coordinate.

    Elementwise and broadcasting; every engine builds its distances from
    this function so that identical inputs give identical bits.
    """

    delta = coords - site_coord
    if periodic:
        delta = delta - np.floor(delta / length + 0.5) * length
    return delta * delta


def euclidean_distance_sq(a, b):
    """Return sum_i (a_i - b_i)^2."""

    a, b = _pair(a, b)
    return float(np.sum((a - b) ** 2))


def l_periodic_distance_sq(a, b, domain):
    """Return the squared L-periodic distance between a and b."""

    a, b = _pair(a, b)
    if b.size != domain.d:
        raise GeometryError(f"point dimension ({b.size}) does not match domain ({domain.d})")
    if not domain.periodic:
        raise GeometryError("L-periodic distance needs a periodic domain")

    lengths = domain.lengths
    delta = b - a
    delta = delta - nearest_integer(delta / lengths) * lengths
    return float(np.sum(delta * delta))


def shifted_copies_distance_sq(a, b, domain):
    """Return the minimum squared Euclidean distance between a and the
    3^d copies b + k L, k in {-1, 0, 1}^d.

    Equals the L-periodic distance when both points lie in the unit
    cell.
    """

    a, b = _pair(a, b)
    lengths = domain.lengths
    best = np.inf
    for shift in itertools.product((-1.0, 0.0, 1.0), repeat=domain.d):
        best = min(best, euclidean_distance_sq(a, b + np.asarray(shift) * lengths))
    return float(best)


def distance_sq(a, b, domain):
    """Return the squared distance under the domain's boundary mode."""

    if domain.periodic:
        return l_periodic_distance_sq(a, b, domain)
    a, b = _pair(a, b)
    if a.size != domain.d:
        raise GeometryError(f"point dimension ({a.size}) does not match domain ({domain.d})")
    return euclidean_distance_sq(a, b)


def check_growth(kind, growth):
    """Raise unless growth is valid for kind."""

    if kind not in KINDS:
        raise GeometryError(f"kind ({kind}) not one of {KINDS}")
    if kind in GROWTH_KINDS:
        if growth == None or not np.isfinite(growth) or growth <= 0:
            raise GeometryError(f"kind ({kind}) needs a positive growth rate, got ({growth})")


def proximity_from_distance_sq(kind, dist_sq, growth=None, births=0.0):
    """Convert squared distances to proximity values.

    voronoi: d^2; johnson-mehl: d / G + t_s; laguerre: d^2 / G + t_s.
    Smaller is closer.
    """

    if kind == KIND_VORONOI:
        return dist_sq
    elif kind == KIND_JOHNSON_MEHL:
        return np.sqrt(dist_sq) / growth + births
    elif kind == KIND_LAGUERRE:
        return dist_sq / growth + births
    raise GeometryError(f"kind ({kind}) not one of {KINDS}")


def proximity(kind, a, site_position, domain, growth=None, birth=0.0):
    """Return the proximity of point a to a site.

    Args:
        kind: Tessellation kind.
        a: Query point.
        site_position: Position of the site.
        domain: Domain providing the metric (boundary mode).
        growth: Growth rate G (johnson-mehl and laguerre only).
        birth: Birth time t_s of the site.
    """

    check_growth(kind, growth)
    return float(proximity_from_distance_sq(kind, distance_sq(a, site_position, domain), growth, birth))


def power_distance(a, center, radius, domain):
    """Return the power distance d^2(a, center) - radius^2."""

    return distance_sq(a, center, domain) - float(radius) ** 2
