# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/geometry/__init__.py


"""Convience to make all items easily available.
"""


from .domain import (
    BOUNDARIES,
    NON_PERIODIC,
    PERIODIC,
    Domain,
    GeometryError,
    VoxelGrid,
)
from .distance import (
    KIND_JOHNSON_MEHL,
    KIND_LAGUERRE,
    KIND_VORONOI,
    KINDS,
    GROWTH_KINDS,
    as_point,
    check_growth,
    axis_component_sq,
    distance_sq,
    euclidean_distance_sq,
    l_periodic_distance_sq,
    nearest_integer,
    power_distance,
    proximity,
    proximity_from_distance_sq,
    shifted_copies_distance_sq,
)
