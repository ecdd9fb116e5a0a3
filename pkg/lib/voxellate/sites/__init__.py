# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/sites/__init__.py


"""Convience to make all items easily available.
"""


from .base import LaguerreSpheres, SiteError, SiteSet
from .convert import shift_time_reference, spheres_from_timed_sites, spheres_to_timed_sites
from .generate import generate_uniform_sites
from .prune import prune_ineffective_sites
