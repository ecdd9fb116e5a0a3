# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/cost/__init__.py


"""Cost models: predicted numbers of proximity evaluations of the
two-step algorithm, and the choice of investigation-ball sizes that
minimizes them.
"""


from .model import (
    CostError,
    CostModel,
    asymptotic_v0,
    asymptotic_voronoi_cost,
    ball_volume,
    growth_cost,
    growth_cost_terms,
    growth_radii,
    optimal_r0,
    optimal_v0,
    optimal_voronoi_cost,
    radius_from_volume,
    unit_ball_volume,
    voronoi_cost,
    voronoi_cost_terms,
)
from .search import (
    REFINE_ITERATIONS,
    SCAN_POINTS,
    cost_curve,
    predicted_cost,
    search_optimal_t0,
    t0_bracket,
)
