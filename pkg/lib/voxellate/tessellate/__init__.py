# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/__init__.py


"""Convience to make all items easily available.
"""


from .ball import ball_axes, scan_ball
from .brute import tessellate_brute
from .fast import tessellate_fast
from .image import (
    UNASSIGNED,
    DistanceImage,
    EvalCounters,
    LabelImage,
    TessellateError,
    cell_sizes,
)
from .kernel import ProximityKernel
from .registry import EngineRegistry, engine_registry
from .validate import PartitionReport, Violation, validate_partition
