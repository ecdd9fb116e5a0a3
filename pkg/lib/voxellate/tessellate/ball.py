# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/ball.py


"""Enumeration of the voxels whose centers lie in a ball.
"""


import numpy as np

from ..geometry import GeometryError, as_point, axis_component_sq


def ball_axes(center, radius, grid):
    """Return per-axis voxel index arrays of a box covering the ball.

    The box is the index range of centers within radius of the center
    on each axis, widened by one voxel. In periodic mode indices wrap
    modulo n_i and an axis is taken whole once the box spans it; in
    non-periodic mode the box is clipped to the grid and may be empty.
    """

    periodic = grid.domain.periodic
    spacing = grid.spacing
    axes = []
    for axis, n in enumerate(grid.counts):
        h = spacing[axis]
        c = center[axis]
        lo = np.floor((c - radius) / h - 0.5) - 1
        hi = np.ceil((c + radius) / h - 0.5) + 1
        if periodic:
            if hi - lo + 1 >= n:
                idx = np.arange(n)
            else:
                idx = np.arange(int(lo), int(hi) + 1) % n
        else:
            lo = max(lo, 0.0)
            hi = min(hi, n - 1.0)
            if hi < lo:
                idx = np.arange(0)
            else:
                idx = np.arange(int(lo), int(hi) + 1)
        axes.append(idx)
    return axes


def scan_ball(center, radius, grid):
    """Yield the multi-index of every voxel whose center is within
    radius of center, each exactly once.

    Args:
        center: Ball center; any point of space in periodic mode.
        radius: Non-negative radius.
        grid: VoxelGrid to enumerate.
    """

    center = as_point(center, grid.d)
    if not radius >= 0:
        raise GeometryError(f"radius ({radius}) must be non-negative")

    axes = ball_axes(center, radius, grid)
    if any(idx.size == 0 for idx in axes):
        return

    acc = None
    for axis, idx in enumerate(axes):
        shape = [1] * grid.d
        shape[axis] = -1
        comp = axis_component_sq(
            grid.axis_centers(axis)[idx].reshape(shape),
            center[axis],
            grid.domain.lengths[axis],
            grid.domain.periodic,
        )
        acc = comp if acc is None else acc + comp

    inside = acc <= radius * radius
    for pos in zip(*np.nonzero(inside)):
        yield tuple(int(axes[axis][p]) for axis, p in enumerate(pos))
