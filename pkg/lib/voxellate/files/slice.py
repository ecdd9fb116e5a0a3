# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/files/slice.py


"""Raster export of 2-D images and of axis slices of 3-D images.

Labels become a PPM with one pseudo-color per site drawn from a seeded
palette; distances become a PGM scaled to the image maximum.
"""


import logging

import numpy as np
from PIL import Image

from ..misc import UsageError
from ..tessellate import LabelImage


logger = logging.getLogger(__name__)


class SliceError(UsageError):
    pass


def palette(n_colors, seed=0):
    """Return a (n_colors, 3) uint8 RGB palette."""

    rng = np.random.default_rng(seed)
    return rng.integers(0, 256, size=(max(1, n_colors), 3), dtype=np.uint8)


def slice_plane(values, axis=None, index=None):
    """Return the 2-D plane to export: the whole array when 2-D, else
    values[..., index, ...] along axis of a 3-D array.
    """

    if values.ndim == 2:
        return values
    if values.ndim != 3:
        raise SliceError(f"cannot export a slice of a {values.ndim}-D image")
    if axis == None or index == None:
        raise SliceError("3-D images need a slice axis and index")
    if not 0 <= axis < 3:
        raise SliceError(f"axis ({axis}) out of range [0, 3)")
    if not 0 <= index < values.shape[axis]:
        raise SliceError(f"index ({index}) out of range [0, {values.shape[axis]})")
    return np.take(values, index, axis=axis)


def export_slice(image, axis, index, path, palette_seed=0):
    """Write a raster of a LabelImage (PPM) or DistanceImage (PGM).

    Args:
        image: LabelImage or DistanceImage.
        axis: Slice axis (3-D only, else None).
        index: Voxel index along axis (3-D only, else None).
        path: Output path.
        palette_seed: Seed of the label palette.
    """

    if isinstance(image, LabelImage):
        plane = slice_plane(image.labels, axis, index)
        colors = palette(image.n_sites, palette_seed)
        raster = Image.fromarray(np.ascontiguousarray(colors[plane]))
    else:
        plane = slice_plane(image.values, axis, index)
        top = float(plane.max()) if plane.size else 0.0
        scaled = plane / top if top > 0 else np.zeros_like(plane)
        raster = Image.fromarray(np.round(scaled * 255.0).astype(np.uint8))

    raster.save(path, format="PPM")
    logger.debug(f"wrote path ({path}) size ({raster.size}) mode ({raster.mode})")
