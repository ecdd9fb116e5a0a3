# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/files/image.py


"""Binary image files with JSON sidecar headers.

Payloads are little-endian: labels as uint32, distances as float64.
Voxels are stored with axis 1 varying fastest (Fortran order of the
(n_1, ..., n_d) array). The header, stored next to the payload
(<name>.json for <name>.bin, else <path>.json), records:

    format_version, type, dtype, d, dims, lengths, boundary, kind,
    n_sites, seed
"""


import json
import logging
import os.path

import numpy as np

from ..geometry import Domain, VoxelGrid
from ..tessellate import DistanceImage, LabelImage


logger = logging.getLogger(__name__)


FORMAT_VERSION = 1
ORDER = "F"

TYPE_LABELS = "labels"
TYPE_DISTANCES = "distances"

DTYPES = {
    TYPE_LABELS: "<u4",
    TYPE_DISTANCES: "<f8",
}

HEADER_KEYS = [
    "format_version",
    "type",
    "dtype",
    "d",
    "dims",
    "lengths",
    "boundary",
    "kind",
    "n_sites",
    "seed",
]


class FormatError(Exception):
    pass


def sidecar_path(path):
    """Return the header path for a payload path."""

    root, ext = os.path.splitext(path)
    if ext == ".bin":
        return root + ".json"
    return path + ".json"


def _header(imagetype, grid, kind, n_sites, seed):
    return {
        "format_version": FORMAT_VERSION,
        "type": imagetype,
        "dtype": DTYPES[imagetype],
        "d": grid.d,
        "dims": list(grid.counts),
        "lengths": grid.domain.lengths.tolist(),
        "boundary": grid.domain.boundary,
        "kind": kind,
        "n_sites": n_sites,
        "seed": seed,
    }


def _write(path, header, values):
    payload = np.asarray(values).astype(header["dtype"]).ravel(order=ORDER)
    with open(path, "wb") as f:
        f.write(payload.tobytes())
    with open(sidecar_path(path), "wt", encoding="utf-8") as f:
        json.dump(header, f, indent=2)
        f.write("\n")
    logger.debug(f"wrote path ({path}) type ({header['type']}) bytes ({payload.nbytes})")


def read_header(path):
    """Return the header dict of the image at path."""

    try:
        with open(sidecar_path(path), "rt", encoding="utf-8") as f:
            header = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise FormatError(f"bad header for ({path}): {e}")

    if not isinstance(header, dict):
        raise FormatError(f"bad header for ({path})")
    missing = [key for key in HEADER_KEYS if key not in header]
    if missing:
        raise FormatError(f"header for ({path}) misses keys ({missing})")
    if header["format_version"] != FORMAT_VERSION:
        raise FormatError(f"unsupported format version ({header['format_version']})")
    if header["type"] not in DTYPES or header["dtype"] != DTYPES[header["type"]]:
        raise FormatError(f"bad type ({header['type']}) / dtype ({header['dtype']})")
    if len(header["dims"]) != header["d"] or len(header["lengths"]) != header["d"]:
        raise FormatError(f"dims/lengths do not match d ({header['d']})")
    return header


def _read(path, imagetype):
    header = read_header(path)
    if header["type"] != imagetype:
        raise FormatError(f"({path}) holds ({header['type']}), not ({imagetype})")

    try:
        grid = VoxelGrid(header["dims"], Domain(header["lengths"], header["boundary"]))
    except Exception as e:
        raise FormatError(f"bad geometry in header for ({path}): {e}")

    values = np.fromfile(path, dtype=header["dtype"])
    if values.size != grid.n_voxels or os.path.getsize(path) != grid.n_voxels * values.itemsize:
        raise FormatError(f"payload of ({path}) has ({values.size}) values, header dims need ({grid.n_voxels})")
    return header, grid, values.reshape(grid.shape, order=ORDER)


def write_label_image(path, image, seed=None):
    """Write a LabelImage and its header."""

    _write(path, _header(TYPE_LABELS, image.grid, image.kind, image.n_sites, seed), image.labels)


def write_distance_image(path, image, n_sites=None, seed=None):
    """Write a DistanceImage and its header."""

    _write(path, _header(TYPE_DISTANCES, image.grid, image.kind, n_sites, seed), image.values)


def read_label_image(path):
    """Return the LabelImage stored at path."""

    header, grid, values = _read(path, TYPE_LABELS)
    return LabelImage(grid, values, header["kind"], header["n_sites"])


def read_distance_image(path):
    """Return the DistanceImage stored at path."""

    header, grid, values = _read(path, TYPE_DISTANCES)
    return DistanceImage(grid, values, header["kind"])
