# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/files/__init__.py


"""File formats: site files, binary images, raster slices and
metrics.
"""


from .text import ParsingError
from .image import (
    FORMAT_VERSION,
    FormatError,
    read_distance_image,
    read_header,
    read_label_image,
    sidecar_path,
    write_distance_image,
    write_label_image,
)
from .metrics import METRICS_COLUMNS, emit_metrics, metrics_row, read_metrics
from .sites import SiteFileEditor, SiteFileParser, read_site_file, write_site_file
from .slice import SliceError, export_slice, palette, slice_plane
