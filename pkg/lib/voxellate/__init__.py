# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/__init__.py

"""Voxel images of Voronoi, Johnson-Mehl and Laguerre tessellations.

Provides the geometry, site sets, cost models and rasterization
engines, plus the file formats and command line used to drive them.
"""
