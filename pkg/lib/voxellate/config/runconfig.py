# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/config/runconfig.py


"""Run configuration.
"""


import os.path

import numpy as np

from ..geometry import BOUNDARIES, GROWTH_KINDS, KIND_VORONOI, KINDS
from . import value
from .base import Config, ConfigError


CONFIG_YAML = os.path.join(os.path.dirname(__file__), "config.yaml")

ENGINES = [
    "brute",
    "fast",
]


class RunConfig(Config):
    """One tessellation run: geometry, sites, engine and outputs."""

    ENV_PREFIX = "VOXELLATE_"

    kind = value.Choice(KINDS, default=KIND_VORONOI)
    dims = value.PositiveIntegerList()
    lengths = value.PositiveFloatList()
    boundary = value.Choice(BOUNDARIES, default=BOUNDARIES[0])
    n_sites = value.PositiveInteger(default=None)
    site_counts = value.PositiveIntegerList()
    site_file = value.String(default=None)
    growth = value.PositiveFloat(default=None)
    horizon = value.PositiveFloat(default=1.0)
    seed = value.NonNegativeInteger()
    engine = value.Choice(ENGINES, default="fast")
    r0 = value.PositiveFloat(default=None)
    t0 = value.Float(default=None)
    prune = value.Boolean(default=True)
    output = value.String(default="voxellate")
    threads = value.PositiveInteger(default=1)
    slice = value.String(default=None)
    sweep = value.String(default=None)
    palette_seed = value.NonNegativeInteger()

    @classmethod
    def from_defaults(cls, environ=None):
        """Return a RunConfig with packaged defaults, then environment
        overrides.
        """

        config = cls()
        config.load_options(CONFIG_YAML)
        config.load_env(environ)
        return config

    def check(self):
        """Cross-field checks; raise ConfigError."""

        self.check_geometry()
        if (self.n_sites == None) == (self.site_file == None):
            raise ConfigError("give exactly one of a site count or a site file")
        if self.site_file == None and self.kind in GROWTH_KINDS and self.growth == None:
            raise ConfigError(f"kind ({self.kind}) needs a growth rate")
        self.check_param(self.kind)
        self.check_slice()
        self.get_sweep()

    def check_benchmark(self):
        """Checks of an engine benchmark over site counts; raise
        ConfigError.
        """

        self.check_geometry()
        if self.site_counts == None:
            raise ConfigError("site counts are required")
        if self.kind in GROWTH_KINDS and self.growth == None:
            raise ConfigError(f"kind ({self.kind}) needs a growth rate")
        self.check_param(self.kind)

    def check_geometry(self):
        """Check dims and lengths."""

        if self.dims == None:
            raise ConfigError("dims are required")
        if self.lengths != None and len(self.lengths) != len(self.dims):
            raise ConfigError(f"({len(self.lengths)}) lengths for ({len(self.dims)}) dims")

    def check_slice(self):
        """Check the slice against dims: "all" exports a 2-D image,
        AXIS:INDEX a plane of a 3-D one.
        """

        plane = self.get_slice()
        if plane == None:
            return
        d = len(self.dims)
        axis, index = plane
        if axis == None:
            if d != 2:
                raise ConfigError(f"slice all needs a 2-D grid, not {d}-D")
            return
        if d != 3:
            raise ConfigError(f"slice AXIS:INDEX needs a 3-D grid, not {d}-D")
        if not 0 <= axis < 3:
            raise ConfigError(f"slice axis ({axis}) out of range [0, 3)")
        if not 0 <= index < self.dims[axis]:
            raise ConfigError(f"slice index ({index}) out of range [0, {self.dims[axis]})")

    def check_param(self, kind):
        """Check that ball-parameter overrides and sweeps suit kind."""

        if kind == KIND_VORONOI and self.t0 != None:
            raise ConfigError("t0 applies to johnson-mehl and laguerre only")
        if kind in GROWTH_KINDS and self.r0 != None:
            raise ConfigError("r0 applies to voronoi only")
        sweep = self.get_sweep()
        if sweep != None and sweep[0] != self.param_name(kind):
            raise ConfigError(f"sweep of ({sweep[0]}) does not apply to kind ({kind})")

    def get_lengths(self):
        """Return lengths, the unit box if unset."""

        if self.lengths == None:
            return [1.0] * len(self.dims)
        return self.lengths

    def get_override(self, kind):
        """Return the r0/t0 override for kind, or None."""

        return self.r0 if kind == KIND_VORONOI else self.t0

    def get_slice(self):
        """Return (axis, index) from "AXIS:INDEX", (None, None) for "all",
        or None if unset.
        """

        text = self.slice
        if text == None:
            return None
        if text == "all":
            return None, None
        try:
            axis, index = [int(item) for item in text.split(":")]
        except ValueError:
            raise ConfigError(f"slice ({text}) is not AXIS:INDEX or all")
        return axis, index

    def get_sweep(self):
        """Return (name, values) from "name=a:b:n", or None if unset."""

        text = self.sweep
        if text == None:
            return None
        try:
            name, span = text.split("=")
            lo, hi, n = span.split(":")
            lo, hi, n = float(lo), float(hi), int(n)
        except ValueError:
            raise ConfigError(f"sweep ({text}) is not r0=a:b:n or t0=a:b:n")
        if name not in ("r0", "t0"):
            raise ConfigError(f"sweep parameter ({name}) is not r0 or t0")
        if n < 1 or hi < lo:
            raise ConfigError(f"sweep ({text}) needs n >= 1 and a <= b")
        return name, np.linspace(lo, hi, n).tolist()

    @staticmethod
    def param_name(kind):
        return "r0" if kind == KIND_VORONOI else "t0"
