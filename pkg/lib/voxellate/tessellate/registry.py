# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/tessellate/registry.py


"""Registry of tessellation engines by name.
"""


from .brute import tessellate_brute
from .fast import tessellate_fast
from .image import TessellateError


class EngineRegistry:
    """Registry for engines."""

    def __init__(self):
        self.engines = {}

    def get(self, name):
        """Get engine by name."""

        engine = self.engines.get(name)
        if engine == None:
            raise TessellateError(f"unknown engine ({name}); one of {self.keys()}")
        return engine

    def keys(self):
        """Return engine names."""

        return list(self.engines.keys())

    def register(self, name, engine):
        """Register engine."""

        if not callable(engine):
            raise TessellateError(f"engine ({name}) is not callable")
        self.engines[name] = engine

    def run(self, name, sites, grid, override_param=None, prune=True, threads=1):
        """Run a registered engine; brute force ignores the ball
        parameter and pruning.
        """

        engine = self.get(name)
        if engine is tessellate_brute:
            return engine(sites, grid, threads=threads)
        return engine(sites, grid, override_param=override_param, prune=prune, threads=threads)


engine_registry = EngineRegistry()
engine_registry.register("brute", tessellate_brute)
engine_registry.register("fast", tessellate_fast)
