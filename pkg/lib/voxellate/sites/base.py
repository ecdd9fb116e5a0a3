# Copyright 2022 Canonical Ltd.
# See LICENSE file for licensing details.
#
# voxellate/sites/base.py


"""Site sets: positions plus, for Johnson-Mehl and Laguerre, birth
times and a common growth rate.

Instances are immutable (arrays are read-only) and safe to share.
"""


import numpy as np

from ..geometry import GROWTH_KINDS, KIND_LAGUERRE, KIND_VORONOI, KINDS
from ..misc import UsageError


class SiteError(UsageError):
    pass


def _frozen(a):
    a = np.array(a, dtype=np.float64)
    a.flags.writeable = False
    return a


class SiteSet:
    """Sites of one tessellation kind.

    Attributes:
        kind: One of KINDS.
        positions: (N_s, d) array.
        births: (N_s,) array of birth times t_s (zeros for voronoi).
        growth: Growth rate G (None for voronoi).
    """

    def __init__(self, kind, positions, births=None, growth=None):
        if kind not in KINDS:
            raise SiteError(f"kind ({kind}) not one of {KINDS}")

        positions = np.array(positions, dtype=np.float64)
        if positions.ndim == 1:
            positions = positions[:, None]
        if positions.ndim != 2 or positions.shape[0] < 1 or positions.shape[1] < 1:
            raise SiteError("positions must be a non-empty (N_s, d) array")
        if not np.all(np.isfinite(positions)):
            raise SiteError("positions must be finite")

        n = positions.shape[0]
        if kind in GROWTH_KINDS:
            if births is None:
                raise SiteError(f"kind ({kind}) needs birth times")
            births = np.array(births, dtype=np.float64).reshape(-1)
            if births.size != n:
                raise SiteError(f"({births.size}) birth times for ({n}) sites")
            if not np.all(np.isfinite(births)):
                raise SiteError("birth times must be finite")
            if growth is None or not np.isfinite(growth) or growth <= 0:
                raise SiteError(f"kind ({kind}) needs a positive growth rate, got ({growth})")
            growth = float(growth)
        else:
            births = np.zeros(n)
            growth = None

        self.kind = kind
        self.positions = _frozen(positions)
        self.births = _frozen(births)
        self.growth = growth

    def __len__(self):
        return self.positions.shape[0]

    def __repr__(self):
        return (
            f"<{self.__module__}.{self.__class__.__name__} kind ({self.kind})"
            f" n_sites ({self.n_sites}) d ({self.d}) growth ({self.growth})>"
        )

    @property
    def d(self):
        return self.positions.shape[1]

    @property
    def n_sites(self):
        return self.positions.shape[0]

    def check_domain(self, domain):
        """Raise SiteError unless every site lies in the domain."""

        if self.d != domain.d:
            raise SiteError(f"sites of dimension ({self.d}) for domain of dimension ({domain.d})")
        inside = domain.contains(self.positions)
        if not np.all(inside):
            bad = np.flatnonzero(~inside)
            raise SiteError(f"({bad.size}) sites outside the domain, first index ({bad[0]})")

    def equals(self, other):
        """Return True if other holds the same sites."""

        return (
            self.kind == other.kind
            and self.growth == other.growth
            and np.array_equal(self.positions, other.positions)
            and np.array_equal(self.births, other.births)
        )

    def subset(self, indices):
        """Return a SiteSet holding only the sites at indices (in order)."""

        indices = np.asarray(indices, dtype=np.int64)
        if self.kind == KIND_VORONOI:
            return SiteSet(self.kind, self.positions[indices])
        return SiteSet(self.kind, self.positions[indices], self.births[indices], self.growth)

    def with_births(self, births):
        """Return a copy with new birth times."""

        return SiteSet(self.kind, self.positions, births, self.growth)


class LaguerreSpheres:
    """Spheres (center, radius) defining a Laguerre tessellation by the
    power distance d^2 - r_s^2.
    """

    def __init__(self, positions, radii):
        positions = np.array(positions, dtype=np.float64)
        if positions.ndim == 1:
            positions = positions[:, None]
        radii = np.array(radii, dtype=np.float64).reshape(-1)
        if positions.ndim != 2 or positions.shape[0] < 1:
            raise SiteError("positions must be a non-empty (N_s, d) array")
        if radii.size != positions.shape[0]:
            raise SiteError(f"({radii.size}) radii for ({positions.shape[0]}) spheres")
        if not np.all(np.isfinite(radii)) or np.any(radii < 0):
            raise SiteError("radii must be finite and non-negative")

        self.positions = _frozen(positions)
        self.radii = _frozen(radii)

    def __len__(self):
        return self.positions.shape[0]

    def __repr__(self):
        return f"<{self.__module__}.{self.__class__.__name__} n_spheres ({len(self)}) d ({self.d})>"

    @property
    def d(self):
        return self.positions.shape[1]

    @property
    def kind(self):
        return KIND_LAGUERRE
