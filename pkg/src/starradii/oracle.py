"""Brute-force cross-checks by sampled containment.

Nothing here uses the inradius formulas or the containment equation: the
disk image is sampled on its boundary circle and every sample is run through
:func:`regions.membership`.  Radii are then recovered by bisection on that
boolean predicate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .regions import DEFAULT_BOUNDARY_SAMPLES, TargetRegion, membership
from .seed_classes import SeedClass, disk_image

SEARCH_HI = 0.9


@dataclass(frozen=True)
class OracleConfig:
    disk_samples: int = 2048
    boundary_samples: int = DEFAULT_BOUNDARY_SAMPLES
    bisection_tol: float = 1e-7

    def __post_init__(self):
        if self.disk_samples < 256:
            raise ValueError("disk_samples must be at least 256")
        if self.bisection_tol < 1e-12:
            raise ValueError("bisection_tol must be at least 1e-12")
        if self.boundary_samples < 16:
            raise ValueError("boundary_samples must be at least 16")


def _circle(c: float, rho: float, n: int) -> np.ndarray:
    return c + rho * np.exp(2j * np.pi * np.arange(n) / n)


def circle_inside(reg: TargetRegion, c: float, rho: float, cfg: OracleConfig) -> bool:
    """All sampled points of ``|w - c| = rho`` are members of the region."""
    if rho == 0.0:
        return membership(reg, complex(c), cfg.boundary_samples)
    pts = _circle(c, rho, cfg.disk_samples)
    return bool(np.all(membership(reg, pts, cfg.boundary_samples)))


def containment_holds(cls: SeedClass, reg: TargetRegion, r: float, cfg: OracleConfig = OracleConfig()) -> bool:
    """Sampled test that ``disk_image(cls, r)`` lies inside the region."""
    d = disk_image(SeedClass(cls), r)
    return circle_inside(reg, d.center, d.radius, cfg)


def _bisect_predicate(pred, lo: float, hi: float, tol: float) -> float:
    # pred(lo) is True, pred(hi) is False
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def oracle_radius(cls: SeedClass, reg: TargetRegion, cfg: OracleConfig = OracleConfig()) -> float:
    """Radius recovered by bisection on :func:`containment_holds`.

    Containment is assumed monotone in ``r``; if the predicate already
    fails at the lower end, the lower end is returned.
    """
    lo, hi = 1e-6, SEARCH_HI
    if not containment_holds(cls, reg, lo, cfg):
        return lo
    return _bisect_predicate(lambda r: containment_holds(cls, reg, r, cfg), lo, hi, cfg.bisection_tol)


def lemma_inradius_oracle(reg: TargetRegion, a: float, cfg: OracleConfig = OracleConfig()) -> float:
    """Largest sampled circle about ``a`` that stays inside the region.

    Every region lies in the right half-plane, so a circle of radius
    ``a + 1`` about ``a`` always exits and brackets the search.
    """
    if not circle_inside(reg, a, 0.0, cfg):
        return 0.0
    return _bisect_predicate(lambda t: circle_inside(reg, a, t, cfg), 0.0, a + 1.0,
                             min(cfg.bisection_tol, 1e-6))
