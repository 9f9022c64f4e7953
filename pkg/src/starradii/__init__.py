"""Radii of starlikeness for three classes of analytic functions."""

from .extremal import ExtremalFunction, SharpnessReport, logderiv, verify_sharpness
from .oracle import OracleConfig, containment_holds, lemma_inradius_oracle, oracle_radius
from .regions import DomainError, RegionKind, TargetRegion, boundary_curve, inradius, membership, region
from .seed_classes import Disk, SeedClass, caratheodory_logderiv_bound, disk_image, lower_edge, mobius_disk
from .solver import (BracketError, NoRootError, RadiusResult, alpha_sweep, catalog, smallest_positive_root,
                     solve_radius)

__all__ = [
    "BracketError", "Disk", "DomainError", "ExtremalFunction", "NoRootError", "OracleConfig",
    "RadiusResult", "RegionKind", "SeedClass", "SharpnessReport", "TargetRegion", "alpha_sweep",
    "boundary_curve", "caratheodory_logderiv_bound", "catalog", "containment_holds", "disk_image",
    "inradius", "lemma_inradius_oracle", "logderiv", "lower_edge", "membership", "mobius_disk",
    "oracle_radius", "region", "smallest_positive_root", "solve_radius", "verify_sharpness",
]
