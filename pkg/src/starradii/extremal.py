"""Extremal functions and sharpness checks.

Each witness is a concrete member of one of the classes together with a
closed form of its log-derivative ``zf'(z)/f(z)``.  Sharpness of a radius
``R`` is checked by evaluating the log-derivative at the boundary point the
witness table singles out (``z = iR`` or ``z = -R``) and measuring how far the
value lies from the region's boundary.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .regions import SQRT2, RegionKind, TargetRegion, boundary_distance
from .seed_classes import SeedClass

SHARPNESS_TOL = 1e-6


class PoleError(ZeroDivisionError):
    """The witness is evaluated at one of its poles."""


class ExtremalFunction(str, enum.Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F3HAT = "f3hat"
    FPAIR = "fpair"


def _f1(z):
    return z * (1 + 1j * z) ** 2 / ((1 - z * z) * (1 - 1j * z) ** 2)


def _f2(z):
    return z * (1 + 1j * z) ** 2 / ((1 - z * z) * (1 - 1j * z))


def _f3(z):
    return z * (1 + 1j * z) / ((1 - z * z) * (1 - 1j * z))


#: The witness functions themselves, for finite-difference cross-checks.
FUNCTIONS = {
    ExtremalFunction.F1: _f1,
    ExtremalFunction.F2: _f2,
    ExtremalFunction.F3: _f3,
    ExtremalFunction.F3HAT: lambda z: z / (1 + z) ** 2,
    ExtremalFunction.FPAIR: lambda z: z * (1 - z) / (1 + z) ** 3,
}


def _is_pole(fn: ExtremalFunction, z: complex) -> bool:
    if fn in (ExtremalFunction.F1, ExtremalFunction.F2, ExtremalFunction.F3):
        return abs(z**4 - 1) == 0 or abs(1 - 1j * z) == 0
    if fn is ExtremalFunction.F3HAT:
        return z == -1
    return abs(z * z - 1) == 0 or z == -1


def logderiv(fn: ExtremalFunction, z) -> complex:
    """Closed-form ``zf'(z)/f(z)`` of a witness.

    Raises:
        PoleError: at ``z^4 = 1`` (F1-F3), ``z = -1`` (F3HAT) or ``z^2 = 1`` (FPAIR).
    """
    fn = ExtremalFunction(fn)
    z = complex(z)
    if _is_pole(fn, z):
        raise PoleError(f"{fn.value} has a pole at z = {z}")
    z2, z3, z4 = z * z, z**3, z**4
    if fn is ExtremalFunction.F1:
        return (1 + 4j * z + 2 * z2 - 4j * z3 + z4) / (1 - z4)
    if fn is ExtremalFunction.F2:
        return (1 + 3j * z + 3 * z2 - 3j * z3) / (1 - z4)
    if fn is ExtremalFunction.F3:
        return (1 + 2j * z + 2 * z2 - 2j * z3 + z4) / (1 - z4)
    if fn is ExtremalFunction.F3HAT:
        return (1 - z) / (1 + z)
    return (z2 - 4 * z + 1) / (1 - z2)


DEFAULT_WITNESS = {
    SeedClass.K1: ExtremalFunction.F1,
    SeedClass.K2: ExtremalFunction.F2,
    SeedClass.K3: ExtremalFunction.F3,
}


@dataclass(frozen=True)
class WitnessSpec:
    witness: ExtremalFunction
    direction: complex  # boundary point is z = direction * R
    stated: bool  # evaluation carried out explicitly, not merely asserted


def _witness_table() -> dict[tuple[SeedClass, RegionKind], WitnessSpec]:
    table = {}
    for cls, fn in DEFAULT_WITNESS.items():
        for kind in RegionKind:
            table[cls, kind] = WitnessSpec(fn, 1j, True)
        # sharpness asserted without an evaluation
        table[cls, RegionKind.SINE] = WitnessSpec(fn, 1j, False)
    table[SeedClass.K1, RegionKind.LEMNISCATE] = WitnessSpec(ExtremalFunction.FPAIR, -1, True)
    table[SeedClass.K1, RegionKind.RL] = WitnessSpec(ExtremalFunction.FPAIR, -1, True)
    # no witness given; K2 lemniscate is explicitly "may not be sharp"
    table[SeedClass.K2, RegionKind.LEMNISCATE] = WitnessSpec(ExtremalFunction.F2, 1j, False)
    table[SeedClass.K2, RegionKind.RL] = WitnessSpec(ExtremalFunction.F2, 1j, False)
    # (1 - z)/(1 + z) = sqrt(2) holds at z = -R, not at z = +R
    table[SeedClass.K3, RegionKind.LEMNISCATE] = WitnessSpec(ExtremalFunction.F3HAT, -1, True)
    table[SeedClass.K3, RegionKind.RL] = WitnessSpec(ExtremalFunction.F3, 1j, False)
    return table


WITNESSES = _witness_table()


def boundary_residual(reg: TargetRegion, w: complex) -> float:
    """Distance-like measure of how far ``w`` is from the region's boundary.

    Uses the defining function where one exists (e.g. ``| |w^2-1| - 1 |``
    for the lemniscate); otherwise the Euclidean distance to ``h(unit circle)``.
    """
    kind = reg.kind
    if kind is RegionKind.ORDER:
        return abs(w.real - reg.alpha)
    if kind is RegionKind.LEMNISCATE:
        return abs(abs(w * w - 1) - 1)
    if kind is RegionKind.PARABOLIC:
        return abs(w.real - abs(w - 1))
    if kind is RegionKind.EXPONENTIAL:
        if w == 0:
            return math.inf
        return abs(abs(cmath.log(w)) - 1)
    if kind is RegionKind.LUNE:
        return abs(abs(w * w - 1) - 2 * abs(w))
    if kind is RegionKind.RL:
        return abs(abs((w - SQRT2) ** 2 - 1) - 1)
    return boundary_distance(reg, w)


@dataclass(frozen=True)
class SharpnessReport:
    class_kind: SeedClass
    region: TargetRegion
    witness: ExtremalFunction
    boundary_z: complex
    value_w: complex
    distance_to_boundary: float
    stated: bool

    @property
    def sharp(self) -> bool:
        return self.distance_to_boundary <= SHARPNESS_TOL


def verify_sharpness(cls: SeedClass, reg: TargetRegion, radius: float) -> SharpnessReport:
    """Evaluate the tabulated witness at its boundary point on ``|z| = radius``.

    Never raises for a bad radius: a large ``distance_to_boundary`` is the
    signal that the witness does not touch the boundary there.
    """
    cls = SeedClass(cls)
    spec = WITNESSES[cls, reg.kind]
    z = spec.direction * radius
    try:
        w = logderiv(spec.witness, z)
        dist = boundary_residual(reg, w)
    except PoleError:
        w, dist = complex(math.nan, math.nan), math.inf
    return SharpnessReport(cls, reg, spec.witness, complex(z), w, float(dist), spec.stated)


def finite_difference_logderiv(fn: ExtremalFunction, z: complex, h: float = 1e-6) -> complex:
    """``z f'(z) / f(z)`` by a central difference of the witness itself."""
    f = FUNCTIONS[ExtremalFunction(fn)]
    df = (f(z + h) - f(z - h)) / (2 * h)
    return z * df / f(z)


def class_condition(fn: ExtremalFunction, z) -> np.ndarray:
    """Quantity whose real part must be positive for the witness's class.

    For F3/F3HAT this is ``(1 - z^2)/z * f(z)``; for F1/F2/FPAIR the
    companion ``g`` condition, which every class shares.
    """
    z = np.asarray(z, dtype=complex)
    fn = ExtremalFunction(fn)
    if fn in (ExtremalFunction.F3HAT, ExtremalFunction.FPAIR):
        g = z / (1 + z) ** 2
        return (1 - z * z) / z * g
    return (1 - z * z) / z * _f3(z)
