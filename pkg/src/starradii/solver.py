"""Radius solving and the catalog of printed equations.

A radius is the smallest ``r > 0`` at which the disk image of a class stops
fitting inside a region, i.e. the first sign change of

    g(r) = inradius(region, a(r)) - rho(r).

``g`` is only piecewise smooth (the inradius formulas switch branches), so
roots are refined by plain bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .regions import E, SIN1, SQRT2, RegionKind, TargetRegion, admissible_interval, inradius
from .seed_classes import SeedClass, center_inverse, disk_image

BISECTION_WIDTH = 1e-13
RESIDUAL_TOL = 1e-10
BRACKET_CAP = 0.9
CAP_MARGIN = 1e-9


class BracketError(RuntimeError):
    """No sign change was found where one was expected."""


class NoRootError(BracketError):
    """A polynomial has no sign change in the open unit interval."""


@dataclass(frozen=True)
class RadiusResult:
    value: float
    class_kind: SeedClass
    region: TargetRegion
    bracket: tuple[float, float]
    residual: float
    equation_id: str
    closed_form: float | None = None


def _bisect(fn: Callable[[float], float], lo: float, hi: float, width: float = BISECTION_WIDTH) -> tuple[float, float]:
    flo = fn(lo)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        fm = fn(mid)
        if fm == 0.0:
            return mid, mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return lo, hi


def _first_sign_change(values: np.ndarray) -> int | None:
    s = np.sign(values)
    idx = np.flatnonzero(s[:-1] * s[1:] < 0)
    return int(idx[0]) if len(idx) else None


def smallest_positive_root(coeffs: Sequence[float], subdivisions: int = 4096) -> float:
    """Least root in the open interval (0, 1) of a polynomial.

    ``coeffs`` are highest degree first (``numpy.polyval`` order).  Roots are
    isolated by sign changes on a uniform subdivision and refined by
    bisection to about 1e-13.  Roots of even multiplicity are not detected.

    Raises:
        NoRootError: if there is no sign change inside (0, 1).
    """
    p = np.trim_zeros(np.asarray(coeffs, dtype=float), "f")
    if len(p) == 0 or not np.any(p):
        raise NoRootError("zero polynomial")
    # deflate roots sitting exactly on the endpoints
    while len(p) > 1 and p[-1] == 0.0:
        p = p[:-1]
    while len(p) > 1 and np.polyval(p, 1.0) == 0.0:
        p = np.polydiv(p, [1.0, -1.0])[0]
    xs = np.linspace(0.0, 1.0, subdivisions + 1)
    vals = np.polyval(p, xs)
    inner = np.flatnonzero(vals[1:-1] == 0.0)
    k = _first_sign_change(vals)
    if len(inner) and (k is None or xs[inner[0] + 1] <= xs[k]):
        return float(xs[inner[0] + 1])
    if k is None:
        raise NoRootError(f"no sign change in (0, 1) for coefficients {list(p)}")
    lo, hi = _bisect(lambda x: float(np.polyval(p, x)), xs[k], xs[k + 1])
    return 0.5 * (lo + hi)


def smallest_positive_zero(fn: Callable[[float], float], hi: float = 1.0, subdivisions: int = 4096) -> float:
    """Like :func:`smallest_positive_root` for an arbitrary scalar function on (0, hi)."""
    xs = np.linspace(0.0, hi, subdivisions + 1)[1:-1]
    vals = np.array([fn(x) for x in xs])
    k = _first_sign_change(vals)
    if k is None:
        raise NoRootError("no sign change")
    lo, up = _bisect(fn, xs[k], xs[k + 1])
    return 0.5 * (lo + up)


# --------------------------------------------------------------------------
# containment equation


def containment_gap(cls: SeedClass, reg: TargetRegion, r: float) -> float:
    """``inradius(region, a(r)) - rho(r)``: positive while the disk fits."""
    d = disk_image(cls, r)
    return inradius(reg, d.center) - d.radius


def bracket_cap(reg: TargetRegion) -> float:
    """Upper end of the search interval: where ``a(r)`` leaves the inradius formula's range."""
    _, a_max = admissible_interval(reg)
    cap = BRACKET_CAP
    if math.isfinite(a_max):
        cap = min(cap, center_inverse(a_max) - CAP_MARGIN)
    return cap


def solve_radius(cls: SeedClass, reg: TargetRegion, subdivisions: int = 2048) -> RadiusResult:
    """Largest ``R`` with ``disk_image(cls, r)`` inside ``reg`` for all ``r < R``.

    Raises:
        BracketError: if the containment gap never changes sign below the cap.
    """
    cls = SeedClass(cls)
    entry = lookup(cls, reg)
    eq_id = entry.equation_id if entry else f"{cls.value}.{reg}"
    closed = entry.closed_form if entry else None
    if reg.kind is RegionKind.ORDER and 1.0 - reg.alpha < np.finfo(float).eps:
        return RadiusResult(0.0, cls, reg, (0.0, 0.0), 0.0, "degenerate")

    def g(r):
        return containment_gap(cls, reg, r)

    cap = bracket_cap(reg)
    xs = np.linspace(0.0, cap, subdivisions + 1)
    vals = np.array([g(x) for x in xs])
    if vals[0] <= 0:
        raise BracketError(f"disk already outside {reg} at r = 0")
    k = _first_sign_change(vals)
    zeros = np.flatnonzero(vals == 0.0)
    if len(zeros) and (k is None or zeros[0] <= k):
        x = float(xs[zeros[0]])
        return RadiusResult(x, cls, reg, (x, x), 0.0, eq_id, closed)
    if k is None:
        raise BracketError(f"no sign change of the containment gap for {cls.value}/{reg} in (0, {cap})")
    lo, hi = _bisect(g, xs[k], xs[k + 1])
    value = 0.5 * (lo + hi)
    return RadiusResult(value, cls, reg, (float(lo), float(hi)), abs(g(value)), eq_id, closed)


def alpha_sweep(cls: SeedClass, alphas: Sequence[float]) -> list[RadiusResult]:
    return [solve_radius(cls, TargetRegion(RegionKind.ORDER, float(a))) for a in alphas]


# --------------------------------------------------------------------------
# catalog of printed equations


@dataclass(frozen=True)
class CatalogEntry:
    """One catalogued radius item.

    ``printed`` is the printed defining equation moved to the form
    ``F(r) = 0``: either polynomial coefficients (highest degree first) or a
    callable for the non-polynomial displays.
    """

    class_kind: SeedClass
    region: TargetRegion
    equation_id: str
    printed: tuple[float, ...] | Callable[[float], float] | None
    paper_value: float | None
    closed_form: float | None = None
    printed_equation_suspect: bool = False
    starlike: bool = False
    note: str = ""
    alternates: tuple[tuple[float, ...], ...] = field(default=())

    @property
    def is_polynomial(self) -> bool:
        return isinstance(self.printed, tuple)

    @property
    def label(self) -> str:
        return "starlike" if self.starlike else self.region.name

    def printed_root(self) -> float:
        if self.printed is None:
            raise NoRootError(f"{self.equation_id} has no printed equation")
        if self.is_polynomial:
            return smallest_positive_root(self.printed)
        return smallest_positive_zero(self.printed, hi=0.9)


def _rl_printed(spread: Callable[[float], float]) -> Callable[[float], float]:
    # (1 - r^4) N^(1/2) = s^2 + N with N = (1 - r^4)^2 - ((sqrt2 - 1) - (sqrt2 + 1) r^4)^2
    def fn(r):
        r4 = r**4
        n = (1.0 - r4) ** 2 - ((SQRT2 - 1.0) - (SQRT2 + 1.0) * r4) ** 2
        return (1.0 - r4) * math.sqrt(max(n, 0.0)) - spread(r) ** 2 - n

    return fn


def _k1_rl_printed(r: float) -> float:
    r4 = r**4
    m = (SQRT2 - 1.0) + (SQRT2 - 2.0) * r4
    return (1.0 - r4) * math.sqrt(max(m, 0.0)) - 2.0 * m - 4.0 * r * r * (2.0 * r * r + r + 2.0) ** 2


def order_polynomial(cls: SeedClass, alpha: float) -> tuple[float, ...]:
    """Coefficients of ``(1 + r^4) - s(r) - alpha (1 - r^4)``, the order-alpha equation."""
    s = SeedClass(cls).spread_coeffs
    return (1.0 + alpha - s[0], -s[1], -s[2], -s[3], 1.0 - alpha)


def sine_quartic(cls: SeedClass, s=SIN1) -> list:
    """Printed sine quartic; ``s`` may be symbolic (e.g. ``sympy.sin(1)``)."""
    c = SeedClass(cls).spread_coeffs
    # s(r) <= sin1 - (2 + sin1) r^4  with K2's r^4 term moved across
    return [2 + s + c[0], c[1], c[2], c[3], -s]


def sine_quadratic(cls: SeedClass, s=SIN1) -> list:
    """Quadratic cofactor: ``sine_quartic = (r^2 + 1) * sine_quadratic``."""
    c = SeedClass(cls).spread_coeffs
    return [2 + s + c[0], c[1], -s]


def _p(*coeffs) -> tuple[float, ...]:
    return tuple(float(c) for c in coeffs)


def _build_catalog() -> list[CatalogEntry]:
    K1, K2, K3 = SeedClass.K1, SeedClass.K2, SeedClass.K3
    R = TargetRegion
    O = RegionKind
    order0 = R(O.ORDER, 0.0)
    e = E
    s = SIN1
    k1_sin_closed = (-2.0 + math.sqrt(4.0 + s * (2.0 + s))) / (2.0 + s)
    out = [
        CatalogEntry(K1, order0, "k1.starlike", _p(1, -4, -2, -4, 1), 0.216845, starlike=True),
        CatalogEntry(K1, order0, "k1.order", order_polynomial(K1, 0.0), 0.216845),
        CatalogEntry(K1, R(O.LEMNISCATE), "k1.lemniscate", _p(1 + SQRT2, 4, 2, 4, 1 - SQRT2), 0.0977826,
                     closed_form=(math.sqrt(5.0) - 2.0) / (SQRT2 + 1.0)),
        CatalogEntry(K1, R(O.PARABOLIC), "k1.parabolic", _p(3, -8, -4, -8, 1), 0.116675),
        CatalogEntry(K1, R(O.EXPONENTIAL), "k1.exponential", _p(-e - 1, 4 * e, 2 * e, 4 * e, 1 - e), 0.144684),
        CatalogEntry(K1, R(O.CARDIOID), "k1.cardioid", _p(4, -12, -6, -12, 2), 0.15182,
                     note="two printed forms differ by a factor 2",
                     alternates=(_p(2, -6, -3, -6, 1),)),
        CatalogEntry(K1, R(O.LUNE), "k1.lune", _p(-SQRT2, 4, 2, 4, SQRT2 - 2), 0.134993),
        CatalogEntry(K1, R(O.SINE), "k1.sine", tuple(float(c) for c in sine_quartic(K1)), 0.185835,
                     closed_form=k1_sin_closed),
        CatalogEntry(K1, R(O.RL), "k1.rl", _k1_rl_printed, 0.0687813, printed_equation_suspect=True,
                     note="printed display has no root in (0, 1); solved from containment"),
        CatalogEntry(K1, R(O.RATIONAL_R), "k1.rational-r", _p(2 * SQRT2 - 1, -4, -2, -4, 3 - 2 * SQRT2), 0.0419413),

        CatalogEntry(K2, order0, "k2.starlike", _p(0, -3, -3, -3, 1), 0.253077, starlike=True),
        CatalogEntry(K2, order0, "k2.order", order_polynomial(K2, 0.0), 0.253077),
        CatalogEntry(K2, R(O.LEMNISCATE), "k2.lemniscate", _p(SQRT2 + 2, -4, -2, -4, 3 - 2 * SQRT2), 0.12132,
                     closed_form=(SQRT2 - 1.0) / (SQRT2 + 2.0), printed_equation_suspect=True,
                     note="printed polynomial lacks the closed-form root; containment gives "
                          "(sqrt2+2) r^4 + 3r^3 + 3r^2 + 3r + (1-sqrt2) = 0"),
        CatalogEntry(K2, R(O.PARABOLIC), "k2.parabolic", _p(-1, 6, 6, 6, -1), 0.1432698),
        CatalogEntry(K2, R(O.EXPONENTIAL), "k2.exponential", _p(-1, 3 * e, 3 * e, 3 * e, 1 - e), 0.174887),
        CatalogEntry(K2, R(O.CARDIOID), "k2.cardioid", _p(-1, 9, 9, 9, -2), 0.182815),
        CatalogEntry(K2, R(O.LUNE), "k2.lune", _p(1 - SQRT2, 3, 3, 3, SQRT2 - 2), 0.164039),
        CatalogEntry(K2, R(O.SINE), "k2.sine", tuple(float(c) for c in sine_quartic(K2)), 0.219049,
                     closed_form=s / (3.0 + s)),
        CatalogEntry(K2, R(O.RATIONAL_R), "k2.rational-r", _p(2 - 2 * SQRT2, 3, 3, 3, 2 * SQRT2 - 3), 0.0541073,
                     note="the R and RL decimals also appear swapped in print; headline values kept"),
        CatalogEntry(K2, R(O.RL), "k2.rl", _rl_printed(lambda r: r**4 + 3 * r**3 + 3 * r**2 + 3 * r), 0.0870259),

        CatalogEntry(K3, order0, "k3.starlike", _p(1, -2, -2, -2, 1), 0.346014, starlike=True),
        CatalogEntry(K3, order0, "k3.order", order_polynomial(K3, 0.0), 0.346014),
        CatalogEntry(K3, R(O.LEMNISCATE), "k3.lemniscate", _p(SQRT2 + 1, 2, 2, 2, 1 - SQRT2), 0.171573,
                     closed_form=(SQRT2 - 1.0) / (SQRT2 + 1.0),
                     note="closed form also printed with a sign slip, (1-sqrt2)/(1+sqrt2); positive value kept"),
        CatalogEntry(K3, R(O.PARABOLIC), "k3.parabolic", _p(-3, 4, 4, 4, -1), 0.2021347),
        CatalogEntry(K3, R(O.EXPONENTIAL), "k3.exponential", _p(-e - 1, 2 * e, 2 * e, 2 * e, 1 - e), 0.244259),
        CatalogEntry(K3, R(O.CARDIOID), "k3.cardioid", _p(-2, 3, 3, 3, -1), 0.254726),
        CatalogEntry(K3, R(O.LUNE), "k3.lune", _p(-SQRT2, 2, 2, 2, SQRT2 - 2), 0.229877),
        CatalogEntry(K3, R(O.SINE), "k3.sine", tuple(float(c) for c in sine_quartic(K3)), 0.296139,
                     closed_form=s / (2.0 + s)),
        CatalogEntry(K3, R(O.RATIONAL_R), "k3.rational-r", _p(1 - 2 * SQRT2, 2, 2, 2, 2 * SQRT2 - 3), 0.0790749),
        CatalogEntry(K3, R(O.RL), "k3.rl", _rl_printed(lambda r: 2 * r**3 + 2 * r**2 + 2 * r), 0.125145),
    ]
    return out


_CATALOG = tuple(_build_catalog())


def catalog() -> list[CatalogEntry]:
    """All 30 entries: per class the plain starlikeness radius, then items 1-9."""
    return list(_CATALOG)


def lookup(cls: SeedClass, reg: TargetRegion) -> CatalogEntry | None:
    """Catalog item for ``(cls, reg)``; order regions match only at ``alpha = 0``."""
    for entry in _CATALOG:
        if entry.class_kind is cls and entry.region == reg and not entry.starlike:
            return entry
    return None
