"""Target regions for the radius problems.

Each region is the image of the unit disk under a univalent generator ``h``
with ``h(0) = 1``.  Points of the ``zf'/f`` plane are plain Python/numpy
complex numbers; every predicate here accepts a scalar or an array.

Membership is strict: boundary points test ``False``.  Regions with a
convenient analytic description use it; the cardioid, sine and rational
regions fall back to a winding-number test on a sampled boundary polyline.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial import cKDTree

SQRT2 = math.sqrt(2.0)
SIN1 = math.sin(1.0)
E = math.e

#: Default number of boundary vertices for polyline-based membership.
DEFAULT_BOUNDARY_SAMPLES = 4096
#: Points closer than this to the boundary polyline count as boundary.
GUARD_BAND = 1e-9
# defining-function slack below which analytic predicates report the boundary
ANALYTIC_MARGIN = 1e-12


class DomainError(ValueError):
    """An argument lies outside the domain where a formula is valid."""


class RegionKind(str, enum.Enum):
    ORDER = "order"
    LEMNISCATE = "lemniscate"
    PARABOLIC = "parabolic"
    EXPONENTIAL = "exponential"
    CARDIOID = "cardioid"
    SINE = "sine"
    LUNE = "lune"
    RATIONAL_R = "rational-r"
    RL = "rl"


@dataclass(frozen=True)
class TargetRegion:
    """One of the nine target regions.

    ``alpha`` is only meaningful for :attr:`RegionKind.ORDER`
    (starlike of order alpha, the half-plane ``Re w > alpha``).
    """

    kind: RegionKind
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", RegionKind(self.kind))
        if self.kind is RegionKind.ORDER:
            if not (0.0 <= self.alpha < 1.0):
                raise DomainError(f"order alpha must lie in [0, 1), got {self.alpha!r}")
        elif self.alpha != 0.0:
            raise DomainError(f"alpha is only accepted for the order region, got {self.kind.value}")

    @property
    def k_const(self) -> float | None:
        """The constant ``k = sqrt(2) + 1`` of the rational generator."""
        return SQRT2 + 1.0 if self.kind is RegionKind.RATIONAL_R else None

    @property
    def name(self) -> str:
        return self.kind.value

    @property
    def bounded(self) -> bool:
        return self.kind not in (RegionKind.ORDER, RegionKind.PARABOLIC)

    def __str__(self) -> str:
        if self.kind is RegionKind.ORDER:
            return f"order(alpha={self.alpha:g})"
        return self.kind.value


def region(name: str | RegionKind, alpha: float = 0.0) -> TargetRegion:
    """Shorthand constructor: ``region("lune")``, ``region("order", 0.5)``."""
    return TargetRegion(RegionKind(name), alpha)


#: All nine regions with ``alpha = 0`` for the order region, in catalog order.
ALL_KINDS = tuple(RegionKind)


# --------------------------------------------------------------------------
# generators


def _h_parabolic(z):
    sz = np.sqrt(z)
    return 1.0 + (2.0 / np.pi**2) * np.log((1.0 + sz) / (1.0 - sz)) ** 2


def generator(reg: TargetRegion) -> Callable:
    """Return the (numpy-vectorized) generator ``h`` with ``h(D) = region``."""
    k = SQRT2 + 1.0
    c = 2.0 * (SQRT2 - 1.0)
    alpha = reg.alpha
    table: dict[RegionKind, Callable] = {
        RegionKind.ORDER: lambda z: (1.0 + (1.0 - 2.0 * alpha) * z) / (1.0 - z),
        RegionKind.LEMNISCATE: lambda z: np.sqrt(1.0 + z),
        RegionKind.PARABOLIC: _h_parabolic,
        RegionKind.EXPONENTIAL: np.exp,
        RegionKind.CARDIOID: lambda z: 1.0 + (4.0 / 3.0) * z + (2.0 / 3.0) * z * z,
        RegionKind.SINE: lambda z: 1.0 + np.sin(z),
        RegionKind.LUNE: lambda z: z + np.sqrt(1.0 + z * z),
        RegionKind.RATIONAL_R: lambda z: 1.0 + (z * k + z * z) / (k * k - k * z),
        RegionKind.RL: lambda z: SQRT2 - (SQRT2 - 1.0) * np.sqrt((1.0 - z) / (1.0 + c * z)),
    }
    return table[reg.kind]


# --------------------------------------------------------------------------
# inradius lemmas


@dataclass(frozen=True)
class InradiusBranch:
    """A piecewise inradius formula: ``lower`` for ``a <= break_point``."""

    lower: Callable[[float], float]
    upper: Callable[[float], float]
    break_point: float

    def select(self, a: float) -> str:
        return "lower" if a <= self.break_point else "upper"

    def __call__(self, a: float) -> float:
        return self.lower(a) if a <= self.break_point else self.upper(a)


def _lemniscate_lower(a):
    q = 1.0 - a * a
    return math.sqrt(math.sqrt(q) - q)


def _rl_upper(a):
    q = 1.0 - (SQRT2 - a) ** 2
    return math.sqrt(math.sqrt(q) - q)


BRANCHES: dict[RegionKind, InradiusBranch] = {
    RegionKind.LEMNISCATE: InradiusBranch(_lemniscate_lower, lambda a: SQRT2 - a, 2.0 * SQRT2 / 3.0),
    RegionKind.PARABOLIC: InradiusBranch(lambda a: a - 0.5, lambda a: math.sqrt(2.0 * a - 2.0), 1.5),
    RegionKind.EXPONENTIAL: InradiusBranch(lambda a: a - 1.0 / E, lambda a: E - a, (E + 1.0 / E) / 2.0),
    # first branch exactly as printed, (3a - 1)/3
    RegionKind.CARDIOID: InradiusBranch(lambda a: (3.0 * a - 1.0) / 3.0, lambda a: 3.0 - a, 5.0 / 3.0),
    RegionKind.RATIONAL_R: InradiusBranch(lambda a: a - 2.0 * (SQRT2 - 1.0), lambda a: 2.0 - a, SQRT2),
    RegionKind.RL: InradiusBranch(lambda a: a, _rl_upper, SQRT2 / 3.0),
}


def admissible_interval(reg: TargetRegion) -> tuple[float, float]:
    """Open interval of centers ``a`` on which :func:`inradius` is valid."""
    return {
        RegionKind.ORDER: (reg.alpha, math.inf),
        RegionKind.LEMNISCATE: (0.0, SQRT2),
        RegionKind.PARABOLIC: (0.5, math.inf),
        RegionKind.EXPONENTIAL: (1.0 / E, E),
        RegionKind.CARDIOID: (1.0 / 3.0, 3.0),
        RegionKind.SINE: (1.0 - SIN1, 1.0 + SIN1),
        RegionKind.LUNE: (SQRT2 - 1.0, SQRT2 + 1.0),
        RegionKind.RATIONAL_R: (2.0 * (SQRT2 - 1.0), 2.0),
        RegionKind.RL: (0.0, SQRT2),
    }[reg.kind]


def inradius(reg: TargetRegion, a: float) -> float:
    """Radius of the largest open disk centered at real ``a`` inside the region.

    Raises:
        DomainError: if ``a`` is outside :func:`admissible_interval`.
    """
    lo, hi = admissible_interval(reg)
    if not (lo < a < hi):
        raise DomainError(f"center {a!r} outside ({lo}, {hi}) for {reg}")
    kind = reg.kind
    if kind is RegionKind.ORDER:
        return a - reg.alpha
    if kind is RegionKind.SINE:
        return SIN1 - abs(a - 1.0)
    if kind is RegionKind.LUNE:
        return 1.0 - abs(SQRT2 - a)
    return BRANCHES[kind](a)


# --------------------------------------------------------------------------
# boundary polylines


@dataclass(frozen=True, eq=False)
class Polyline:
    """Closed polyline; the last vertex connects back to the first."""

    vertices: np.ndarray
    thetas: np.ndarray
    tree: cKDTree
    max_edge: float
    long_edges: np.ndarray


def _theta_grid(n_samples: int, skip_zero: bool) -> np.ndarray:
    # symmetric grid on [0, 2pi) containing theta = pi (and 0 unless skipped)
    m = (n_samples + 1) // 2
    upper = np.pi * np.arange(1, m + 1) / m if skip_zero else np.pi * np.arange(0, m + 1) / m
    lower = 2.0 * np.pi - upper[-2:0:-1] if not skip_zero else 2.0 * np.pi - upper[-2::-1]
    return np.concatenate([upper, lower])


@functools.lru_cache(maxsize=64)
def _polyline(reg: TargetRegion, n_samples: int) -> Polyline:
    thetas = _theta_grid(n_samples, skip_zero=not reg.bounded)
    z = np.exp(1j * thetas)
    w = np.asarray(generator(reg)(z), dtype=complex)
    # conjugate symmetry of every generator; enforce it exactly
    half = len(thetas) // 2
    if reg.bounded:
        w[0] = w[0].real
        w[half] = w[half].real
        w[half + 1:] = np.conj(w[1:half][::-1])
    else:
        # vertices 0..half run theta = pi/m .. pi; the rest mirror 0..half-1
        w[half] = w[half].real
        w[half + 1:] = np.conj(w[:half][::-1])
    w.setflags(write=False)
    edges = np.abs(np.roll(w, -1) - w)
    # the closing chord of an unbounded region is far longer than the rest
    long_edges = np.flatnonzero(edges > 8.0 * np.median(edges))
    short = np.delete(edges, long_edges)
    return Polyline(w, thetas, cKDTree(np.c_[w.real, w.imag]), float(short.max()), long_edges)


def boundary_curve(reg: TargetRegion, n_samples: int = DEFAULT_BOUNDARY_SAMPLES) -> np.ndarray:
    """Sample ``h(e^{i theta})`` on a uniform, conjugate-symmetric theta grid.

    The grid always contains ``theta = pi`` and, for bounded regions,
    ``theta = 0``; odd ``n_samples`` are rounded up to an even count.  For the
    two unbounded regions the pole at ``theta = 0`` is skipped, so the
    polyline is closed by a far-right chord.

    Returns:
        Read-only complex array of polyline vertices (counterclockwise).
    """
    if n_samples < 16:
        raise DomainError("n_samples must be at least 16")
    return _polyline(reg, int(n_samples)).vertices


def winding_number(points, vertices: np.ndarray) -> np.ndarray:
    """Winding number of a closed polyline around each point.

    Edges are swept against points sorted by imaginary part, so the cost is
    ``O((n + m) log m)`` plus the number of (edge, point) pairs whose
    horizontal ray actually meets the edge's vertical span.
    """
    pts = np.atleast_1d(np.asarray(points, dtype=complex)).ravel()
    s = np.asarray(vertices, dtype=complex)
    t = np.roll(s, -1)
    order = np.argsort(pts.imag, kind="stable")
    sorted_pts = pts[order]
    ys = sorted_pts.imag

    up = s.imag <= t.imag
    lo = np.where(up, s.imag, t.imag)
    hi = np.where(up, t.imag, s.imag)
    i0 = np.searchsorted(ys, lo, side="left")
    i1 = np.searchsorted(ys, hi, side="left")
    counts = i1 - i0
    total = int(counts.sum())
    wn = np.zeros(len(pts), dtype=np.int64)
    if total == 0:
        return wn

    edge = np.repeat(np.arange(len(s)), counts)
    starts = np.cumsum(counts) - counts
    pidx = np.repeat(i0, counts) + (np.arange(total) - np.repeat(starts, counts))
    p, a, b = sorted_pts[pidx], s[edge], t[edge]
    cross = (b.real - a.real) * (p.imag - a.imag) - (p.real - a.real) * (b.imag - a.imag)
    contrib = np.where(up[edge], (cross > 0).astype(np.int64), -(cross < 0).astype(np.int64))
    wn_sorted = np.bincount(pidx, weights=contrib, minlength=len(pts))
    wn[order] = np.rint(wn_sorted).astype(np.int64)
    return wn


def _segment_distance(pts: np.ndarray, vertices: np.ndarray, edges=None) -> np.ndarray:
    ends = np.roll(vertices, -1)
    if edges is not None:
        vertices, ends = vertices[edges], ends[edges]
    a = vertices[None, :]
    d = (ends - vertices)[None, :]
    p = pts[:, None]
    denom = np.where(np.abs(d) == 0, 1.0, np.abs(d) ** 2)
    t = np.clip(((p - a) * np.conj(d)).real / denom, 0.0, 1.0)
    return np.abs(p - (a + t * d)).min(axis=1)


def polyline_distance(reg: TargetRegion, points, n_samples: int = DEFAULT_BOUNDARY_SAMPLES,
                      cutoff: float = math.inf) -> np.ndarray:
    """Euclidean distance from each point to the boundary polyline.

    Distances above ``cutoff`` are only guaranteed to be ``> cutoff``; the
    KD-tree prefilter skips the exact segment computation for such points.
    """
    poly = _polyline(reg, int(n_samples))
    pts = np.atleast_1d(np.asarray(points, dtype=complex)).ravel()
    # a point within `cutoff` of a short edge has an endpoint within cutoff + edge/2
    reach = cutoff + 0.5 * poly.max_edge
    vd, _ = poly.tree.query(np.c_[pts.real, pts.imag], k=1, distance_upper_bound=reach)
    out = np.asarray(vd, dtype=float).copy()
    if len(poly.long_edges):
        out = np.minimum(out, _segment_distance(pts, poly.vertices, poly.long_edges))
    if not math.isfinite(cutoff):
        for chunk in np.array_split(np.arange(len(pts)), max(1, len(pts) // 256)):
            out[chunk] = np.minimum(out[chunk], _segment_distance(pts[chunk], poly.vertices))
        return out
    cand = np.flatnonzero(vd <= reach)
    if len(cand) == 0:
        return out
    # only segments touching a vertex inside the reach ball can be that close
    near = poly.tree.query_ball_point(np.c_[pts[cand].real, pts[cand].imag], r=reach)
    counts = np.fromiter((len(v) for v in near), dtype=np.int64, count=len(near))
    owner = np.repeat(cand, counts)
    vert = np.fromiter((i for v in near for i in v), dtype=np.int64, count=int(counts.sum()))
    n = len(poly.vertices)
    for start in (vert, (vert - 1) % n):
        a = poly.vertices[start]
        d = poly.vertices[(start + 1) % n] - a
        p = pts[owner]
        denom = np.where(np.abs(d) == 0, 1.0, np.abs(d) ** 2)
        t = np.clip(((p - a) * np.conj(d)).real / denom, 0.0, 1.0)
        np.minimum.at(out, owner, np.abs(p - (a + t * d)))
    return out


def winding_membership(reg: TargetRegion, w, n_samples: int = DEFAULT_BOUNDARY_SAMPLES):
    """Polyline-based interior test with a :data:`GUARD_BAND` boundary band."""
    arr = np.asarray(w, dtype=complex)
    pts = np.atleast_1d(arr).ravel()
    finite = np.isfinite(pts)
    pts = np.where(finite, pts, 0.0)
    poly = _polyline(reg, int(n_samples))
    inside = winding_number(pts, poly.vertices) != 0
    near = polyline_distance(reg, pts, n_samples, cutoff=GUARD_BAND) < GUARD_BAND
    result = inside & ~near & finite
    return bool(result[0]) if arr.ndim == 0 else result.reshape(arr.shape)


# --------------------------------------------------------------------------
# membership


def _analytic_membership(reg: TargetRegion, w: np.ndarray) -> np.ndarray:
    x = w.real
    kind = reg.kind
    m = ANALYTIC_MARGIN
    with np.errstate(all="ignore"):
        if kind is RegionKind.ORDER:
            return x > reg.alpha + m
        if kind is RegionKind.LEMNISCATE:
            # right loop only
            return (x > 0) & (np.abs(w * w - 1.0) < 1.0 - m)
        if kind is RegionKind.PARABOLIC:
            return x - np.abs(w - 1.0) > m
        if kind is RegionKind.EXPONENTIAL:
            pos = x > 0
            safe = np.where(pos, w, 1.0)
            return pos & (np.abs(np.log(safe)) < 1.0 - m)
        if kind is RegionKind.LUNE:
            return (x > 0) & (2.0 * np.abs(w) - np.abs(w * w - 1.0) > m)
        if kind is RegionKind.RL:
            # left lobe only; the two lobes meet at the node sqrt(2)
            return (x > 0) & (x < SQRT2) & (np.abs((w - SQRT2) ** 2 - 1.0) < 1.0 - m)
    raise KeyError(kind)


#: Regions decided by an analytic predicate; the rest use the polyline.
ANALYTIC_KINDS = frozenset(
    {RegionKind.ORDER, RegionKind.LEMNISCATE, RegionKind.PARABOLIC,
     RegionKind.EXPONENTIAL, RegionKind.LUNE, RegionKind.RL}
)


def membership(reg: TargetRegion, w, n_samples: int = DEFAULT_BOUNDARY_SAMPLES):
    """True where ``w`` lies strictly inside the region.

    Accepts a complex scalar (returns ``bool``) or an array (returns a boolean
    array of the same shape).  Non-finite inputs are never members.
    """
    if reg.kind not in ANALYTIC_KINDS:
        return winding_membership(reg, w, n_samples)
    arr = np.asarray(w, dtype=complex)
    res = _analytic_membership(reg, arr) & np.isfinite(arr)
    return bool(res) if arr.ndim == 0 else res


# --------------------------------------------------------------------------
# distance to the boundary


def boundary_distance(reg: TargetRegion, w: complex, n_samples: int = DEFAULT_BOUNDARY_SAMPLES) -> float:
    """Euclidean distance from ``w`` to ``h(unit circle)``.

    The nearest polyline vertex seeds a bounded 1-D minimization of
    ``|h(e^{i theta}) - w|`` over the two adjacent grid cells, removing the
    chord error of the polyline.
    """
    poly = _polyline(reg, int(n_samples))
    h = generator(reg)
    _, k = poly.tree.query([w.real, w.imag], k=1)
    th = poly.thetas
    step = 2.0 * np.pi / len(th)
    best = abs(poly.vertices[k] - w)
    t0 = th[k]

    def dist(t):
        return abs(complex(h(np.exp(1j * t))) - w)

    res = minimize_scalar(dist, bounds=(t0 - step, t0 + step), method="bounded",
                          options={"xatol": 1e-14})
    return float(min(best, res.fun))
