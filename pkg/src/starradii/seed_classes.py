"""The three seed classes and their disk images.

For each class, ``zf'(z)/f(z)`` maps ``|z| <= r`` into the closed disk with
center ``(1 + r^4)/(1 - r^4)`` and radius ``s(r)/(1 - r^4)``, where ``s`` is
an integer-coefficient spread polynomial.  The same radius also follows from
composing the Moebius image of ``(1 + z^2)/(1 - z^2)`` with the log-derivative
bound for Caratheodory functions; :func:`composed_radius` keeps that route
for cross-checking.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .regions import DomainError


class SeedClass(str, enum.Enum):
    K1 = "k1"
    K2 = "k2"
    K3 = "k3"

    @property
    def spread_coeffs(self) -> tuple[int, ...]:
        """Coefficients of ``s(r)``, highest degree first (degree 4)."""
        return _SPREAD[self]


_SPREAD = {
    SeedClass.K1: (0, 4, 2, 4, 0),  # 2r(2r^2 + r + 2)
    SeedClass.K2: (1, 3, 3, 3, 0),  # r(r^3 + 3r^2 + 3r + 3)
    SeedClass.K3: (0, 2, 2, 2, 0),  # 2r(r^2 + r + 1)
}

# (alpha, sign) of the log-derivative terms in zf'/f beyond the Moebius part
_COMPOSITION = {
    SeedClass.K1: ((0.0, +1), (0.0, +1)),
    SeedClass.K2: ((0.0, +1), (0.5, -1)),
    SeedClass.K3: ((0.0, +1),),
}


@dataclass(frozen=True)
class Disk:
    center: float
    radius: float

    @property
    def left(self) -> float:
        return self.center - self.radius

    @property
    def right(self) -> float:
        return self.center + self.radius

    def contains(self, w, tol: float = 0.0):
        return np.abs(np.asarray(w) - self.center) <= self.radius + tol


def _check_r(r: float) -> None:
    if not (0.0 <= r < 1.0):
        raise DomainError(f"radius r must lie in [0, 1), got {r!r}")


def center(r: float) -> float:
    """Center ``a(r) = (1 + r^4)/(1 - r^4)`` shared by all three classes."""
    _check_r(r)
    r4 = r**4
    return (1.0 + r4) / (1.0 - r4)


def center_inverse(a: float) -> float:
    """The ``r`` in ``[0, 1)`` with ``center(r) = a``, for ``a >= 1``."""
    if a < 1.0:
        raise DomainError(f"center values start at 1, got {a!r}")
    return ((a - 1.0) / (a + 1.0)) ** 0.25


def spread(cls: SeedClass, r: float) -> float:
    return float(np.polyval(cls.spread_coeffs, r))


def mobius_disk(r: float) -> Disk:
    """Image of ``|z| <= r`` under ``w = (1 + z^2)/(1 - z^2)``."""
    _check_r(r)
    r4 = r**4
    return Disk((1.0 + r4) / (1.0 - r4), 2.0 * r * r / (1.0 - r4))


def caratheodory_logderiv_bound(alpha: float, r: float, n: int = 1) -> float:
    """Sup of ``|zp'/p|`` on ``|z| <= r`` over ``p = 1 + b_n z^n + ...`` with ``Re p > alpha``."""
    if not (0.0 <= alpha < 1.0):
        raise DomainError(f"alpha must lie in [0, 1), got {alpha!r}")
    _check_r(r)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    rn = r**n
    return 2.0 * n * rn * (1.0 - alpha) / ((1.0 - rn) * (1.0 + (1.0 - 2.0 * alpha) * rn))


def composed_radius(cls: SeedClass, r: float) -> float:
    """Disk radius rebuilt from the Moebius radius plus log-derivative bounds.

    The triangle inequality turns the signed sum of log-derivative terms into a
    plain sum of their bounds, whatever the sign.
    """
    return mobius_disk(r).radius + sum(caratheodory_logderiv_bound(alpha, r) for alpha, _ in _COMPOSITION[cls])


def disk_image(cls: SeedClass, r: float) -> Disk:
    """Closed disk containing ``zf'/f`` on ``|z| <= r`` for every ``f`` in ``cls``."""
    _check_r(r)
    r4 = r**4
    return Disk((1.0 + r4) / (1.0 - r4), spread(cls, r) / (1.0 - r4))


def lower_edge(cls: SeedClass, r: float) -> float:
    """Guaranteed lower bound of ``Re zf'/f`` on ``|z| <= r``."""
    return disk_image(cls, r).left
