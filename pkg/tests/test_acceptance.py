"""Acceptance criteria, one pass/fail line each.

Run under pytest (lines appear in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
from collections import defaultdict

import numpy as np
import pytest
import sympy

from starradii import cli
from starradii.extremal import SHARPNESS_TOL, WITNESSES, verify_sharpness
from starradii.oracle import OracleConfig, lemma_inradius_oracle, oracle_radius
from starradii.regions import BRANCHES, SIN1, RegionKind, TargetRegion, admissible_interval, inradius, membership
from starradii.seed_classes import SeedClass, composed_radius, disk_image
from starradii.solver import catalog, sine_quadratic, sine_quartic, solve_radius

#: criterion -> list of (case, ok, detail)
RESULTS: dict[int, list[tuple[str, bool, str]]] = defaultdict(list)

TITLES = {
    1: "theorem table within 1e-5",
    2: "closed forms within 1e-9",
    3: "oracle radii within 5e-4",
    4: "stated witnesses on the boundary within 1e-6",
    5: "inradius lemma properties",
    6: "sine quartic factorization",
    7: "disk path equivalence within 1e-12",
}


def record(n: int, case: str, ok: bool, detail: str = "") -> None:
    RESULTS[n].append((case, bool(ok), detail))


def summary_lines() -> list[str]:
    lines = []
    for n in sorted(TITLES):
        cases = RESULTS.get(n, [])
        if not cases:
            lines.append(f"criterion {n}: NOT RUN  {TITLES[n]}")
            continue
        bad = [c for c in cases if not c[1]]
        status = "PASS" if not bad else "FAIL"
        detail = f"{len(cases) - len(bad)}/{len(cases)} cases"
        if bad:
            detail += "; failing: " + ", ".join(f"{c[0]} ({c[2]})" for c in bad)
        lines.append(f"criterion {n}: {status}  {TITLES[n]}  [{detail}]")
    return lines


# --------------------------------------------------------------------------
# 1. theorem table

TABLE = {
    "k1": dict(lemniscate=0.0977826, parabolic=0.116675, exponential=0.144684, cardioid=0.15182,
               lune=0.134993, sine=0.185835, rl=0.0687813, **{"rational-r": 0.0419413}),
    "k2": dict(lemniscate=0.12132, parabolic=0.1432698, exponential=0.174887, cardioid=0.182815,
               lune=0.164039, sine=0.219049, **{"rational-r": 0.0541073}, rl=0.0870259),
    "k3": dict(lemniscate=0.171573, parabolic=0.2021347, exponential=0.244259, cardioid=0.254726,
               lune=0.229877, sine=0.296139, **{"rational-r": 0.0790749}, rl=0.125145),
}
STARLIKE = {"k1": 0.216845, "k2": 0.253077, "k3": 0.346014}


def test_criterion_1_theorem_table():
    records = cli.table_records()
    seen = set()
    for rec in records:
        if rec.region in ("starlike", "order"):
            expected = STARLIKE[rec.cls]
        else:
            expected = TABLE[rec.cls][rec.region]
        diff = abs(rec.radius - expected)
        seen.add((rec.cls, rec.region))
        record(1, f"{rec.cls}/{rec.region}", diff <= 1e-5, f"diff {diff:.2e}")
    assert len(records) == 30 and len(seen) == 30
    assert all(ok for _, ok, _ in RESULTS[1])


# --------------------------------------------------------------------------
# 2. closed forms

S2 = math.sqrt(2)
CLOSED = [
    (SeedClass.K1, RegionKind.LEMNISCATE, (math.sqrt(5) - 2) / (S2 + 1)),
    (SeedClass.K2, RegionKind.LEMNISCATE, (S2 - 1) / (S2 + 2)),
    (SeedClass.K3, RegionKind.LEMNISCATE, (S2 - 1) / (S2 + 1)),
    (SeedClass.K1, RegionKind.SINE, (-2 + math.sqrt(4 + SIN1 * (2 + SIN1))) / (2 + SIN1)),
    (SeedClass.K2, RegionKind.SINE, SIN1 / (3 + SIN1)),
    (SeedClass.K3, RegionKind.SINE, SIN1 / (2 + SIN1)),
]


@pytest.mark.parametrize("cls,kind,value", CLOSED, ids=lambda x: getattr(x, "value", None))
def test_criterion_2_closed_forms(cls, kind, value):
    got = solve_radius(cls, TargetRegion(kind)).value
    diff = abs(got - value)
    record(2, f"{cls.value}/{kind.value}", diff <= 1e-9, f"diff {diff:.2e}")
    assert diff <= 1e-9


# --------------------------------------------------------------------------
# 3. oracle

ENTRIES = catalog()


@pytest.mark.parametrize("entry", ENTRIES, ids=[e.equation_id for e in ENTRIES])
def test_criterion_3_oracle(entry):
    cfg = OracleConfig()
    est = oracle_radius(entry.class_kind, entry.region, cfg)
    diff = abs(est - solve_radius(entry.class_kind, entry.region).value)
    record(3, entry.equation_id, diff <= 5e-4, f"diff {diff:.2e}")
    assert diff <= 5e-4


# --------------------------------------------------------------------------
# 4. sharpness of stated witnesses

STATED = [e for e in ENTRIES if WITNESSES[e.class_kind, e.region.kind].stated]


@pytest.mark.parametrize("entry", STATED, ids=[e.equation_id for e in STATED])
def test_criterion_4_sharpness(entry):
    R = solve_radius(entry.class_kind, entry.region).value
    rep = verify_sharpness(entry.class_kind, entry.region, R)
    d = rep.distance_to_boundary
    record(4, entry.equation_id, d <= SHARPNESS_TOL, f"{rep.witness.value} at {rep.boundary_z:.6g} off by {d:.2e}")
    assert d <= SHARPNESS_TOL, f"{entry.equation_id}: w = {rep.value_w}, distance {d:.3e}"


# --------------------------------------------------------------------------
# 5. inradius lemmas


def _centers(reg, n):
    lo, hi = admissible_interval(reg)
    if not math.isfinite(hi):
        hi = lo + 4.0
    w = hi - lo
    return np.linspace(lo + 0.01 * w, hi - 0.01 * w, n)


def _circle(n):
    return np.exp(2j * np.pi * np.arange(n) / n)


def test_criterion_5_branch_continuity():
    for kind, br in BRANCHES.items():
        gap = abs(br.lower(br.break_point) - br.upper(br.break_point))
        record(5, f"continuity/{kind.value}", gap <= 1e-12, f"gap {gap:.1e}")
        assert gap <= 1e-12
    assert len(BRANCHES) == 6


@pytest.mark.parametrize("kind", list(RegionKind), ids=lambda k: k.value)
def test_criterion_5_soundness_and_maximality(kind):
    reg = TargetRegion(kind)
    centers = _centers(reg, 100)
    radii = np.array([inradius(reg, a) for a in centers])
    inner = centers[:, None] + (1 - 1e-6) * radii[:, None] * _circle(360)
    outer = centers[:, None] + (1 + 1e-3) * radii[:, None] * _circle(720)
    sound = membership(reg, inner.ravel()).reshape(inner.shape).all(axis=1)
    maximal = (~membership(reg, outer.ravel()).reshape(outer.shape)).any(axis=1)
    ok = sound.all() and maximal.all()
    record(5, f"containment/{kind.value}", ok, f"{(~sound).sum()} unsound, {(~maximal).sum()} not maximal")
    assert ok


@pytest.mark.parametrize("kind", list(RegionKind), ids=lambda k: k.value)
def test_criterion_5_lemma_oracle(kind):
    reg = TargetRegion(kind)
    cfg = OracleConfig()
    worst = max(abs(lemma_inradius_oracle(reg, a, cfg) - inradius(reg, a)) for a in _centers(reg, 50))
    record(5, f"oracle/{kind.value}", worst <= 1e-4, f"worst {worst:.1e}")
    assert worst <= 1e-4


# --------------------------------------------------------------------------
# 6. factorization


@pytest.mark.parametrize("cls", list(SeedClass), ids=lambda c: c.value)
def test_criterion_6_factorization(cls):
    r, s = sympy.symbols("r"), sympy.sin(1)
    quartic = sympy.Poly(sine_quartic(cls, s), r).all_coeffs()
    product = (sympy.Poly([1, 0, 1], r) * sympy.Poly(sine_quadratic(cls, s), r)).all_coeffs()
    ok = len(quartic) == len(product) and all(sympy.expand(a - b) == 0 for a, b in zip(quartic, product))
    record(6, cls.value, ok)
    assert ok


# --------------------------------------------------------------------------
# 7. path equivalence


@pytest.mark.parametrize("cls", list(SeedClass), ids=lambda c: c.value)
def test_criterion_7_path_equivalence(cls):
    worst = max(abs(composed_radius(cls, r) - disk_image(cls, r).radius) for r in np.linspace(0.0, 0.95, 100))
    record(7, cls.value, worst <= 1e-12, f"worst {worst:.1e}")
    assert worst <= 1e-12


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
