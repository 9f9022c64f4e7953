import math

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from starradii import oracle
from starradii.regions import E, SIN1, SQRT2, RegionKind, TargetRegion, inradius, region
from starradii.seed_classes import SeedClass, center, disk_image
from starradii.solver import (
    BISECTION_WIDTH, RESIDUAL_TOL, BracketError, NoRootError, alpha_sweep, bracket_cap, catalog,
    containment_gap, lookup, order_polynomial, sine_quadratic, sine_quartic, smallest_positive_root,
    smallest_positive_zero, solve_radius,
)

ENTRIES = catalog()
IDS = [e.equation_id for e in ENTRIES]


def test_smallest_positive_root_examples():
    assert smallest_positive_root([3, -8, -4, -8, 1]) == pytest.approx(0.116675, abs=1e-6)
    assert smallest_positive_root([1, -6, -6, -6, 1]) == pytest.approx(0.1432698, abs=1e-7)
    assert smallest_positive_root([3, -4, -4, -4, 1]) == pytest.approx(0.2021347, abs=1e-7)
    with pytest.raises(NoRootError):
        smallest_positive_root([1, 0, -1])
    with pytest.raises(NoRootError):
        smallest_positive_root([1, 0, 1])


def test_smallest_positive_root_picks_least():
    # (r - 0.2)(r - 0.5)(r - 0.7)
    coeffs = np.poly([0.2, 0.5, 0.7])
    assert smallest_positive_root(coeffs) == pytest.approx(0.2, abs=1e-12)
    # double root at 0.3 has no sign change but the simple root at 0.6 does
    assert smallest_positive_root(np.poly([0.3, 0.3, 0.6])) == pytest.approx(0.6, abs=1e-12)


def test_smallest_positive_zero_and_errors():
    assert smallest_positive_zero(lambda r: math.cos(5 * r)) == pytest.approx(math.pi / 10, abs=1e-12)
    with pytest.raises(NoRootError):
        smallest_positive_zero(lambda r: 1 + r)
    assert issubclass(NoRootError, BracketError)


@settings(max_examples=60, deadline=None)
@given(roots=st.lists(st.floats(0.01, 0.99), min_size=1, max_size=4, unique=True))
def test_root_isolation_property(roots):
    roots = sorted(roots)
    if min(np.diff(roots), default=1.0) < 1e-3:
        return
    got = smallest_positive_root(np.poly(roots))
    assert got == pytest.approx(roots[0], abs=1e-10)


def test_catalog_shape():
    assert len(ENTRIES) == 30
    assert len({e.equation_id for e in ENTRIES}) == 30
    assert sum(e.starlike for e in ENTRIES) == 3
    assert [e.class_kind for e in ENTRIES] == [SeedClass.K1] * 10 + [SeedClass.K2] * 10 + [SeedClass.K3] * 10
    suspects = {e.equation_id for e in ENTRIES if e.printed_equation_suspect}
    assert suspects == {"k1.rl", "k2.lemniscate"}
    for e in ENTRIES:
        if not e.printed_equation_suspect:
            assert 0 < e.printed_root() < 1


def test_catalog_examples():
    exp = lookup(SeedClass.K1, region("exponential"))
    assert exp.paper_value == 0.144684
    r = 0.3
    lhs = (2 * r**2 + 4 * r + 4 * r**3 - 1 - r**4) * E - (r**4 - 1)
    assert np.polyval(exp.printed, r) == pytest.approx(lhs, abs=1e-14)
    lune = lookup(SeedClass.K3, region("lune"))
    assert lune.paper_value == 0.229877
    assert np.polyval(lune.printed, r) == pytest.approx(
        2 * r**3 + 2 * r**2 + 2 * r - SQRT2 * r**4 - (2 - SQRT2), abs=1e-14)
    assert lookup(SeedClass.K2, region("rl")).paper_value == 0.0870259
    assert lookup(SeedClass.K1, region("order", 0.3)) is None


@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_solve_matches_paper(entry):
    res = solve_radius(entry.class_kind, entry.region)
    assert abs(res.value - entry.paper_value) <= 1e-5
    assert res.residual <= RESIDUAL_TOL
    lo, hi = res.bracket
    assert lo <= res.value <= hi and hi - lo <= 2 * BISECTION_WIDTH
    gap = lambda r: containment_gap(entry.class_kind, entry.region, r)
    assert gap(lo) * gap(hi) <= 0 or min(abs(gap(lo)), abs(gap(hi))) <= RESIDUAL_TOL
    if entry.closed_form is not None:
        assert abs(res.value - entry.closed_form) <= 1e-9


def test_solve_examples():
    assert solve_radius(SeedClass.K1, region("order", 0.0)).value == pytest.approx(0.216845, abs=1e-6)
    assert solve_radius(SeedClass.K1, region("lemniscate")).value == pytest.approx(
        (math.sqrt(5) - 2) / (SQRT2 + 1), abs=1e-12)
    assert solve_radius(SeedClass.K2, region("sine")).value == pytest.approx(SIN1 / (3 + SIN1), abs=1e-12)
    assert solve_radius(SeedClass.K3, region("exponential")).value == pytest.approx(0.244259, abs=1e-6)


@pytest.mark.parametrize("entry", [e for e in ENTRIES if not e.printed_equation_suspect],
                         ids=[e.equation_id for e in ENTRIES if not e.printed_equation_suspect])
def test_printed_path_equivalence(entry):
    value = solve_radius(entry.class_kind, entry.region).value
    assert abs(entry.printed_root() - value) <= 1e-9
    for alt in entry.alternates:
        assert abs(smallest_positive_root(alt) - value) <= 1e-9


def test_suspect_entries_really_disagree():
    k2l = lookup(SeedClass.K2, region("lemniscate"))
    assert abs(k2l.printed_root() - k2l.closed_form) > 1e-2
    # the containment equation does carry the closed-form root
    fixed = (SQRT2 + 2, 3, 3, 3, 1 - SQRT2)
    assert smallest_positive_root(fixed) == pytest.approx(k2l.closed_form, abs=1e-12)
    k1rl = lookup(SeedClass.K1, region("rl"))
    with pytest.raises(NoRootError):
        k1rl.printed_root()


@pytest.mark.parametrize("cls", list(SeedClass))
def test_sine_quartic_factorization(cls):
    r, s = sympy.symbols("r"), sympy.sin(1)
    quartic = sympy.Poly(sine_quartic(cls, s), r)
    product = sympy.Poly([1, 0, 1], r) * sympy.Poly(sine_quadratic(cls, s), r)
    assert [sympy.simplify(a - b) for a, b in zip(quartic.all_coeffs(), product.all_coeffs())] == [0] * 5
    a, b, c = (float(x) for x in sine_quadratic(cls, s))
    root = (-b + math.sqrt(b * b - 4 * a * c)) / (2 * a)
    assert root == pytest.approx(solve_radius(cls, region("sine")).value, abs=1e-12)


@pytest.mark.parametrize("entry", ENTRIES, ids=IDS)
def test_boundary_bracketing(entry):
    value = solve_radius(entry.class_kind, entry.region).value
    cfg = oracle.OracleConfig()
    assert oracle.containment_holds(entry.class_kind, entry.region, value * (1 - 1e-4), cfg)
    assert not oracle.containment_holds(entry.class_kind, entry.region, value * (1 + 1e-4), cfg)


@pytest.mark.parametrize("cls", list(SeedClass))
def test_radii_below_starlike(cls):
    star = solve_radius(cls, region("order", 0.0)).value
    for e in ENTRIES:
        if e.class_kind is not cls or e.region.kind is RegionKind.ORDER:
            continue
        assert solve_radius(cls, e.region).value < star


def test_alpha_sweep():
    (k3,) = alpha_sweep(SeedClass.K3, [0.0])
    assert k3.value == pytest.approx(0.346014, abs=1e-6)
    a, b = alpha_sweep(SeedClass.K1, [0.0, 0.5])
    assert b.value < a.value
    vals = [r.value for r in alpha_sweep(SeedClass.K2, np.linspace(0, 0.99, 25))]
    assert np.all(np.diff(vals) < 0)
    assert alpha_sweep(SeedClass.K2, [1 - 1e-12])[0].value < 1e-10


def test_degenerate_alpha():
    res = solve_radius(SeedClass.K1, TargetRegion(RegionKind.ORDER, float(np.nextafter(1.0, 0.0))))
    assert res.value == 0.0 and res.equation_id == "degenerate"


@settings(max_examples=40, deadline=None)
@given(alpha=st.floats(0, 0.95), cls=st.sampled_from(list(SeedClass)))
def test_order_radius_matches_polynomial(alpha, cls):
    res = solve_radius(cls, region("order", alpha))
    assert res.value == pytest.approx(smallest_positive_root(order_polynomial(cls, alpha)), abs=1e-11)
    d = disk_image(cls, res.value)
    assert d.left == pytest.approx(alpha, abs=1e-9)


def test_bracket_cap_respects_admissible_interval():
    for kind in RegionKind:
        reg = TargetRegion(kind)
        cap = bracket_cap(reg)
        assert 0 < cap <= 0.9
        inradius(reg, center(cap))  # must not raise


def test_gap_is_inradius_minus_radius():
    cls, reg, r = SeedClass.K2, region("cardioid"), 0.1
    assert containment_gap(cls, reg, r) == pytest.approx(
        inradius(reg, center(r)) - disk_image(cls, r).radius, abs=1e-15)
