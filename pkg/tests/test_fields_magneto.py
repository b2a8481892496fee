"""Magnetostatic evaluators against independent closed forms.

Frozen oracle: a_phi of the unit loop (a = 1, I = 1) at r = 1.7,
z = 0.6, computed with a 4e6-segment midpoint sum over the wire
(accurate to ~1e-12 relative, far tighter than the tolerances used).
"""

import math

import pytest

from emsingular.errors import InvalidGeometryError, OnSupportError
from emsingular.fields import magneto
from emsingular.fields.medium import MU0, VACUUM, MediumConstants
from emsingular.geometry import EZ, Point3, Vec3
from emsingular.quad import QuadConfig
from emsingular.sources import circular_loop, polyline

CFG = QuadConfig(abs_tol=1e-13, rel_tol=1e-10)

LOOP_APHI_ORACLE = 9.47066946677599e-08  # a=1, I=1, r=1.7, z=0.6


def loop_bz_axis(a, current, z):
    return MU0 * current * a * a / (2.0 * (a * a + z * z) ** 1.5)


def test_loop_off_axis_frozen_oracle():
    res = magneto.loop_potential(1.0, 1.0, Point3(1.7, 0.0, 0.6), CFG)
    assert res.diagnostics["converged"]
    assert res.a.y == pytest.approx(LOOP_APHI_ORACLE, rel=1e-9)
    # purely azimuthal: no radial or axial part
    assert res.a.x == pytest.approx(0.0, abs=1e-22)
    assert res.a.z == 0.0


def test_loop_potential_rotational_symmetry():
    # same (r, z), different azimuth: a_phi identical
    r1 = magneto.loop_potential(1.0, 1.0, Point3(1.7, 0.0, 0.6), CFG)
    ang = 2.1
    p2 = Point3(1.7 * math.cos(ang), 1.7 * math.sin(ang), 0.6)
    r2 = magneto.loop_potential(1.0, 1.0, p2, CFG)
    assert r1.a_cyl()[1] == pytest.approx(r2.a_cyl()[1], rel=1e-13)


def test_loop_center_z_shift():
    base = magneto.loop_potential(1.0, 1.0, Point3(1.3, 0.2, 0.4), CFG)
    lifted = magneto.loop_potential(1.0, 1.0, Point3(1.3, 0.2, 1.4), CFG,
                                    center_z=1.0)
    assert lifted.a.as_tuple() == pytest.approx(base.a.as_tuple(),
                                                rel=1e-13)


def test_loop_bz_on_axis_closed_form():
    b = magneto.derive_b(
        lambda p: magneto.loop_potential(1.0, 2.0, p, CFG).a)
    for z in (0.0, 0.5, 1.0, 2.0):
        got = b(Point3(0.0, 0.0, z))
        assert got.z == pytest.approx(loop_bz_axis(1.0, 2.0, z), rel=1e-6)
        assert abs(got.x) < 1e-9 * abs(got.z)
        assert abs(got.y) < 1e-9 * abs(got.z)


def test_loop_on_support_refused():
    with pytest.raises(OnSupportError):
        magneto.loop_potential(1.0, 1.0, Point3(1.0, 0.0, 0.0), CFG)
    with pytest.raises(InvalidGeometryError):
        magneto.loop_potential(-1.0, 1.0, Point3(2.0, 0.0, 0.0), CFG)


def test_loop_medium_scaling():
    doubled = MediumConstants.from_eps_mu(VACUUM.eps, 2.0 * VACUUM.mu)
    base = magneto.loop_potential(1.0, 1.0, Point3(1.7, 0.0, 0.6), CFG)
    big = magneto.loop_potential(1.0, 1.0, Point3(1.7, 0.0, 0.6), CFG,
                                 medium=doubled)
    assert big.a.y == pytest.approx(2.0 * base.a.y, rel=1e-14)


# ---------------------------------------------------------------------------
# helix


def test_helix_degenerates_to_loop_at_small_pitch():
    p = 1e-3
    big_p = math.sqrt(1.0 - p * p)
    length = 2.0 * math.pi / big_p  # one turn
    for pt in (Point3(1.9, 0.3, 0.0), Point3(0.4, -0.6, 0.0)):
        hx = magneto.helix_potential(1.0, p, length, 1.0, pt, CFG)
        lp = magneto.loop_potential(1.0, 1.0, pt, CFG)
        h_phi = hx.a_cyl()[1]
        l_phi = lp.a_cyl()[1]
        assert h_phi == pytest.approx(l_phi, rel=1e-3)


def test_helix_screw_invariance():
    # advancing the chart window by sigma and rotating/lifting the
    # field point by the same screw motion leaves the cylindrical
    # components unchanged
    a, p, length = 1.0, 0.25, 12.0
    big_p = math.sqrt(1.0 - p * p) / a
    sigma = 1.7
    y0 = Point3(1.6, 0.4, 2.0)
    base = magneto.helix_potential(a, p, length, 1.0, y0, CFG)

    ang = big_p * sigma
    c, s = math.cos(ang), math.sin(ang)
    y1 = Point3(c * y0.x - s * y0.y, s * y0.x + c * y0.y, y0.z + p * sigma)
    moved = magneto.helix_potential(a, p, length, 1.0, y1, CFG,
                                    sigma0=sigma)
    assert moved.a_cyl() == pytest.approx(base.a_cyl(), rel=1e-10)


def test_helix_on_support_refused():
    a, p = 1.0, 0.2
    big_p = math.sqrt(1.0 - p * p) / a
    s_hit = 3.0
    on_wire = Point3(a * math.cos(big_p * s_hit),
                     a * math.sin(big_p * s_hit), p * s_hit)
    with pytest.raises(OnSupportError):
        magneto.helix_potential(a, p, 10.0, 1.0, on_wire, CFG)


def test_helix_rejects_bad_pitch():
    with pytest.raises(InvalidGeometryError):
        magneto.helix_potential(1.0, 0.0, 5.0, 1.0, Point3(2, 0, 0), CFG)
    with pytest.raises(InvalidGeometryError):
        magneto.helix_potential(1.0, 1.0, 5.0, 1.0, Point3(2, 0, 0), CFG)


# ---------------------------------------------------------------------------
# solenoid sheet


def test_solenoid_interior_axial_field():
    # long azimuthal sheet: interior b_z -> mu0 * kappa0 * a * P
    a, p, L, k0 = 1.0, 0.0, 60.0, 1.0
    big_p = math.sqrt(1.0 - p * p) / a
    b = magneto.derive_b(
        lambda q: magneto.solenoid_potential(a, p, L, k0, q, CFG).a)
    mid = Point3(0.3, 0.0, L / 2.0)
    expected = MU0 * k0 * a * big_p
    assert b(mid).z == pytest.approx(expected, rel=5e-3)


def test_solenoid_radial_component_vanishes():
    res = magneto.solenoid_potential(1.0, 0.3, 10.0, 2.0,
                                     Point3(1.8, 0.7, 4.0), CFG)
    a_r, a_phi, a_z = res.a_cyl()
    assert a_r == 0.0
    assert a_phi != 0.0 and a_z != 0.0


def test_solenoid_exterior_potential_falls_like_one_over_r():
    # outside a long solenoid the flux is confined, so a_phi ~ C / r
    a, L = 1.0, 80.0
    mid_z = L / 2.0
    r1, r2 = 3.0, 6.0
    v1 = magneto.solenoid_potential(a, 0.0, L, 1.0,
                                    Point3(r1, 0.0, mid_z), CFG).a_cyl()[1]
    v2 = magneto.solenoid_potential(a, 0.0, L, 1.0,
                                    Point3(r2, 0.0, mid_z), CFG).a_cyl()[1]
    assert v1 * r1 == pytest.approx(v2 * r2, rel=2e-2)


def test_solenoid_on_sheet_refused():
    with pytest.raises(OnSupportError):
        magneto.solenoid_potential(1.0, 0.0, 10.0, 1.0,
                                   Point3(1.0, 0.0, 5.0), CFG)


# ---------------------------------------------------------------------------
# generic curve evaluator


def test_curve_potential_matches_loop_evaluator():
    src = circular_loop(1.0, 1.0)
    y = Point3(1.7, 0.0, 0.6)
    generic = magneto.curve_potential(src, y, CFG)
    special = magneto.loop_potential(1.0, 1.0, y, CFG)
    assert generic.a.as_tuple() == pytest.approx(special.a.as_tuple(),
                                                 rel=1e-8, abs=1e-20)


def test_curve_potential_straight_segment_closed_form():
    # finite straight wire along z from 0 to L: A_z has the standard
    # inverse-hyperbolic form mu0 I/(4 pi) [asinh((L-z)/rho) + asinh(z/rho)]
    L, current = 2.0, 1.5
    src = polyline([Point3(0, 0, 0), Point3(0, 0, L)], current)
    y = Point3(0.8, 0.0, 0.7)
    rho, z = y.r, y.z
    expected = MU0 * current / (4.0 * math.pi) * (
        math.asinh((L - z) / rho) + math.asinh(z / rho))
    got = magneto.curve_potential(src, y, CFG)
    assert got.a.z == pytest.approx(expected, rel=1e-10)
    assert abs(got.a.x) < 1e-18
    assert abs(got.a.y) < 1e-18


def test_curve_potential_square_loop_symmetry():
    # square loop in the z=0 plane: at the center A vanishes by
    # symmetry and B is vertical
    pts = [Point3(1, 1, 0), Point3(-1, 1, 0), Point3(-1, -1, 0),
           Point3(1, -1, 0)]
    src = polyline(pts, 1.0, closed=True)
    center = Point3(0.0, 0.0, 0.0)
    res = magneto.curve_potential(src, center, CFG)
    assert res.a.norm() < 1e-18
    # B_z at center of a square loop of half-side d: sqrt(2) mu0 I/(pi d)
    b = magneto.derive_b(lambda p: magneto.curve_potential(src, p, CFG).a)
    expected = math.sqrt(2.0) * MU0 * 1.0 / math.pi
    got = b(center)
    assert got.z == pytest.approx(expected, rel=1e-5)


def test_curve_potential_on_support_refused():
    src = polyline([Point3(0, 0, 0), Point3(0, 0, 2)], 1.0)
    with pytest.raises(OnSupportError):
        magneto.curve_potential(src, Point3(0.0, 0.0, 1.0), CFG)


# ---------------------------------------------------------------------------
# circuits


def test_ampere_linked_and_unlinked():
    loop_cfg = QuadConfig(abs_tol=1e-11, rel_tol=1e-8)
    a_of = lambda p: magneto.loop_potential(1.0, 2.0, p, loop_cfg).a  # noqa: E731
    h = magneto.magnetic_h(magneto.derive_b(a_of))
    # small circle threaded by the wire at (1, 0, 0)
    linked = magneto.circle_circuit(Point3(1.0, 0.0, 0.0),
                                    Vec3(0.0, 1.0, 0.0), 0.3, links=1)
    circ, resid = magneto.ampere_residual(linked, h, 2.0)
    assert abs(abs(circ) - 2.0) < 0.01 * 2.0
    # far small circle, nothing through it
    free = magneto.circle_circuit(Point3(4.0, 0.0, 0.0), EZ, 0.3, links=0)
    circ2, _ = magneto.ampere_residual(free, h, 2.0)
    assert abs(circ2) < 0.01 * 2.0


def test_circle_circuit_geometry():
    c = magneto.circle_circuit(Point3(1.0, 2.0, 3.0), EZ, 0.5)
    p = c.point(0.0)
    assert (p - Point3(1.0, 2.0, 3.0)).norm() == pytest.approx(0.5)
    # tangent orthogonal to radius vector
    for t in (0.3, 1.9):
        radial = c.point(t) - Point3(1.0, 2.0, 3.0)
        assert abs(c.tangent(t).dot(radial)) < 1e-12


# ---------------------------------------------------------------------------
# distance helper


def test_min_distance_to_circle():
    a = 1.0
    src = circular_loop(a, 1.0)
    y = Point3(1.5, 0.0, 0.8)
    expected = math.hypot(y.r - a, y.z)
    got = magneto.min_distance_to_curve(src.point, 0.0, 2.0 * math.pi, y)
    assert got == pytest.approx(expected, rel=1e-6)


def test_min_distance_rejects_empty_chart():
    with pytest.raises(InvalidGeometryError):
        magneto.min_distance_to_curve(lambda s: Point3(s, 0, 0), 1.0, 1.0,
                                      Point3(0, 0, 0))
