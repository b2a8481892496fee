"""Source descriptions: Leray weights, calibration, current positivity.

Orientation bookkeeping follows SIGN_CONVENTIONS.md: weights are taken
against the standard volume dx^dy^dz, and constructors then solve the
layer density so the physical current is +current toward increasing
chart parameter.  The tests pin both layers separately.
"""

import math

import pytest

from emsingular.errors import DegenerateFoliationError, InvalidGeometryError
from emsingular.geometry import EX, EY, EZ, Point3, Vec3
from emsingular.sources import (CurveSource, DipoleSource, circular_loop,
                                crossing_density, helix_curve,
                                leray_weight_orthogonal, line_current,
                                polyline, solenoid_sheet,
                                static_point_charge, surface_current,
                                uniform_point_charge)


# ---------------------------------------------------------------------------
# Leray weights


def test_leray_single_constraint():
    ld = leray_weight_orthogonal([Vec3(2.0, 0.0, 0.0)])
    assert ld.codim == 1
    assert ld.weight == pytest.approx(0.5)
    assert ld.orientation.as_tuple() == pytest.approx((1.0, 0.0, 0.0))


def test_leray_two_constraints_weight_and_orientation():
    ld = leray_weight_orthogonal([Vec3(3.0, 0.0, 0.0), Vec3(0.0, 0.0, 2.0)])
    assert ld.codim == 2
    assert ld.weight == pytest.approx(1.0 / 6.0)
    # x_hat cross z_hat = -y_hat
    assert ld.orientation.as_tuple() == pytest.approx((0.0, -1.0, 0.0))


def test_leray_gradient_order_flips_orientation():
    g1, g2 = Vec3(1.0, 0.0, 0.0), Vec3(0.0, 1.0, 0.0)
    fwd = leray_weight_orthogonal([g1, g2])
    rev = leray_weight_orthogonal([g2, g1])
    assert fwd.weight == rev.weight
    assert (fwd.orientation + rev.orientation).norm() == pytest.approx(0.0)


def test_leray_rejects_bad_frames():
    with pytest.raises(DegenerateFoliationError):
        leray_weight_orthogonal([Vec3(0.0, 0.0, 0.0)])
    with pytest.raises(DegenerateFoliationError):
        leray_weight_orthogonal([EX, Vec3(1.0, 1.0, 0.0)])
    with pytest.raises(ValueError):
        leray_weight_orthogonal([EX, EY, EZ])


# ---------------------------------------------------------------------------
# circular loop


def test_loop_chart_weight_is_minus_radius():
    # gradient order (r - a, z) against dx^dy^dz gives the leaf form
    # -a dphi; see SIGN_CONVENTIONS.md "Leray weights"
    a = 2.5
    src = circular_loop(a, 1.0)
    for s in (0.0, 1.0, 2.0, 4.0):
        assert src.chart_weight(s) == pytest.approx(-a, rel=1e-12)


def test_loop_current_positivity_everywhere():
    src = circular_loop(1.0, 2.5)
    for s in (0.0, 0.7, math.pi, 5.1):
        assert line_current(src, s) == pytest.approx(2.5, rel=1e-12)
    # the raw contraction is negative; the calibrated density flips it
    assert src.contraction(1.0) < 0.0
    assert src.i0 < 0.0


def test_loop_geometry():
    src = circular_loop(2.0, 1.0, center_z=0.5)
    p = src.point(0.0)
    assert (p.x, p.y, p.z) == pytest.approx((2.0, 0.0, 0.5))
    assert src.closed
    t = src.tangent(0.0)
    assert t.as_tuple() == pytest.approx((0.0, 2.0, 0.0))
    with pytest.raises(InvalidGeometryError):
        circular_loop(-1.0, 1.0)


# ---------------------------------------------------------------------------
# helix


def test_helix_unit_speed_and_chart():
    src = helix_curve(1.5, 0.3, 10.0, 1.0, sigma0=2.0)
    assert src.chart == (2.0, 12.0)
    assert not src.closed
    for s in (2.0, 5.5, 11.9):
        assert src.tangent(s).norm() == pytest.approx(1.0, rel=1e-12)
        # tangent and W coincide for the unit-speed chart
        assert (src.tangent(s) - src.w_field(s)).norm() < 1e-12


def test_helix_current_positivity():
    src = helix_curve(1.0, 0.2, 5.0, 1.5)
    for s in (0.1, 2.0, 4.9):
        assert line_current(src, s) == pytest.approx(1.5, rel=1e-12)


def test_helix_rises_by_pitch_fraction():
    p = 0.25
    src = helix_curve(1.0, p, 8.0, 1.0)
    z0 = src.point(0.0).z
    z1 = src.point(8.0).z
    assert z1 - z0 == pytest.approx(p * 8.0, rel=1e-12)
    # radius stays fixed
    assert src.point(3.7).r == pytest.approx(1.0, rel=1e-12)


def test_helix_pitch_validation():
    with pytest.raises(InvalidGeometryError):
        helix_curve(1.0, 0.0, 5.0, 1.0)
    with pytest.raises(InvalidGeometryError):
        helix_curve(1.0, 1.0, 5.0, 1.0)


# ---------------------------------------------------------------------------
# polyline


def test_polyline_walks_segments():
    pts = [Point3(0, 0, 0), Point3(1, 0, 0), Point3(1, 1, 0)]
    src = polyline(pts, 2.0)
    assert src.chart == (0.0, 2.0)
    assert src.point(0.5).as_tuple() == pytest.approx((0.5, 0.0, 0.0))
    assert src.point(1.5).as_tuple() == pytest.approx((1.0, 0.5, 0.0))
    assert src.tangent(0.2).as_tuple() == pytest.approx((1.0, 0.0, 0.0))
    assert src.tangent(1.2).as_tuple() == pytest.approx((0.0, 1.0, 0.0))


def test_polyline_closed_appends_return_leg():
    pts = [Point3(0, 0, 0), Point3(1, 0, 0), Point3(0, 1, 0)]
    src = polyline(pts, 1.0, closed=True)
    assert src.closed
    assert src.chart == (0.0, 3.0)
    assert src.point(3.0 - 1e-12).as_tuple() == pytest.approx(
        (0.0, 0.0, 0.0), abs=1e-11)


def test_polyline_current_is_direct():
    src = polyline([Point3(0, 0, 0), Point3(0, 0, 2)], 3.0)
    assert line_current(src, 0.5) == pytest.approx(3.0)
    assert src.i0 == 3.0


def test_polyline_rejects_degenerate():
    with pytest.raises(InvalidGeometryError):
        polyline([Point3(0, 0, 0)], 1.0)
    with pytest.raises(InvalidGeometryError):
        polyline([Point3(0, 0, 0), Point3(0, 0, 0)], 1.0)


# ---------------------------------------------------------------------------
# solenoid sheet


def test_solenoid_sheet_current_density():
    a, p, kappa0 = 1.0, 0.0, 3.0
    sheet = solenoid_sheet(a, p, 10.0, kappa0)
    k = surface_current(sheet, 0.0, 5.0)
    # pitch 0: purely azimuthal, |K| = kappa0 (weight 1, unit W)
    assert k.norm() == pytest.approx(kappa0, rel=1e-12)
    assert abs(k.z) < 1e-15
    # current crossing a vertical unit cut is the azimuthal component
    assert abs(crossing_density(sheet, 0.0, 5.0, EZ)) == pytest.approx(
        kappa0, rel=1e-12)


def test_solenoid_sheet_pitch_splits_components():
    a, p, kappa0 = 2.0, 0.4, 1.0
    big_p = math.sqrt(1.0 - p * p) / a
    sheet = solenoid_sheet(a, p, 10.0, kappa0)
    s = 0.3
    k = surface_current(sheet, s, 5.0)
    phi_hat = Vec3(-math.sin(s), math.cos(s), 0.0)
    assert k.dot(phi_hat) == pytest.approx(kappa0 * a * big_p, rel=1e-12)
    assert k.z == pytest.approx(kappa0 * p, rel=1e-12)
    assert k.norm() == pytest.approx(kappa0, rel=1e-12)
    # crossing magnitudes follow the component split
    assert abs(crossing_density(sheet, s, 5.0, EZ)) == pytest.approx(
        kappa0 * a * big_p, rel=1e-12)
    assert abs(crossing_density(sheet, s, 5.0, phi_hat)) == pytest.approx(
        kappa0 * p, rel=1e-12)


def test_solenoid_sheet_geometry_validation():
    solenoid_sheet(1.0, 0.0, 1.0, 1.0)  # pitch 0 allowed here
    with pytest.raises(InvalidGeometryError):
        solenoid_sheet(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(InvalidGeometryError):
        solenoid_sheet(0.0, 0.1, 1.0, 1.0)


# ---------------------------------------------------------------------------
# point sources


def test_static_point_charge():
    src = static_point_charge(2e-9, Point3(1.0, 2.0, 3.0))
    assert src.q == 2e-9
    assert src.position(17.0).as_tuple() == (1.0, 2.0, 3.0)
    assert src.velocity(17.0).norm() == 0.0


def test_uniform_point_charge_trajectory():
    v = Vec3(1.0, -2.0, 0.5)
    src = uniform_point_charge(1.0, Point3(0.0, 0.0, 0.0), v)
    p = src.position(2.0)
    assert p.as_tuple() == pytest.approx((2.0, -4.0, 1.0))
    assert src.velocity(99.0) is v


def test_dipole_source_fields():
    d = DipoleSource(Point3(0, 0, 0), Vec3(0, 0, 1e-12))
    assert d.moment.z == 1e-12


# ---------------------------------------------------------------------------
# calibration properties


def test_calibration_insensitive_to_w_scaling():
    # scaling the direction field W must not change the physical
    # current: the calibrated density absorbs the factor
    base = circular_loop(1.0, 1.0)

    def w_double(s):
        return 2.0 * base.w_field(s)

    scaled = CurveSource(base.point, base.tangent, base.leray, w_double,
                         0.0, base.chart, True)
    from emsingular.sources import _calibrate
    scaled = _calibrate(scaled, 1.0)
    assert scaled.i0 == pytest.approx(0.5 * base.i0, rel=1e-12)
    for s in (0.3, 2.2):
        assert line_current(scaled, s) == pytest.approx(
            line_current(base, s), rel=1e-12)


def test_calibration_rejects_transverse_w():
    base = circular_loop(1.0, 1.0)
    radial = CurveSource(base.point, base.tangent, base.leray,
                         lambda s: Vec3(math.cos(s), math.sin(s), 0.0),
                         0.0, base.chart, True)
    from emsingular.sources import _calibrate
    with pytest.raises(DegenerateFoliationError):
        _calibrate(radial, 1.0)
