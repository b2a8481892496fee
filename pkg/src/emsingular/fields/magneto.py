"""Static magnetic vector potentials and derived B / H fields.

Specialized evaluators (loop, helix, solenoid sheet) reduce the layer
integral to one-dimensional quadratures in the source chart and run
them through the compiled core when it is available.  The generic
curve evaluator handles arbitrary CurveSource descriptions (polylines
in particular) with the adaptive integrator; it is slower but shares
no code path with the specialized ones, which makes it a useful
cross-check.

All results are exterior to the source; evaluation on or numerically
against the support raises OnSupportError.
"""

from __future__ import annotations

import math
from typing import Callable

from .. import exterior3, kernels
from .._core import helix_integrals, loop_phi_integral, solenoid_integrals
from ..errors import InvalidGeometryError, OnSupportError
from ..geometry import Point3, Vec3, cyl_to_cart
from ..quad import QuadConfig, integrate_adaptive
from ..sources import CurveSource
from .base import PotentialResult
from .medium import VACUUM, MediumConstants

FOUR_PI = 4.0 * math.pi


def _support_floor(scale: float) -> float:
    return 1e-8 * max(scale, 1.0)


def loop_potential(radius: float, current: float, y: Point3,
                   cfg: QuadConfig | None = None, center_z: float = 0.0,
                   medium: MediumConstants = VACUUM) -> PotentialResult:
    """Vector potential of a circular loop about the z axis.

    By symmetry only the azimuthal component survives:

        a_phi(r, z) = (mu I radius / 4 pi)
                      * int_0^{2pi} cos(psi) dpsi / dist(psi)

    with dist the chord from the field point to the loop point at
    azimuth offset psi.
    """
    if radius <= 0.0:
        raise InvalidGeometryError("loop radius must be positive")
    cfg = cfg or QuadConfig()
    a = radius
    r, z = y.r, y.z - center_z
    d = math.hypot(r - a, z)
    if d < _support_floor(a):
        raise OnSupportError("field point lies on the loop (distance %g)" % d)
    val, err, evals, ok = loop_phi_integral(
        r, z, a, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
    a_phi = medium.mu * current * a / FOUR_PI * val
    vec = cyl_to_cart(0.0, a_phi, 0.0, y.phi)
    return PotentialResult(y, vec, 0.0, {
        "a_phi_error": abs(medium.mu * current * a / FOUR_PI) * err,
        "evaluations": evals,
        "converged": bool(ok),
    })


def helix_potential(radius: float, pitch: float, length: float,
                    current: float, y: Point3,
                    cfg: QuadConfig | None = None, sigma0: float = 0.0,
                    medium: MediumConstants = VACUUM) -> PotentialResult:
    """Vector potential of a unit-speed helical wire.

    The wire is (radius cos(P s), radius sin(P s), pitch s) for s in
    [sigma0, sigma0 + length], P = sqrt(1 - pitch^2)/radius.  In the
    field point's cylindrical frame:

        a_r   = -(mu I radius P / 4 pi) * int sin(P s - phi) / R ds
        a_phi = +(mu I radius P / 4 pi) * int cos(P s - phi) / R ds
        a_z   = +(mu I pitch / 4 pi)    * int ds / R

    with R the chordal distance from the field point to the wire point.
    """
    if not (0.0 < pitch < 1.0):
        raise InvalidGeometryError("pitch fraction must lie in (0, 1)")
    if radius <= 0.0 or length <= 0.0:
        raise InvalidGeometryError("radius and length must be positive")
    cfg = cfg or QuadConfig()
    a, p = radius, pitch
    big_p = math.sqrt(1.0 - p * p) / a
    _min_distance_guard(
        lambda s: Point3(a * math.cos(big_p * s), a * math.sin(big_p * s),
                         p * s),
        sigma0, sigma0 + length, y, _support_floor(a))
    i_sin, i_cos, i_one, err, evals, ok = helix_integrals(
        y.r, y.phi, y.z, a, p, big_p, sigma0, sigma0 + length,
        cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
    pref = medium.mu * current / FOUR_PI
    a_r = -pref * a * big_p * i_sin
    a_phi = pref * a * big_p * i_cos
    a_z = pref * p * i_one
    vec = cyl_to_cart(a_r, a_phi, a_z, y.phi)
    return PotentialResult(y, vec, 0.0, {
        "chart_error": abs(pref) * err,
        "evaluations": evals,
        "converged": bool(ok),
    })


def solenoid_potential(radius: float, pitch: float, length: float,
                       kappa0: float, y: Point3,
                       cfg: QuadConfig | None = None,
                       medium: MediumConstants = VACUUM) -> PotentialResult:
    """Vector potential of the helical current sheet on a finite cylinder.

    The axial chart integral has a closed form (inverse hyperbolic
    sines), leaving a single azimuthal quadrature.  The radial
    component vanishes identically by the odd symmetry of sin(u) du.

        a_phi = (mu kappa0 radius^2 P / 4 pi) * int_0^{2pi} F(u) cos u du
        a_z   = (mu kappa0 radius pitch / 4 pi) * int_0^{2pi} F(u) du

    where F(u) = asinh(z / sqrt(c1)) - asinh((z - length) / sqrt(c1)),
    c1 = r^2 + radius^2 - 2 r radius cos u.
    """
    if not (0.0 <= pitch < 1.0):
        raise InvalidGeometryError("pitch fraction must lie in [0, 1)")
    if radius <= 0.0 or length <= 0.0:
        raise InvalidGeometryError("radius and length must be positive")
    cfg = cfg or QuadConfig()
    a, p = radius, pitch
    big_p = math.sqrt(1.0 - p * p) / a
    r, z = y.r, y.z
    if 0.0 <= z <= length:
        d = abs(r - a)
    else:
        dz = z - length if z > length else -z
        d = math.hypot(r - a, dz)
    if d < _support_floor(a):
        raise OnSupportError("field point lies on the sheet (distance %g)" % d)
    _, i_cos, i_one, err, evals, ok = solenoid_integrals(
        r, z, a, length, cfg.abs_tol, cfg.rel_tol, cfg.max_subdivisions)
    pref = medium.mu * kappa0 * a / FOUR_PI
    a_phi = pref * a * big_p * i_cos
    a_z = pref * p * i_one
    vec = cyl_to_cart(0.0, a_phi, a_z, y.phi)
    return PotentialResult(y, vec, 0.0, {
        "chart_error": abs(pref) * err,
        "evaluations": evals,
        "converged": bool(ok),
    })


def curve_potential(src: CurveSource, y: Point3,
                    cfg: QuadConfig | None = None,
                    medium: MediumConstants = VACUUM) -> PotentialResult:
    """Vector potential of a generic CurveSource by direct quadrature.

    Integrates mu * i0 * kernel(y, x(s)) * W(s) * omega_f(d/ds) over the
    chart.  Polyline charts are split at the vertices so each panel sees
    a smooth integrand.
    """
    cfg = cfg or QuadConfig()
    s0, s1 = src.chart
    scale = max(abs(v) for pt in (src.point(s0), src.point(s1))
                for v in pt.as_tuple())
    _min_distance_guard(src.point, s0, s1, y,
                        _support_floor(max(scale, 1.0)))

    if src.kind == "polyline":
        breaks = [float(k) for k in range(int(s0), int(s1) + 1)]
    else:
        breaks = [s0, s1]
    comps = [0.0, 0.0, 0.0]
    err = 0.0
    evals = 0
    ok = True
    for left, right in zip(breaks[:-1], breaks[1:]):
        for ax in range(3):
            def integrand(s: float, ax: int = ax) -> float:
                f = kernels.free_kernel(y, src.point(s))
                w = src.w_field(s).as_tuple()[ax]
                return f * w * src.chart_weight(s)

            res = integrate_adaptive(integrand, left, right, cfg)
            comps[ax] += res.value
            err += res.error_estimate
            evals += res.evaluations
            ok = ok and res.converged
    pref = medium.mu * src.i0
    vec = pref * Vec3(*comps)
    return PotentialResult(y, vec, 0.0, {
        "chart_error": abs(pref) * err,
        "evaluations": evals,
        "converged": ok,
    })


# ---------------------------------------------------------------------------
# derived fields


def derive_b(a_field: Callable[[Point3], Vec3],
             h: float | None = None) -> Callable[[Point3], Vec3]:
    """B evaluator from a vector-potential evaluator.

    The potential is read as a 1-form and B as the Hodge dual of its
    exterior derivative, so the sign conventions live in one place
    (the exterior calculus tables) rather than in a hand-written curl.
    """
    form = exterior3.FormField.one_form(
        lambda p, t: a_field(p).x,
        lambda p, t: a_field(p).y,
        lambda p, t: a_field(p).z,
    )

    def b_at(point: Point3) -> Vec3:
        two = exterior3.d_numeric(form, point, 0.0, h)
        dual = exterior3.hodge_numeric(two)
        return Vec3(dual[(0,)], dual[(1,)], dual[(2,)])

    return b_at


def magnetic_h(b_field: Callable[[Point3], Vec3],
               medium: MediumConstants = VACUUM) -> Callable[[Point3], Vec3]:
    """H = B / mu for a linear medium."""
    return lambda p: b_field(p) / medium.mu


# ---------------------------------------------------------------------------
# circuits and the circulation check


class Circuit:
    """Closed oriented curve for circulation integrals.

    point(t) for t in chart = (t0, t1), tangent(t) its derivative.
    links counts signed crossings of the source through any spanning
    surface; it is bookkeeping supplied by the caller, not computed.
    """

    def __init__(self, point: Callable[[float], Point3],
                 tangent: Callable[[float], Vec3],
                 chart: tuple[float, float], links: int = 0):
        self.point = point
        self.tangent = tangent
        self.chart = chart
        self.links = links


def circle_circuit(center: Point3, normal: Vec3, radius: float,
                   links: int = 0) -> Circuit:
    """Circle of given radius about `center` in the plane normal to
    `normal`, oriented by the right-hand rule around the normal."""
    n = normal.normalized()
    # any unit vector orthogonal to n
    trial = Vec3(1.0, 0.0, 0.0) if abs(n.x) < 0.9 else Vec3(0.0, 1.0, 0.0)
    u = (trial - n.dot(trial) * n).normalized()
    v = n.cross(u)

    def point(t: float) -> Point3:
        w = radius * (math.cos(t) * u + math.sin(t) * v)
        return Point3(center.x + w.x, center.y + w.y, center.z + w.z)

    def tangent(t: float) -> Vec3:
        return radius * (-math.sin(t) * u + math.cos(t) * v)

    return Circuit(point, tangent, (0.0, 2.0 * math.pi), links)


def circulation(circuit: Circuit, h_field: Callable[[Point3], Vec3],
                cfg: QuadConfig | None = None) -> float:
    """Line integral of H along the circuit (amps)."""
    cfg = cfg or QuadConfig(abs_tol=1e-10, rel_tol=1e-8)

    def integrand(t: float) -> float:
        return h_field(circuit.point(t)).dot(circuit.tangent(t))

    return integrate_adaptive(integrand, *circuit.chart, cfg).value


def ampere_residual(circuit: Circuit, h_field: Callable[[Point3], Vec3],
                    current: float,
                    cfg: QuadConfig | None = None) -> tuple[float, float]:
    """(circulation, circulation - links * current) for the circuit."""
    circ = circulation(circuit, h_field, cfg)
    return circ, circ - circuit.links * current


# ---------------------------------------------------------------------------


def min_distance_to_curve(point_of: Callable[[float], Point3],
                          s0: float, s1: float, y: Point3,
                          samples: int = 512) -> float:
    """Approximate min |y - curve| by coarse sampling plus a ternary
    refinement around the best sample.  Adequate as a proximity guard
    (the quadrature itself degrades loudly well before the kernel
    singularity is actually reached)."""
    if s1 <= s0:
        raise InvalidGeometryError("empty chart (%g, %g)" % (s0, s1))
    ds = (s1 - s0) / samples
    best_k, best_d2 = 0, float("inf")
    for k in range(samples + 1):
        p = point_of(s0 + k * ds)
        d2 = (y - p).dot(y - p)
        if d2 < best_d2:
            best_k, best_d2 = k, d2
    lo = max(s0, s0 + (best_k - 1) * ds)
    hi = min(s1, s0 + (best_k + 1) * ds)
    for _ in range(40):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        p1, p2 = point_of(m1), point_of(m2)
        if (y - p1).dot(y - p1) < (y - p2).dot(y - p2):
            hi = m2
        else:
            lo = m1
    p = point_of(0.5 * (lo + hi))
    return min((y - p).norm(), math.sqrt(best_d2))


def _min_distance_guard(point_of: Callable[[float], Point3],
                        s0: float, s1: float, y: Point3,
                        floor: float, samples: int = 512) -> None:
    d = min_distance_to_curve(point_of, s0, s1, y, samples)
    if d < floor:
        raise OnSupportError(
            "field point lies on the source curve (distance %g)" % d)
