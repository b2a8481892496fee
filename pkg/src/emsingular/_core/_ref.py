"""Pure-Python reference backend for the hot numerical kernels.

The compiled twin (_fast.pyx) mirrors these routines statement for
statement; parity tests hold the two to 1e-12 relative.  Everything here
is scalar math on purpose: the functions are called point by point from
the field evaluators, and the compiled backend exists precisely because
this inner loop dominates runtime.

Functions return plain tuples of floats/ints so both backends share a
calling convention.
"""

from __future__ import annotations

import math

from ._gk import WG, WGK, XGK
from ._k0_table import SEGMENTS

_EULER_GAMMA = 0.57721566490153286


def bessel_k0(x: float) -> float:
    """Modified Bessel K0 for x > 0; relative accuracy ~1e-14 on (0, 700].

    Ascending series below 2, frozen Chebyshev segments (see _k0_table)
    on [2, 700], leading asymptotic form beyond (underflows near 745).
    """
    if x <= 0.0:
        raise ValueError("bessel_k0 requires x > 0, got %r" % (x,))
    if x <= 2.0:
        # K0 = -(ln(x/2) + gamma) I0(x) + sum_k H_k (x^2/4)^k / (k!)^2
        q = 0.25 * x * x
        i0 = 1.0
        s = 0.0
        term = 1.0
        h = 0.0
        for k in range(1, 30):
            term *= q / (k * k)
            h += 1.0 / k
            i0 += term
            s += term * h
            if term < 1e-18:
                break
        return -(math.log(0.5 * x) + _EULER_GAMMA) * i0 + s
    if x <= 700.0:
        for lo, hi, coefs in SEGMENTS:
            if x <= hi:
                s_lo, s_hi = 1.0 / hi, 1.0 / lo
                t = (2.0 / x - s_hi - s_lo) / (s_hi - s_lo)
                b1 = 0.0
                b2 = 0.0
                for c in reversed(coefs[1:]):
                    b1, b2 = c + 2.0 * t * b1 - b2, b1
                g = coefs[0] + t * b1 - b2
                return g * math.exp(-x) / math.sqrt(x)
    # asymptotic tail; exp(-x) underflows to 0 by x ~ 745 anyway
    if x > 746.0:
        return 0.0
    return math.sqrt(math.pi / (2.0 * x)) * math.exp(-x) * (
        1.0 - 0.125 / x + (9.0 / 128.0) / (x * x)
    )


def _panel(f, a: float, b: float):
    """Gauss-Kronrod 7/15 panel: (kronrod value, |K15-G7| scaled)."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = f(mid)
    resk = WGK[7] * fc
    resg = WG[3] * fc
    for j in range(7):
        dx = half * XGK[j]
        f1 = f(mid - dx)
        f2 = f(mid + dx)
        resk += WGK[j] * (f1 + f2)
        if j % 2 == 1:
            resg += WG[j // 2] * (f1 + f2)
    return resk * half, abs(resk - resg) * abs(half)


def _adaptive(f, a: float, b: float, abs_tol: float, rel_tol: float,
              max_sub: int):
    """Worst-first adaptive driver; mirrors quad._adaptive_core."""
    value, err = _panel(f, a, b)
    panels = [(a, b, value, err)]
    evals = 15
    while True:
        total = math.fsum(p[2] for p in panels)
        total_err = math.fsum(p[3] for p in panels)
        if total_err <= max(abs_tol, rel_tol * abs(total)):
            return total, max(total_err, 1e-15 * abs(total)), evals, 1
        if len(panels) >= max_sub:
            return total, max(total_err, 1e-15 * abs(total)), evals, 0
        worst = 0
        for i in range(1, len(panels)):
            if panels[i][3] > panels[worst][3]:
                worst = i
        lo, hi, _, _ = panels[worst]
        mid = 0.5 * (lo + hi)
        v1, e1 = _panel(f, lo, mid)
        v2, e2 = _panel(f, mid, hi)
        evals += 30
        panels[worst] = (lo, mid, v1, e1)
        panels.append((mid, hi, v2, e2))


def loop_phi_integral(r: float, z: float, a: float, abs_tol: float,
                      rel_tol: float, max_sub: int):
    """Int_0^{2pi} cos(psi) / sqrt(r^2+a^2+z^2 - 2 a r cos psi) dpsi.

    Even in psi, so integrated on [0, pi] and doubled.
    Returns (value, error_estimate, evaluations, converged).
    """
    c0 = r * r + a * a + z * z
    two_ar = 2.0 * a * r

    def f(psi: float) -> float:
        return math.cos(psi) / math.sqrt(c0 - two_ar * math.cos(psi))

    v, e, n, ok = _adaptive(f, 0.0, math.pi, 0.5 * abs_tol, rel_tol, max_sub)
    return 2.0 * v, 2.0 * e, n, ok


def helix_integrals(r: float, phi: float, z: float, a: float, p: float,
                    P: float, s0: float, s1: float, abs_tol: float,
                    rel_tol: float, max_sub: int):
    """The three helix quadratures over arc length s in [s0, s1]:

        I_sin = Int sin(P s - phi) / R ds
        I_cos = Int cos(P s - phi) / R ds
        I_one = Int 1 / R ds
        R^2   = r^2 + a^2 + z^2 + p^2 s^2 - 2 z p s - 2 a r cos(P s - phi)

    Returns (I_sin, I_cos, I_one, err, evaluations, converged).
    """
    c0 = r * r + a * a + z * z
    two_ar = 2.0 * a * r

    def rad(s: float) -> float:
        u = P * s - phi
        return math.sqrt(c0 + p * s * (p * s - 2.0 * z) - two_ar * math.cos(u))

    vs, es, ns, oks = _adaptive(
        lambda s: math.sin(P * s - phi) / rad(s), s0, s1, abs_tol, rel_tol,
        max_sub)
    vc, ec, nc, okc = _adaptive(
        lambda s: math.cos(P * s - phi) / rad(s), s0, s1, abs_tol, rel_tol,
        max_sub)
    vz, ez, nz, okz = _adaptive(
        lambda s: 1.0 / rad(s), s0, s1, abs_tol, rel_tol, max_sub)
    return vs, vc, vz, es + ec + ez, ns + nc + nz, oks and okc and okz


def solenoid_integrals(r: float, z: float, a: float, L0: float,
                       abs_tol: float, rel_tol: float, max_sub: int):
    """Azimuth quadratures for the cylinder sheet, inner integral closed.

    With c1(u) = r^2 + a^2 - 2 a r cos u, the closed-form inner integral
    over the axial coordinate is

        F(u) = asinh(z / sqrt(c1)) - asinh((z - L0) / sqrt(c1)),

    and the azimuthal components reduce (after shifting by the field
    azimuth, allowed by periodicity) to

        I_cos = Int_0^{2pi} F(u) cos u du   (even, computed on [0, pi])
        I_one = Int_0^{2pi} F(u) du
        I_sin = 0 exactly (odd part of an even integrand).

    Returns (I_sin, I_cos, I_one, err, evaluations, converged).
    """
    c0 = r * r + a * a
    two_ar = 2.0 * a * r

    def F(u: float) -> float:
        root = math.sqrt(c0 - two_ar * math.cos(u))
        return math.asinh(z / root) - math.asinh((z - L0) / root)

    vc, ec, nc, okc = _adaptive(lambda u: F(u) * math.cos(u), 0.0, math.pi,
                                0.5 * abs_tol, rel_tol, max_sub)
    v1, e1, n1, ok1 = _adaptive(F, 0.0, math.pi, 0.5 * abs_tol, rel_tol,
                                max_sub)
    return 0.0, 2.0 * vc, 2.0 * v1, 2.0 * (ec + e1), nc + n1, okc and ok1


def plate_green_sum(rho: float, z: float, zp: float, L: float, tol: float,
                    n_max: int):
    """Dirichlet slab kernel series (1/(pi L)) sum sin sin K0(n pi rho / L).

    Truncates on the K0 envelope (immune to sine zeros); the reported
    error bounds the tail via K0(x + d) < K0(x) e^{-d}.
    Returns (value, tail_bound, n_terms, converged).
    """
    pref = 1.0 / (math.pi * L)
    kz = math.pi * z / L
    kzp = math.pi * zp / L
    step = math.pi * rho / L
    total = 0.0
    n = 0
    while n < n_max:
        n += 1
        arg = n * step
        if arg > 746.0:
            return pref * total, 0.0, n - 1, 1
        env = bessel_k0(arg)
        total += math.sin(n * kz) * math.sin(n * kzp) * env
        if pref * env < tol:
            q = math.exp(-step)
            tail = pref * env * q / (1.0 - q)
            return pref * total, tail, n, 1
    q = math.exp(-step)
    env = bessel_k0(n * step)
    return pref * total, pref * env * q / (1.0 - q), n, 0
