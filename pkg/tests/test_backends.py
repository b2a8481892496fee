"""Compiled backend vs pure-Python reference.

Both backends implement the same algorithms with the same panel rule
and the same truncation logic, so agreement should sit at rounding
level, far below the quadrature tolerances.  If the extension is not
built the parity tests skip and the fallback identity test still runs.
"""

import pytest

from emsingular import _core
from emsingular._core import _ref

_fast = pytest.importorskip("emsingular._core._fast")

TOLS = (1e-12, 1e-9, 400)   # abs_tol, rel_tol, max_sub


def close(u, v, rel=1e-12, absolute=1e-15):
    assert abs(u - v) <= absolute + rel * max(abs(u), abs(v))


def test_backend_name_matches_flag():
    assert _core.backend_name() in ("compiled", "pure-python")
    assert (_core.backend_name() == "compiled") == _core.USING_COMPILED


def test_bound_functions_come_from_selected_backend():
    impl = _fast if _core.USING_COMPILED else _ref
    assert _core.bessel_k0 is impl.bessel_k0
    assert _core.plate_green_sum is impl.plate_green_sum


@pytest.mark.parametrize("x", [1e-3, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0,
                               10.0, 30.0, 100.0, 700.0])
def test_bessel_k0_parity(x):
    close(_fast.bessel_k0(x), _ref.bessel_k0(x), rel=1e-14, absolute=0.0)


@pytest.mark.parametrize("r,z,a", [
    (0.3, 0.2, 1.0),
    (1.7, 0.6, 1.0),
    (5.0, -2.0, 1.3),
    (0.0, 0.5, 1.0),
    (0.99, 0.02, 1.0),   # near the wire, integrand strongly peaked
])
def test_loop_integral_parity(r, z, a):
    vf, ef, nf, okf = _fast.loop_phi_integral(r, z, a, *TOLS)
    vr, er, nr, okr = _ref.loop_phi_integral(r, z, a, *TOLS)
    close(vf, vr)
    close(ef, er, rel=1e-6, absolute=1e-18)
    assert nf == nr
    assert bool(okf) == bool(okr)


@pytest.mark.parametrize("r,phi,z,p", [
    (1.4, 0.7, 2.0, 1e-3),
    (0.6, -1.2, 5.0, 0.3),
    (2.5, 3.0, -1.0, 0.08),
])
def test_helix_integrals_parity(r, phi, z, p):
    a = 1.0
    big_p = (1.0 - p * p) ** 0.5 / a
    s1 = 3.0 * 2.0 * 3.141592653589793 / big_p
    ff = _fast.helix_integrals(r, phi, z, a, p, big_p, 0.0, s1, *TOLS)
    rr = _ref.helix_integrals(r, phi, z, a, p, big_p, 0.0, s1, *TOLS)
    for uf, ur in zip(ff[:3], rr[:3]):
        close(uf, ur)
    assert ff[4] == rr[4]              # evaluation counts
    assert bool(ff[5]) == bool(rr[5])


@pytest.mark.parametrize("r,z", [
    (0.5, 30.0),
    (10.0, 30.0),
    (1.2, -0.5),
    (0.0, 10.0),
])
def test_solenoid_integrals_parity(r, z):
    ff = _fast.solenoid_integrals(r, z, 1.0, 60.0, *TOLS)
    rr = _ref.solenoid_integrals(r, z, 1.0, 60.0, *TOLS)
    assert ff[0] == rr[0] == 0.0       # odd component vanishes by symmetry
    close(ff[1], rr[1])
    close(ff[2], rr[2])
    assert ff[4] == rr[4]
    assert bool(ff[5]) == bool(rr[5])


@pytest.mark.parametrize("rho,z,zp", [
    (0.35, 0.4, 0.7),
    (2.0, 0.25, 0.8),
    (0.01, 0.5, 0.5),
    (0.35, 0.999, 0.7),
])
def test_plate_green_sum_parity(rho, z, zp):
    ff = _fast.plate_green_sum(rho, z, zp, 1.0, 1e-12, 100000)
    rr = _ref.plate_green_sum(rho, z, zp, 1.0, 1e-12, 100000)
    close(ff[0], rr[0], rel=1e-13)
    close(ff[1], rr[1], rel=1e-6, absolute=1e-20)
    assert ff[2] == rr[2]              # identical truncation point
    assert bool(ff[3]) == bool(rr[3])


def test_reference_backend_is_complete():
    # everything the package re-exports exists on the fallback too
    for name in ("bessel_k0", "loop_phi_integral", "helix_integrals",
                 "solenoid_integrals", "plate_green_sum"):
        assert callable(getattr(_ref, name))
