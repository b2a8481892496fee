# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot numerical kernels.

Statement-for-statement mirror of _ref.py; the tables (Gauss-Kronrod
nodes, K0 Chebyshev segments) are imported from the shared Python
modules at init so the two backends cannot drift apart.  Parity is
enforced by tests to 1e-12 relative.
"""

from libc.math cimport asinh, cos, exp, fabs, log, sin, sqrt
from libc.stdlib cimport free, malloc

from ._gk import WG as _WG_PY, WGK as _WGK_PY, XGK as _XGK_PY
from ._k0_table import SEGMENTS as _SEGMENTS_PY

cdef double EULER_GAMMA = 0.57721566490153286

# ---------------------------------------------------------------------------
# tables copied into C storage at module import

cdef double XGK[8]
cdef double WGK[8]
cdef double WG[4]

cdef int NSEG = 0
cdef double SEG_LO[16]
cdef double SEG_HI[16]
cdef int SEG_N[16]
cdef double SEG_COEF[16][40]


def _init_tables():
    cdef int i, j
    if len(_XGK_PY) != 8 or len(_WGK_PY) != 8 or len(_WG_PY) != 4:
        raise ImportError("unexpected Gauss-Kronrod table sizes")
    for i in range(8):
        XGK[i] = _XGK_PY[i]
        WGK[i] = _WGK_PY[i]
    for i in range(4):
        WG[i] = _WG_PY[i]
    global NSEG
    NSEG = len(_SEGMENTS_PY)
    if NSEG > 16:
        raise ImportError("too many K0 segments for static storage")
    for i, (lo, hi, coefs) in enumerate(_SEGMENTS_PY):
        SEG_LO[i] = lo
        SEG_HI[i] = hi
        SEG_N[i] = len(coefs)
        if len(coefs) > 40:
            raise ImportError("K0 segment has too many coefficients")
        for j in range(len(coefs)):
            SEG_COEF[i][j] = coefs[j]


_init_tables()


# ---------------------------------------------------------------------------
# modified Bessel K0

cdef double _k0(double x) nogil:
    cdef double q, i0, s, term, h, s_lo, s_hi, t, b0, b1, b2, g
    cdef int k, i, j, n
    if x <= 2.0:
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
        return -(log(0.5 * x) + EULER_GAMMA) * i0 + s
    if x <= 700.0:
        for i in range(NSEG):
            if x <= SEG_HI[i]:
                s_lo = 1.0 / SEG_HI[i]
                s_hi = 1.0 / SEG_LO[i]
                t = (2.0 / x - s_hi - s_lo) / (s_hi - s_lo)
                b1 = 0.0
                b2 = 0.0
                n = SEG_N[i]
                for j in range(n - 1, 0, -1):
                    b0 = SEG_COEF[i][j] + 2.0 * t * b1 - b2
                    b2 = b1
                    b1 = b0
                g = SEG_COEF[i][0] + t * b1 - b2
                return g * exp(-x) / sqrt(x)
    if x > 746.0:
        return 0.0
    return sqrt(3.141592653589793 / (2.0 * x)) * exp(-x) * (
        1.0 - 0.125 / x + (9.0 / 128.0) / (x * x)
    )


def bessel_k0(double x):
    """Modified Bessel K0 for x > 0 (compiled)."""
    if x <= 0.0:
        raise ValueError("bessel_k0 requires x > 0, got %r" % (x,))
    return _k0(x)


# ---------------------------------------------------------------------------
# adaptive Gauss-Kronrod with C integrands

cdef struct Params:
    double c0
    double two_ar
    double p
    double P
    double phi
    double z
    double L0

# integrand selectors
cdef enum:
    KIND_LOOP = 0
    KIND_HELIX_SIN = 1
    KIND_HELIX_COS = 2
    KIND_HELIX_ONE = 3
    KIND_SOL_COS = 4
    KIND_SOL_ONE = 5


cdef inline double _helix_rad(Params *pr, double s) nogil:
    cdef double u = pr.P * s - pr.phi
    return sqrt(pr.c0 + pr.p * s * (pr.p * s - 2.0 * pr.z)
                - pr.two_ar * cos(u))


cdef inline double _sol_f(Params *pr, double u) nogil:
    cdef double root = sqrt(pr.c0 - pr.two_ar * cos(u))
    return asinh(pr.z / root) - asinh((pr.z - pr.L0) / root)


cdef double _integrand(int kind, Params *pr, double x) nogil:
    if kind == KIND_LOOP:
        return cos(x) / sqrt(pr.c0 - pr.two_ar * cos(x))
    if kind == KIND_HELIX_SIN:
        return sin(pr.P * x - pr.phi) / _helix_rad(pr, x)
    if kind == KIND_HELIX_COS:
        return cos(pr.P * x - pr.phi) / _helix_rad(pr, x)
    if kind == KIND_HELIX_ONE:
        return 1.0 / _helix_rad(pr, x)
    if kind == KIND_SOL_COS:
        return _sol_f(pr, x) * cos(x)
    return _sol_f(pr, x)


cdef void _panel(int kind, Params *pr, double a, double b,
                 double *out_val, double *out_err) nogil:
    cdef double mid = 0.5 * (a + b)
    cdef double half = 0.5 * (b - a)
    cdef double fc = _integrand(kind, pr, mid)
    cdef double resk = WGK[7] * fc
    cdef double resg = WG[3] * fc
    cdef double dx, f1, f2
    cdef int j
    for j in range(7):
        dx = half * XGK[j]
        f1 = _integrand(kind, pr, mid - dx)
        f2 = _integrand(kind, pr, mid + dx)
        resk += WGK[j] * (f1 + f2)
        if j % 2 == 1:
            resg += WG[j >> 1] * (f1 + f2)
    out_val[0] = resk * half
    out_err[0] = fabs(resk - resg) * fabs(half)


cdef int _adaptive(int kind, Params *pr, double a, double b,
                   double abs_tol, double rel_tol, int max_sub,
                   double *out_val, double *out_err,
                   int *out_evals) nogil:
    """Worst-first adaptive driver; returns 1 on convergence."""
    cdef double *lo = <double *> malloc(4 * (max_sub + 1) * sizeof(double))
    cdef double *hi
    cdef double *val
    cdef double *err
    cdef int count = 1, evals = 15, worst, i, ok = 0
    cdef double total, total_err, mid, v1, e1, v2, e2
    if lo == NULL:
        out_val[0] = 0.0
        out_err[0] = 0.0
        out_evals[0] = 0
        return 0
    hi = lo + (max_sub + 1)
    val = hi + (max_sub + 1)
    err = val + (max_sub + 1)

    lo[0] = a
    hi[0] = b
    _panel(kind, pr, a, b, &val[0], &err[0])
    while True:
        total = 0.0
        total_err = 0.0
        for i in range(count):
            total += val[i]
            total_err += err[i]
        if total_err <= max(abs_tol, rel_tol * fabs(total)):
            ok = 1
            break
        if count >= max_sub:
            ok = 0
            break
        worst = 0
        for i in range(1, count):
            if err[i] > err[worst]:
                worst = i
        mid = 0.5 * (lo[worst] + hi[worst])
        _panel(kind, pr, lo[worst], mid, &v1, &e1)
        _panel(kind, pr, mid, hi[worst], &v2, &e2)
        evals += 30
        hi[count] = hi[worst]
        lo[count] = mid
        val[count] = v2
        err[count] = e2
        hi[worst] = mid
        val[worst] = v1
        err[worst] = e1
        count += 1

    out_val[0] = total
    out_err[0] = max(total_err, 1e-15 * fabs(total))
    out_evals[0] = evals
    free(lo)
    return ok


# ---------------------------------------------------------------------------
# public entry points (tuples, matching _ref)


def loop_phi_integral(double r, double z, double a, double abs_tol,
                      double rel_tol, int max_sub):
    """Int_0^{2pi} cos(psi)/sqrt(r^2+a^2+z^2 - 2 a r cos psi) dpsi."""
    cdef Params pr
    cdef double v = 0.0, e = 0.0
    cdef int n = 0, ok
    pr.c0 = r * r + a * a + z * z
    pr.two_ar = 2.0 * a * r
    with nogil:
        ok = _adaptive(KIND_LOOP, &pr, 0.0, 3.141592653589793,
                       0.5 * abs_tol, rel_tol, max_sub, &v, &e, &n)
    return 2.0 * v, 2.0 * e, n, ok


def helix_integrals(double r, double phi, double z, double a, double p,
                    double P, double s0, double s1, double abs_tol,
                    double rel_tol, int max_sub):
    """(I_sin, I_cos, I_one, err, evaluations, converged) for the helix."""
    cdef Params pr
    cdef double vs = 0.0, es = 0.0, vc = 0.0, ec = 0.0, vz = 0.0, ez = 0.0
    cdef int ns = 0, nc = 0, nz = 0, oks, okc, okz
    pr.c0 = r * r + a * a + z * z
    pr.two_ar = 2.0 * a * r
    pr.p = p
    pr.P = P
    pr.phi = phi
    pr.z = z
    with nogil:
        oks = _adaptive(KIND_HELIX_SIN, &pr, s0, s1, abs_tol, rel_tol,
                        max_sub, &vs, &es, &ns)
        okc = _adaptive(KIND_HELIX_COS, &pr, s0, s1, abs_tol, rel_tol,
                        max_sub, &vc, &ec, &nc)
        okz = _adaptive(KIND_HELIX_ONE, &pr, s0, s1, abs_tol, rel_tol,
                        max_sub, &vz, &ez, &nz)
    return vs, vc, vz, es + ec + ez, ns + nc + nz, bool(oks and okc and okz)


def solenoid_integrals(double r, double z, double a, double L0,
                       double abs_tol, double rel_tol, int max_sub):
    """(0.0, I_cos, I_one, err, evaluations, converged) for the sheet."""
    cdef Params pr
    cdef double vc = 0.0, ec = 0.0, v1 = 0.0, e1 = 0.0
    cdef int nc = 0, n1 = 0, okc, ok1
    pr.c0 = r * r + a * a
    pr.two_ar = 2.0 * a * r
    pr.z = z
    pr.L0 = L0
    with nogil:
        okc = _adaptive(KIND_SOL_COS, &pr, 0.0, 3.141592653589793,
                        0.5 * abs_tol, rel_tol, max_sub, &vc, &ec, &nc)
        ok1 = _adaptive(KIND_SOL_ONE, &pr, 0.0, 3.141592653589793,
                        0.5 * abs_tol, rel_tol, max_sub, &v1, &e1, &n1)
    return 0.0, 2.0 * vc, 2.0 * v1, 2.0 * (ec + e1), nc + n1, \
        bool(okc and ok1)


def plate_green_sum(double rho, double z, double zp, double L, double tol,
                    int n_max):
    """Slab kernel series with K0-envelope truncation (compiled)."""
    cdef double pref = 1.0 / (3.141592653589793 * L)
    cdef double kz = 3.141592653589793 * z / L
    cdef double kzp = 3.141592653589793 * zp / L
    cdef double step = 3.141592653589793 * rho / L
    cdef double total = 0.0, arg, env = 0.0, q
    cdef int n = 0
    cdef int status = 0  # 0 hit n_max, 1 converged, 2 underflowed
    with nogil:
        while n < n_max:
            n += 1
            arg = n * step
            if arg > 746.0:
                status = 2
                break
            env = _k0(arg)
            total += sin(n * kz) * sin(n * kzp) * env
            if pref * env < tol:
                status = 1
                break
    if status == 2:
        return pref * total, 0.0, n - 1, 1
    q = exp(-step)
    if status == 1:
        return pref * total, pref * env * q / (1.0 - q), n, 1
    env = _k0(n * step)
    return pref * total, pref * env * q / (1.0 - q), n, 0
