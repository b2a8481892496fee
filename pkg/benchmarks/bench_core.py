"""Time the hot kernels: compiled extension vs pure-Python reference.

Run from the repo root:

    python3 benchmarks/bench_core.py [--repeat 5]

Each workload is a small batch of representative argument sets (off the
singular support, mixed near/far) evaluated in a loop; the reported
number is the best-of-N wall time per batch, which is the usual way to
suppress scheduler noise for sub-millisecond kernels.  If the extension
is not built, the script still runs and says so; the reference column
is then the only one that matters.
"""

import argparse
import math
import time

from emsingular._core import _ref

try:
    from emsingular._core import _fast
except ImportError:
    _fast = None

TOLS = (1e-12, 1e-9, 400)

TWO_PI = 2.0 * math.pi


def bench_bessel_k0(mod):
    xs = [0.003 * k + 1e-3 for k in range(2000)]

    def run():
        f = mod.bessel_k0
        acc = 0.0
        for x in xs:
            acc += f(x)
        return acc

    return run, len(xs)


def bench_loop(mod):
    pts = [(0.3, 0.2, 1.0), (1.7, 0.6, 1.0), (5.0, -2.0, 1.3),
           (0.99, 0.05, 1.0), (0.5, 0.0, 1.0), (2.0, 2.0, 1.0)]

    def run():
        f = mod.loop_phi_integral
        acc = 0.0
        for r, z, a in pts:
            acc += f(r, z, a, *TOLS)[0]
        return acc

    return run, len(pts)


def bench_helix(mod):
    a, p = 1.0, 1e-3
    big_p = math.sqrt(1.0 - p * p) / a
    s1 = 3.0 * TWO_PI / big_p
    pts = [(1.4, 0.7, 2.0), (0.6, -1.2, 5.0), (2.5, 3.0, -1.0)]

    def run():
        f = mod.helix_integrals
        acc = 0.0
        for r, phi, z in pts:
            acc += f(r, phi, z, a, p, big_p, 0.0, s1, *TOLS)[0]
        return acc

    return run, len(pts)


def bench_solenoid(mod):
    pts = [(0.5, 30.0), (10.0, 30.0), (1.2, -0.5), (0.9, 59.0)]

    def run():
        f = mod.solenoid_integrals
        acc = 0.0
        for r, z in pts:
            acc += f(r, z, 1.0, 60.0, *TOLS)[1]
        return acc

    return run, len(pts)


def bench_plate(mod):
    pts = [(0.35, 0.4, 0.7), (0.05, 0.5, 0.5), (1.5, 0.25, 0.8),
           (0.02, 0.9, 0.1)]

    def run():
        f = mod.plate_green_sum
        acc = 0.0
        for rho, z, zp in pts:
            acc += f(rho, z, zp, 1.0, 1e-12, 100000)[0]
        return acc

    return run, len(pts)


WORKLOADS = [
    ("bessel_k0", bench_bessel_k0),
    ("loop_phi_integral", bench_loop),
    ("helix_integrals", bench_helix),
    ("solenoid_integrals", bench_solenoid),
    ("plate_green_sum", bench_plate),
]


def best_of(run, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        run()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5,
                    help="timing repetitions, best is kept (default 5)")
    args = ap.parse_args()

    if _fast is None:
        print("extension not built; timing the pure-Python reference only")
    print("%-20s %6s %12s %12s %8s" % ("kernel", "calls", "ref (ms)",
                                       "fast (ms)", "speedup"))
    for name, make in WORKLOADS:
        run_ref, n = make(_ref)
        t_ref = best_of(run_ref, args.repeat)
        if _fast is not None:
            run_fast, _ = make(_fast)
            t_fast = best_of(run_fast, args.repeat)
            # sanity: the two backends agree before we compare speed
            if not math.isclose(run_ref(), run_fast(),
                                rel_tol=1e-10, abs_tol=1e-15):
                raise SystemExit("backend mismatch in %s" % name)
            print("%-20s %6d %12.3f %12.3f %7.1fx"
                  % (name, n, 1e3 * t_ref, 1e3 * t_fast, t_ref / t_fast))
        else:
            print("%-20s %6d %12.3f %12s %8s"
                  % (name, n, 1e3 * t_ref, "-", "-"))


if __name__ == "__main__":
    main()
