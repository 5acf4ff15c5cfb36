"""Compare the numba-jitted kernels against the pure-numpy fallback.

Times each hot kernel through its public entry point (dense polynomial
powers, mod-p row reduction, projective point counts) under both backends
and prints a speedup table.  Run from the repository root:

    python3 benchmarks/bench_backends.py [--repeats 5]
"""

import argparse
import time

import numpy as np

from frobscan._backend import set_backend
from frobscan.ideals import HomogeneousIdeal, graded_rank
from frobscan.pointcount import count_projective_points
from frobscan.polynomial import Polynomial, parse_polynomial, poly_power


def bench_poly_power():
    # h^(p-1) for a dense-ish quartic, the dominant cost of a scan step
    h = parse_polynomial("x1^2*x2 - x0^3 + x0*x2^2", p=31)
    h = h * h  # degree 6, more terms
    return lambda: poly_power(h, 30)


def bench_rref():
    rng = np.random.default_rng(42)
    gens = []
    for _ in range(3):
        exps = rng.integers(0, 5, size=(6, 3))
        exps[:, 0] = 12 - exps[:, 1] - exps[:, 2]
        terms = {tuple(map(int, e)): int(c)
                 for e, c in zip(exps, rng.integers(1, 7, size=6))}
        gens.append(Polynomial(3, 7, terms))
    I = HomogeneousIdeal(3, 7, gens)
    return lambda: [graded_rank(I, d) for d in range(12, 20)]


def bench_point_count():
    gens = [parse_polynomial("x1^2 - x0*x2", nvars=4, p=41),
            parse_polynomial("x3^2 - x1*x2 + x0*x1", nvars=4, p=41)]
    return lambda: count_projective_points(gens, 41)


BENCHES = [
    ("poly_power (deg 6 -> h^30, p=31)", bench_poly_power),
    ("graded_rank (8 degrees, p=7)", bench_rref),
    ("point_count (CI in P^3, p=41)", bench_point_count),
]


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3,
                    help="timing repeats per benchmark (best is kept)")
    args = ap.parse_args()

    try:
        set_backend("numba")
        have_numba = True
    except ImportError:
        have_numba = False
        print("numba not importable; showing numpy timings only\n")

    rows = []
    for label, setup in BENCHES:
        fn = setup()
        timings = {}
        results = {}
        backends = ["numpy"] + (["numba"] if have_numba else [])
        for backend in backends:
            set_backend(backend)
            if backend == "numba":
                fn()  # warm up the JIT before timing
            timings[backend], results[backend] = time_call(fn, args.repeats)
        if have_numba:
            assert results["numpy"] == results["numba"], label
        rows.append((label, timings))
    set_backend("auto")

    width = max(len(label) for label, _ in rows)
    header = f"{'benchmark':<{width}}  {'numpy':>10}"
    if have_numba:
        header += f"  {'numba':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, timings in rows:
        line = f"{label:<{width}}  {timings['numpy'] * 1e3:>8.1f}ms"
        if have_numba:
            ratio = timings["numpy"] / timings["numba"]
            line += f"  {timings['numba'] * 1e3:>8.1f}ms  {ratio:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
