"""Benchmark the GF(p) row-reduction kernel: numba JIT vs numpy fallback.

Usage: python3 benchmarks/bench_gf_rref.py [--p 101] [--sizes 50,100,200]

The rational path always uses exact Fraction arithmetic and is not
benchmarked here; only the GF(p) kernel has two implementations.
"""

import argparse
import time

import numpy as np

from sqfree import gfkernels


def bench(fn, a, p, repeats):
    # warm-up (also triggers JIT compilation for the numba path)
    fn(a.copy(), p)
    best = float("inf")
    for _ in range(repeats):
        m = a.copy()
        t0 = time.perf_counter()
        fn(m, p)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=101)
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(args.seed)

    if not gfkernels.HAS_NUMBA:
        print("numba unavailable; benchmarking the numpy path only")

    print(f"{'size':>6} {'numpy (ms)':>12} {'numba (ms)':>12} {'speedup':>9}")
    for size in sizes:
        a = rng.integers(0, args.p, size=(size, size), dtype=np.int64)
        t_np = bench(gfkernels.rref_mod_numpy, a, args.p, args.repeats)
        if gfkernels.HAS_NUMBA:
            from numba import njit

            jit_fn = getattr(gfkernels, "rref_mod_numba", None)
            if jit_fn is None:
                jit_fn = njit(cache=True)(gfkernels._rref_mod_loops)
            t_nb = bench(lambda m, p: jit_fn(m, np.int64(p)), a, args.p, args.repeats)
            print(
                f"{size:>6} {t_np * 1e3:>12.2f} {t_nb * 1e3:>12.2f} "
                f"{t_np / t_nb:>8.1f}x"
            )
        else:
            print(f"{size:>6} {t_np * 1e3:>12.2f} {'-':>12} {'-':>9}")

    # sanity: both paths must agree
    a = rng.integers(0, args.p, size=(60, 80), dtype=np.int64)
    m1 = a.copy()
    gfkernels.rref_mod_numpy(m1, args.p)
    m2 = a.copy()
    gfkernels.rref_mod(m2, args.p)
    assert np.array_equal(m1, m2), "kernel implementations disagree"
    print("agreement check: OK")


if __name__ == "__main__":
    main()
