"""Time the numba and numpy variants of the search kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--k 3 --n 4]

Numba compile time is excluded by a warm-up call.  Results are checked for
agreement before any timing is reported.
"""
import argparse
import time

import numpy as np

from cylfuse import kernels
from cylfuse.affine import alcove, loop
from cylfuse.fusion import alpha_bound
from cylfuse.rppgen import band_bound
from cylfuse.symcore import rearrangement_array


def band_workload(k, n, degrees=(0, 1, 2)):
    jobs = []
    for lam in alcove(k, n):
        for mu in alcove(k, n):
            for d in degrees:
                upper = np.array(loop(lam, k, n).shift(d).window, dtype=np.int64)
                jobs.append((rearrangement_array(mu, k), upper, n, band_bound(lam, d, n)))
    return jobs


def pair_workload(k, n):
    jobs = []
    pts = alcove(k, n)
    for lam in pts:
        for mu in pts:
            for nu in pts:
                jobs.append((rearrangement_array(lam, k), rearrangement_array(mu, k),
                             np.array(nu, dtype=np.int64), n, alpha_bound(lam, mu, n)))
    return jobs


def timed(fn, jobs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for job in jobs:
            fn(*job)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if not kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    suites = [
        ("count_band", band_workload(args.k, args.n),
         kernels.count_band_numba, kernels.count_band_numpy),
        ("pair_alphas", pair_workload(args.k, args.n),
         kernels.pair_alphas_numba, kernels.pair_alphas_numpy),
    ]
    print(f"k={args.k} n={args.n} repeat={args.repeat} (best of)")
    print(f"{'kernel':<12} {'calls':>6} {'numba s':>9} {'numpy s':>9} {'ratio':>7}")
    for name, jobs, fast, ref in suites:
        fast(*jobs[0])  # compile
        for job in jobs:
            a, b = fast(*job), ref(*job)
            if isinstance(a, np.ndarray):
                same = sorted(map(tuple, a.tolist())) == sorted(map(tuple, b.tolist()))
            else:
                same = int(a) == int(b)
            if not same:
                raise SystemExit(f"{name}: variants disagree")
        t_fast = timed(fast, jobs, args.repeat)
        t_ref = timed(ref, jobs, args.repeat)
        print(f"{name:<12} {len(jobs):>6} {t_fast:>9.4f} {t_ref:>9.4f} {t_ref / t_fast:>6.1f}x")


if __name__ == "__main__":
    main()
