"""Compare the numba and numpy kernel paths on the float truncation DPs.

Usage: python3 benchmarks/bench_kernels.py [--M 100000] [--repeat 3]
Set NINTHSCHUR_DISABLE_NUMBA=1 to check that the numpy path runs alone.
"""
import argparse
import time

import numpy as np

from ninthschur import _kernels
from ninthschur.mzv.trunc import DiagonalIndex, schur_zeta_float
from ninthschur.shapes import as_skew


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--M", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else [])
    idx = DiagonalIndex.three_zone(1, 2, 1)
    cases = {
        "mzv_dp (2,1,1)": lambda b: _kernels.mzv_dp(np.array([2, 1, 1]), args.M, False, backend=b)[-1],
        "mzv_dp star (3,1)": lambda b: _kernels.mzv_dp(np.array([3, 1]), args.M, True, backend=b)[-1],
        "strip_dp (2,2)": lambda b: schur_zeta_float(as_skew("2,2"), idx, args.M, backend=b),
        "strip_dp (3,3,3)": lambda b: schur_zeta_float(as_skew("3,3,3"), idx, args.M, backend=b),
    }
    if "numba" in backends:
        for fn in cases.values():
            fn("numba")  # compile once
    print(f"M={args.M} repeat={args.repeat}")
    print(f"{'kernel':22s} " + " ".join(f"{b:>12s}" for b in backends)
          + ("   speedup   agree" if len(backends) == 2 else ""))
    for name, fn in cases.items():
        res = {b: best_of(lambda: fn(b), args.repeat) for b in backends}
        row = " ".join(f"{res[b][0]:11.4f}s" for b in backends)
        if len(backends) == 2:
            speed = res["numpy"][0] / max(res["numba"][0], 1e-12)
            agree = abs(res["numpy"][1] - res["numba"][1]) <= 1e-12 * max(1.0, abs(res["numpy"][1]))
            print(f"{name:22s} {row}   {speed:7.1f}x   {agree}")
        else:
            print(f"{name:22s} {row}   (numba unavailable)")


if __name__ == "__main__":
    main()
