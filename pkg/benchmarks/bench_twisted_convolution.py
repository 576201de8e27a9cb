"""Benchmark: compiled twisted-convolution kernel vs the NumPy fallback.

Usage: python benchmarks/bench_twisted_convolution.py [N ...]

Prints a small table of wall times and the max deviation between the two
backends (which should be at roundoff level).
"""

import sys
import time

import numpy as np

from epistrict.moyal import (
    HAVE_COMPILED_KERNEL,
    square_grid,
    twisted_convolution,
)


def bench(n_points: int, repeats: int = 3) -> dict:
    grid = square_grid(n_points, 0.2)
    rng = np.random.default_rng(0)
    cf = rng.normal(size=(n_points,) * 2) + 1j * rng.normal(size=(n_points,) * 2)
    cg = rng.normal(size=(n_points,) * 2) + 1j * rng.normal(size=(n_points,) * 2)

    results = {}
    for backend in (["compiled"] if HAVE_COMPILED_KERNEL else []) + ["numpy"]:
        best = float("inf")
        for _ in range(repeats):
            t0 = time.perf_counter()
            out = twisted_convolution(grid, cf, cg, backend=backend)
            best = min(best, time.perf_counter() - t0)
        results[backend] = (best, out)
    row = {"N": n_points}
    for backend, (t, _) in results.items():
        row[backend] = t
    if len(results) == 2:
        row["speedup"] = results["numpy"][0] / results["compiled"][0]
        row["max_dev"] = float(np.max(np.abs(
            results["compiled"][1] - results["numpy"][1])))
    return row


def main():
    sizes = [int(a) for a in sys.argv[1:]] or [16, 32, 64]
    if not HAVE_COMPILED_KERNEL:
        print("compiled kernel not available; timing NumPy fallback only")
    header = False
    for n in sizes:
        row = bench(n)
        if not header:
            print("  ".join(f"{k:>10}" for k in row))
            header = True
        print("  ".join(
            f"{v:10.4g}" if isinstance(v, float) else f"{v:>10}"
            for v in row.values()))


if __name__ == "__main__":
    main()
