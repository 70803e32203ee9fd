"""Benchmark the eigensolver backends: compiled extension vs NumPy fallback.

Usage:
    python benchmarks/bench_eigh.py [--sizes 100,200,400,800] [--repeats 3]

Times full symmetric eigendecompositions of random dense matrices with both
kernel backends and prints the speedup; numpy.linalg.eigh (LAPACK) is shown
as an external reference point.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from supralap import eigen


def time_call(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100,200,400,800")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = eigen.available_backends()
    if "compiled" not in backends:
        print("warning: compiled extension not built; benchmarking fallback only")

    header = f"{'n':>6} " + "".join(f"{b:>12} " for b in backends)
    header += f"{'speedup':>9} {'numpy':>10}"
    print(header)
    rng = np.random.default_rng(0)
    for n in sizes:
        a = rng.standard_normal((n, n))
        a = (a + a.T) / 2
        row = f"{n:>6} "
        times = {}
        for backend in backends:
            times[backend] = time_call(
                lambda b=backend: eigen.eigh(a, backend=b), args.repeats
            )
            row += f"{times[backend]:>11.3f}s "
        if "compiled" in times and "python" in times:
            row += f"{times['python'] / times['compiled']:>8.1f}x "
        else:
            row += f"{'-':>9} "
        row += f"{time_call(lambda: np.linalg.eigh(a), args.repeats):>9.3f}s"
        print(row)


if __name__ == "__main__":
    main()
