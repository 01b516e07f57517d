"""Timing comparison of the compiled and pure-Python eigensolver kernels.

Builds random gain adjacency matrices, solves each with both backends, and
reports per-solve wall time, speedup, and the largest eigenvalue discrepancy
(expected to be exactly zero: the kernels run the same arithmetic).

Usage: python benchmarks/bench_eigen.py [--sizes 10,20,40,80] [--repeats 5]
"""
from __future__ import annotations

import argparse
import random
import time

import numpy as np

from gainspectra import _eigen_py
from gainspectra.gains import random_gains
from gainspectra.graphs import random_connected_graph
from gainspectra.spectral import adjacency

try:
    from gainspectra import _eigen_cy
except ImportError:
    _eigen_cy = None


def matrix(n: int, seed: int) -> np.ndarray:
    rng = random.Random(seed)
    g = random_connected_graph(rng, n, max(1, n * (n - 1) // 6))
    return adjacency(random_gains(g, seed))


def best_time(solve, a: np.ndarray, repeats: int) -> tuple[float, np.ndarray]:
    best = float("inf")
    lam = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        d, _ = solve(a)
        best = min(best, time.perf_counter() - t0)
        lam = np.sort(np.asarray(d, dtype=np.float64))
    return best, lam


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="10,20,40,80,120")
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    if _eigen_cy is None:
        print("compiled kernel not built; only timing the pure-Python kernel")
    sizes = [int(s) for s in args.sizes.split(",")]
    header = f"{'n':>5} {'pure (ms)':>12} {'compiled (ms)':>14} {'speedup':>9} {'max |dlam|':>12}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        a = matrix(n, args.seed)
        t_py, lam_py = best_time(_eigen_py.solve, a, args.repeats)
        if _eigen_cy is None:
            print(f"{n:>5} {t_py * 1e3:>12.3f} {'-':>14} {'-':>9} {'-':>12}")
            continue
        t_cy, lam_cy = best_time(_eigen_cy.solve, a, args.repeats)
        dlam = float(np.max(np.abs(lam_py - lam_cy)))
        print(f"{n:>5} {t_py * 1e3:>12.3f} {t_cy * 1e3:>14.3f} {t_py / t_cy:>9.1f} {dlam:>12.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
