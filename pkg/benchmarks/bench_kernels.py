#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Workload: the verification pipeline's hot loops over the connected census of
a given order: exhaustive minimum-cut search, dominant-eigenpair power
iteration, and component flood fills under random deletions.

Usage: python3 benchmarks/bench_kernels.py [--n 7] [--tol 1e-12]
"""

import argparse
import random
import time

from specconn import _kernels_py
from specconn.census import connected_census
from specconn.spectral import iteration_cap

try:
    from specconn import _kernels
except ImportError:
    _kernels = None


def bench_min_cut(mod, graphs):
    t0 = time.perf_counter()
    acc = 0
    for g in graphs:
        acc ^= mod.min_cut_search(g.adj, g.n, 1, 2, 3)
    return time.perf_counter() - t0, acc


def bench_power(mod, graphs, tol):
    t0 = time.perf_counter()
    acc = 0.0
    for g in graphs:
        cap = iteration_cap(g.n, tol)
        rho, _, _, _, ok = mod.power_iteration(g.adj, g.n, g.vertex_mask, tol, cap)
        assert ok
        acc += rho
    return time.perf_counter() - t0, acc


def bench_components(mod, graphs, removals):
    t0 = time.perf_counter()
    acc = 0
    for g, rem in zip(graphs, removals):
        acc += len(mod.components_masks(g.adj, g.n, rem))
    return time.perf_counter() - t0, acc


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7, help="census order (<= 8)")
    parser.add_argument("--tol", type=float, default=1e-12)
    args = parser.parse_args()

    graphs = connected_census(args.n)
    rng = random.Random(0)
    removals = [rng.randrange(1 << g.n) for g in graphs]
    print(f"census: {len(graphs)} connected graphs of order {args.n}")

    tasks = [
        ("min_cut_search(g=1,r=2,full)", bench_min_cut, (graphs,)),
        (f"power_iteration(tol={args.tol:g})", bench_power, (graphs, args.tol)),
        ("components_masks(random removals)", bench_components, (graphs, removals)),
    ]
    header = f"{'kernel':36} {'pure':>10} {'cython':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn, extra in tasks:
        t_pure, check_pure = fn(_kernels_py, *extra)
        if _kernels is None:
            print(f"{name:36} {t_pure:9.3f}s {'n/a':>10} {'n/a':>8}")
            continue
        t_cy, check_cy = fn(_kernels, *extra)
        agreement = (
            check_pure == check_cy
            if isinstance(check_pure, int)
            else abs(check_pure - check_cy) < 1e-6 * max(1.0, abs(check_pure))
        )
        flag = "" if agreement else "  (MISMATCH)"
        print(f"{name:36} {t_pure:9.3f}s {t_cy:9.3f}s {t_pure / t_cy:7.1f}x{flag}")
    if _kernels is None:
        print("compiled extension not built; run pip install -e . --no-build-isolation")


if __name__ == "__main__":
    main()
