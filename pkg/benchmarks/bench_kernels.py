#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Times the two dense kernels on random series and the sparse
pentagonal pipeline on a census-sized quotient expansion, then prints
one row per workload with the speedup.  Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --pipeline-size 49993
"""

from __future__ import annotations

import argparse
import random
import time

from qsigns import _kernels_py
from qsigns.products import pentagonal_terms

try:
    from qsigns import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(repeats: int, fn) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def dense_mul_workload(kernels, n: int):
    rng = random.Random(12)
    xs = [rng.randint(-9, 9) for _ in range(n)]
    ys = [rng.randint(-9, 9) for _ in range(n)]
    return lambda: kernels.mul_dense(xs, ys, n)


def invert_workload(kernels, n: int):
    exps, cofs = pentagonal_terms(1, n - 1)
    xs = [0] * n
    for e, c in zip(exps, cofs):
        xs[e] = c
    return lambda: kernels.invert_dense(xs, n)


def pipeline_workload(kernels, n: int):
    # (q^2;q^2)^5 / (q^7;q^7): five sparse multiplies, one sparse divide
    num = pentagonal_terms(2, n - 1)
    den = pentagonal_terms(7, n - 1)

    def run():
        cur = [0] * n
        cur[0] = 1
        for _ in range(5):
            cur = kernels.mul_sparse(cur, num[0], num[1], n)
        return kernels.div_sparse(cur, den[0], den[1], n)

    return run


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dense-size", type=int, default=1200)
    parser.add_argument("--invert-size", type=int, default=3000)
    parser.add_argument("--pipeline-size", type=int, default=20000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        ("mul_dense", args.dense_size, dense_mul_workload),
        ("invert_dense", args.invert_size, invert_workload),
        ("census pipeline", args.pipeline_size, pipeline_workload),
    ]

    if _kernels_cy is None:
        print("compiled extension not built; timing the python kernels only")

    header = f"{'workload':<16} {'n':>7} {'python':>10}"
    if _kernels_cy is not None:
        header += f" {'cython':>10} {'speedup':>8}"
    print(header)
    for name, n, make in workloads:
        t_py = best_of(args.repeats, make(_kernels_py, n))
        row = f"{name:<16} {n:>7} {t_py:>9.3f}s"
        if _kernels_cy is not None:
            t_cy = best_of(args.repeats, make(_kernels_cy, n))
            row += f" {t_cy:>9.3f}s {t_py / t_cy:>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
