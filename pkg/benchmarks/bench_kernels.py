"""Benchmark the compiled kernels against the numpy fallback.

Run from the repository root:

    python benchmarks/bench_kernels.py

Workloads mirror the places where the kernels dominate runtime: minimum
distance of record-length codes, GL(n,2) enumeration, and the double-coset
canonicalization loop at the heart of the exhaustive classification.
"""

from __future__ import annotations

import time

import numpy as np

from ciskit import kernels
from ciskit.constructions import double_circulant
from ciskit.gf2 import Gf2Poly


def timed(fn, *args, repeat=1):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def backends():
    out = [("py", kernels.get_backend("py"))]
    try:
        out.insert(0, ("ext", kernels.get_backend("ext")))
    except ImportError:
        print("note: compiled extension not built; benchmarking fallback only")
    return out


def main() -> None:
    impls = backends()
    rows30 = list(
        double_circulant(Gf2Poly.from_exponents([0, 1, 3, 5, 7, 8, 10]), 15)
        .code.generator.rows
    )
    print(f"{'workload':<42}" + "".join(f"{name:>12}" for name, _ in impls))

    results = {}
    for name, impl in impls:
        results[name] = timed(impl.min_nonzero_weight, rows30, 30, repeat=3)[0]
    _row("min distance [30,15] (2^15 words)", impls, results)

    for name, impl in impls:
        results[name] = timed(impl.weight_counts, rows30, 30, repeat=3)[0]
    _row("weight distribution [30,15]", impls, results)

    gl = {}
    for name, impl in impls:
        results[name], gl[name] = timed(impl.gl_matrices, 5)
    _row("enumerate GL(5,2) (9 999 360 matrices)", impls, results)

    sample = gl[impls[0][0]][: 1 << 20]
    pt5 = kernels.perm_tables(5)
    for name, impl in impls:
        results[name] = timed(impl.dc_canon_batch, sample, 5, pt5)[0]
    _row("double-coset canon, 2^20 matrices (n=5)", impls, results)

    rng = np.random.default_rng(0)
    mats6 = rng.integers(0, 1 << 36, size=1 << 17, dtype=np.uint64)
    pt6 = kernels.perm_tables(6)
    for name, impl in impls:
        results[name] = timed(impl.dc_canon_batch, mats6, 6, pt6)[0]
    _row("double-coset canon, 2^17 matrices (n=6)", impls, results)


def _row(label: str, impls, results) -> None:
    cells = "".join(f"{results[name]:>11.3f}s" for name, _ in impls)
    print(f"{label:<42}{cells}")


if __name__ == "__main__":
    main()
