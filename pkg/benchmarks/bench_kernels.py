#!/usr/bin/env python3
"""Benchmark the compiled sweep kernel against the pure-numpy fallback.

Times the full ABCD cascade + S-parameter conversion for ladder sizes and
grid densities spanning the interactive to batch range, and verifies both
backends produce identical responses before timing them.

Usage: python3 benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from mwfilt import SweepGrid, prototype_g_values, ripple_chain, scale_lowpass_ladder
from mwfilt.network import _branch_arrays
from mwfilt._kernel import BACKEND, sweep_kernel as compiled_kernel
from mwfilt._kernel._sweep_py import sweep_kernel as python_kernel

CASES = [
    # (ladder order, grid points)
    (5, 3001),
    (15, 3001),
    (15, 30001),
    (25, 30001),
]


def _ladder_arrays(order: int):
    lar = ripple_chain(20.0).passband_ripple_db
    g = prototype_g_values("chebyshev", order, lar)
    ladder = scale_lowpass_ladder(g, 1.0, 50.0)
    return _branch_arrays(ladder)


def _time(kernel, args, repeats: int) -> float:
    kernel(*args)  # warm-up
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        kernel(*args)
        best = min(best, time.perf_counter() - t0)
    return best * 1000.0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats (best-of)")
    opts = parser.parse_args()

    if BACKEND == "python":
        print("note: compiled backend unavailable; comparing the fallback to itself")

    print(f"active backend: {BACKEND}")
    print(f"{'order':>5} {'points':>7} {'compiled ms':>12} {'numpy ms':>10} {'speedup':>8}")
    for order, points in CASES:
        codes, l_nh, c_nf, rs, rl = _ladder_arrays(order)
        f = SweepGrid(0.001, 0.001 * points, 0.001).frequencies()[:points]
        args = (codes, l_nh, c_nf, f, rs, rl)

        a21, a11, _ = compiled_kernel(*args)
        b21, b11, _ = python_kernel(*args)
        assert np.allclose(a21, b21, rtol=1e-12) and np.allclose(a11, b11, rtol=1e-12)

        t_c = _time(compiled_kernel, args, opts.repeats)
        t_p = _time(python_kernel, args, opts.repeats)
        print(f"{order:>5} {points:>7} {t_c:>12.3f} {t_p:>10.3f} {t_p / t_c:>7.2f}x")


if __name__ == "__main__":
    main()
