#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from arcphi._kernels import available_backends
from arcphi.sampling import random_arcset, rng_from_seed


def timeit(fn, repeat: int) -> float:
    t0 = time.perf_counter()
    for _ in range(repeat):
        fn()
    return (time.perf_counter() - t0) / repeat


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")

    rng = rng_from_seed(0)
    sets = [random_arcset(rng, max_arcs=8) for _ in range(200)]
    payload = [(A.bounds_array(), A.L) for A in sets]
    xs = rng.random(200_000) * 10.0
    ys = rng.random(200_000) * 10.0
    mc_bounds, mc_L = payload[0]
    mc_xs = np.minimum(xs, mc_L * 0.9999)
    mc_ys = np.minimum(ys, mc_L * 0.9999)
    colors = rng.integers(0, 3, size=2000).astype(np.int64)

    cases = {
        "phi_arcs (200 sets)": lambda k: [k.phi_arcs(b, L) for b, L in payload],
        "g_window (200x16 evals)": lambda k: [
            k.g_window(b, L, x * L / 16.0)
            for b, L in payload
            for x in range(16)
        ],
        "mc_pair_count (2e5 samples)": lambda k: k.mc_pair_count(
            mc_bounds, mc_L, mc_xs, mc_ys),
        "count_mono (n=2000, m=5)": lambda k: k.count_mono(colors, 5),
        "brute_search (k=2, m=3, n=11)": lambda k: k.brute_search(11, 2, 3),
    }

    results: dict[str, dict[str, float]] = {}
    for bname, mod in backends.items():
        results[bname] = {}
        for cname, fn in cases.items():
            results[bname][cname] = timeit(lambda: fn(mod), args.repeat)

    width = max(len(c) for c in cases)
    header = f"{'case':<{width}}  " + "  ".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>9}"
    print(header)
    for cname in cases:
        row = f"{cname:<{width}}  "
        row += "  ".join(f"{results[b][cname] * 1e3:>10.3f}ms" for b in backends)
        if len(backends) == 2:
            pure = results["pure"][cname]
            comp = results["compiled"][cname]
            row += f"  {pure / comp:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
