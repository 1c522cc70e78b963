#!/usr/bin/env python3
"""Benchmark the compiled term kernel against the pure-Python twin.

Two workloads:
  * raw kernel: repeated capped multiplies of synthetic sparse polynomials;
  * end to end: the multivariate master series and the area product, whose
    runtime is dominated by the kernel.

Usage: python benchmarks/bench_termops.py [--order N] [--repeat K]
"""

import argparse
import random
import time

from catpoly import backend, gfs
from catpoly.mpoly import Caps, pack


def synthetic_terms(rng, size, maxdeg):
    out = {}
    while len(out) < size:
        key = pack(rng.randrange(maxdeg), rng.randrange(4 * maxdeg), rng.randrange(maxdeg))
        out[key] = rng.randrange(-999, 1000) or 1
    return out


def bench_raw(mul_into, repeat):
    rng = random.Random(42)
    caps = Caps.for_order(24)
    pairs = [
        (synthetic_terms(rng, 400, 20), synthetic_terms(rng, 120, 20))
        for _ in range(8)
    ]
    start = time.perf_counter()
    for _ in range(repeat):
        for a, b in pairs:
            acc = {}
            mul_into(acc, a, b, caps.key)
    return time.perf_counter() - start


def bench_series(which, order):
    start = time.perf_counter()
    master = gfs.master_pqv(order)
    mid = time.perf_counter()
    gfs.prod_area(order)
    end = time.perf_counter()
    assert master.coeff(1)
    return mid - start, end - mid


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=16, help="series order for the end-to-end runs")
    parser.add_argument("--repeat", type=int, default=20, help="repetitions of the raw kernel loop")
    args = parser.parse_args()

    impls = backend.available_backends()
    print(f"backends available: {', '.join(impls)} (selected: {backend.BACKEND})")
    print()
    print(f"raw kernel ({args.repeat} x 8 capped multiplies, 400x120 terms):")
    raw = {}
    for name, fn in impls.items():
        raw[name] = bench_raw(fn, args.repeat)
        print(f"  {name:9s} {raw[name]:8.3f} s")
    if len(raw) == 2:
        print(f"  speedup   {raw['python'] / raw['compiled']:8.2f} x")

    print()
    print(f"end to end at order {args.order}:")
    results = {}
    for name, fn in impls.items():
        backend.mul_into = fn  # route the whole library through one kernel
        master_t, area_t = bench_series(name, args.order)
        results[name] = master_t + area_t
        print(f"  {name:9s} master {master_t:7.3f} s   area product {area_t:7.3f} s")
    backend.mul_into = impls[backend.BACKEND]
    if len(results) == 2:
        print(f"  speedup   {results['python'] / results['compiled']:8.2f} x")


if __name__ == "__main__":
    main()
