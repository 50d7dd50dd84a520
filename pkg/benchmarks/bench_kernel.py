#!/usr/bin/env python3
"""Benchmark the compiled rewriting kernel against the pure-Python twin.

Three workloads, all on the weighted 3-generator example and its Rees
extension:

- ``normalize``: cache-cold products of random ordered monomials, which
  exercises the raw word-rewriting layer;
- ``sweep``: the exhaustive box-2 associativity sweep on the 4-generator
  Rees presentation, the dominant cost of the acceptance suite;
- ``polymul``: repeated products of small random polynomials on a warm
  cache.

Usage: python benchmarks/bench_kernel.py [--box 2] [--samples 400]
"""

import argparse
import random
import time

from solvpoly import (DegreeFunction, Lex, Multiplier, Polynomial, QQ,
                      available_backends, build_rees, make_graded,
                      random_polynomial)
from solvpoly.presentation import AlgebraPresentation


def weighted3(fexp=5):
    tail = Polynomial(QQ, 3, {(0, 2, 1): 1, (0, fexp, 0): 1})
    return AlgebraPresentation(QQ, ("a1", "a2", "a3"), {(0, 2): (1, tail)})


def bench_normalize(backend, samples):
    pres = weighted3()
    ordering = make_graded(Lex((0, 1, 2)), DegreeFunction((2, 1, 4)))
    rng = random.Random(1)
    pairs = [(tuple(rng.randint(0, 4) for _ in range(3)),
              tuple(rng.randint(0, 4) for _ in range(3)))
             for _ in range(samples)]
    mult = Multiplier(pres, ordering, backend=backend)
    started = time.perf_counter()
    for a, b in pairs:
        mult.mul_monomials(a, b)
    return time.perf_counter() - started


def bench_sweep(backend, box):
    dfun = DegreeFunction((2, 1, 4))
    ordering = make_graded(Lex((0, 1, 2)), dfun)
    rees = build_rees(weighted3(), dfun, ordering)
    mult = Multiplier(rees.presentation, rees.ordering, backend=backend)
    started = time.perf_counter()
    bad = mult.check_associativity((box,) * 4)
    elapsed = time.perf_counter() - started
    assert bad is None
    return elapsed


def bench_polymul(backend, samples):
    pres = weighted3()
    ordering = make_graded(Lex((0, 1, 2)), DegreeFunction((2, 1, 4)))
    mult = Multiplier(pres, ordering, backend=backend)
    rng = random.Random(2)
    polys = [random_polynomial(rng, QQ, 3, max_terms=5, max_exp=3)
             for _ in range(64)]
    mult.mul(polys[0], polys[1])  # warm the cache
    started = time.perf_counter()
    for k in range(samples):
        mult.mul(polys[k % 64], polys[(k * 7 + 3) % 64])
    return time.perf_counter() - started


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--box", type=int, default=2)
    parser.add_argument("--samples", type=int, default=400)
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    workloads = [
        ("normalize (cold cache)", bench_normalize, args.samples),
        ("assoc sweep (Rees, box %d)" % args.box, bench_sweep, args.box),
        ("polymul (warm cache)", bench_polymul, args.samples * 10),
    ]
    results = {}
    for label, fn, arg in workloads:
        for backend in backends:
            results[(label, backend)] = fn(backend, arg)

    width = max(len(label) for label, _, _ in workloads) + 2
    header = f"{'workload':<{width}}" + "".join(
        f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for label, _, _ in workloads:
        row = f"{label:<{width}}"
        times = [results[(label, b)] for b in backends]
        row += "".join(f"{t:>11.3f}s" for t in times)
        if len(backends) == 2:
            slow = results[(label, "python")]
            fast = results[(label, "cython")]
            row += f"{slow / fast:>9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
