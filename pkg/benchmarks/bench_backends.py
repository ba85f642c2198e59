#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot kernels (chromosome decoding + integer aggregation, and
non-dominated ranking) and a short end-to-end evolutionary run on each
backend, and verifies along the way that both produce identical outputs.

Usage: python benchmarks/bench_backends.py [--nodes 128] [--pop 200]
"""
from __future__ import annotations

import argparse
import time

import numpy as np

import mocd
from mocd._kernels import load_kernel
from mocd.objectives import evaluate_population


def timeit(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--nodes", type=int, default=128)
    parser.add_argument("--pop", type=int, default=200)
    parser.add_argument("--mu", type=float, default=0.3)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    try:
        compiled = load_kernel("compiled")
    except ImportError:
        print("compiled extension not built; nothing to compare")
        return 1
    fallback = load_kernel("python")

    spec = mocd.BenchmarkSpec(
        nodes=args.nodes, communities=4, avg_degree=min(16.0, args.nodes / 4), mixing=args.mu, seed=1
    )
    g, _ = mocd.generate(spec)
    rng = np.random.default_rng(0)
    genes = rng.integers(1, g.node_count + 1, size=(args.pop, g.node_count))
    eu, ev = g.edges[:, 0] - 1, g.edges[:, 1] - 1

    print(f"graph: {g.node_count} nodes, {g.edge_count} edges; population {args.pop}\n")
    print(f"{'kernel':34s} {'compiled':>12s} {'python':>12s} {'speedup':>9s}")

    a = compiled.population_stats(genes, eu, ev, g.degrees)
    b = fallback.population_stats(genes, eu, ev, g.degrees)
    assert all(np.array_equal(x, y) for x, y in zip(a, b)), "backend outputs differ"

    t_c = timeit(lambda: compiled.population_stats(genes, eu, ev, g.degrees), args.repeat)
    t_p = timeit(lambda: fallback.population_stats(genes, eu, ev, g.degrees), args.repeat)
    print(f"{'decode + integer aggregation':34s} {t_c * 1e3:10.2f}ms {t_p * 1e3:10.2f}ms {t_p / t_c:8.1f}x")

    q, cs, _, _ = evaluate_population(g, genes)
    f1, f2 = 1.0 - q, (1.0 - q) + 10.0 / (1.0 + cs)
    assert np.array_equal(compiled.nondominated_ranks(f1, f2), fallback.nondominated_ranks(f1, f2))
    t_c = timeit(lambda: compiled.nondominated_ranks(f1, f2), args.repeat)
    t_p = timeit(lambda: fallback.nondominated_ranks(f1, f2), args.repeat)
    print(f"{'non-dominated ranking':34s} {t_c * 1e3:10.2f}ms {t_p * 1e3:10.2f}ms {t_p / t_c:8.1f}x")

    cfg = dict(population_size=args.pop, generations=50, seed=1)
    res_c = mocd.evolve(g, mocd.GaConfig(**cfg), kernel="compiled")
    res_p = mocd.evolve(g, mocd.GaConfig(**cfg), kernel="python")
    assert [i.objectives for i in res_c.final_front] == [i.objectives for i in res_p.final_front]
    t_c = timeit(lambda: mocd.evolve(g, mocd.GaConfig(**cfg), kernel="compiled"), max(1, args.repeat // 2))
    t_p = timeit(lambda: mocd.evolve(g, mocd.GaConfig(**cfg), kernel="python"), max(1, args.repeat // 2))
    print(f"{'evolve (50 generations)':34s} {t_c:11.2f}s {t_p:11.2f}s {t_p / t_c:8.1f}x")

    print("\nbackend outputs verified identical")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
