"""Pure-Python kernels, used when the compiled extension is unavailable.

All outputs are integers, computed here with numpy aggregation, so the two
backends are interchangeable bit for bit.  Decoding is a plain Python loop
and is the slow path; see benchmarks/bench_backends.py for the gap.
"""
from __future__ import annotations

import numpy as np


def decode_population(genes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pop, n = genes.shape
    membership = np.zeros((pop, n), dtype=np.int64)
    counts = np.zeros(pop, dtype=np.int64)
    for p in range(pop):
        row = genes[p].tolist()
        memb = [0] * n
        k = 0
        for i in range(n):
            j = row[i] - 1
            ci = memb[i]
            cj = memb[j]
            if ci == 0 and cj == 0:
                k += 1
                memb[i] = k
                memb[j] = k
            elif ci == 0:
                memb[i] = cj
            elif cj == 0:
                memb[j] = ci
            # both already assigned: the gene is ignored
        membership[p] = memb
        counts[p] = k
    return membership, counts


def population_stats(genes, eu, ev, degrees):
    """See the compiled twin: decode plus integer aggregates for scoring."""
    membership, counts = decode_population(genes)
    pop, n = genes.shape
    m = eu.shape[0]
    width = n + 1
    rows = np.arange(pop)[:, None]

    cu = membership[:, eu]
    internal = cu == membership[:, ev]
    flat_comm = (rows * width + cu)[internal]
    l_s = np.bincount(flat_comm, minlength=pop * width).reshape(pop, width)

    flat_u = (rows * n + np.broadcast_to(eu, (pop, m)))[internal]
    flat_v = (rows * n + np.broadcast_to(ev, (pop, m)))[internal]
    k_in = (
        np.bincount(flat_u, minlength=pop * n) + np.bincount(flat_v, minlength=pop * n)
    ).reshape(pop, n)

    memb_flat = (rows * width + membership).ravel()
    sizes = np.bincount(memb_flat, minlength=pop * width).reshape(pop, width)
    d_s = np.bincount(
        memb_flat, weights=np.broadcast_to(degrees, (pop, n)).ravel(), minlength=pop * width
    ).astype(np.int64).reshape(pop, width)
    return membership, counts, k_in, l_s, sizes, d_s


def nondominated_ranks(f1: np.ndarray, f2: np.ndarray) -> np.ndarray:
    n = f1.shape[0]
    a1, b1 = f1[:, None], f1[None, :]
    a2, b2 = f2[:, None], f2[None, :]
    # dom[p, q]: p dominates q
    dom = (a1 <= b1) & (a2 <= b2) & ((a1 < b1) | (a2 < b2))
    ncount = dom.sum(axis=0)
    ranks = np.zeros(n, dtype=np.int64)
    remaining = np.ones(n, dtype=bool)
    rank = 0
    while remaining.any():
        rank += 1
        front = remaining & (ncount == 0)
        ranks[front] = rank
        remaining &= ~front
        ncount -= dom[front].sum(axis=0)
    return ranks
