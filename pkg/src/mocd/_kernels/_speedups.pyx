# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the hot integer loops of the evolutionary engine.

All kernels are integer-only: floating-point arithmetic stays in shared
Python code so the compiled and fallback backends produce identical results.
"""
import numpy as np

cimport numpy as cnp


def decode_population(const cnp.int64_t[:, ::1] genes):
    """Decode a matrix of chromosomes into community memberships.

    genes holds one chromosome per row with gene values in 1..N.  Returns
    (membership, counts): membership[p, i] is the 1-based community id of
    node i+1 under chromosome p, with ids contiguous in order of community
    creation; counts[p] is the number of communities.
    """
    cdef Py_ssize_t pop = genes.shape[0]
    cdef Py_ssize_t n = genes.shape[1]
    membership = np.zeros((pop, n), dtype=np.int64)
    counts = np.zeros(pop, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] memb = membership
    cdef cnp.int64_t[::1] cnt = counts
    cdef Py_ssize_t p, i
    cdef cnp.int64_t j, ci, cj, k
    with nogil:
        for p in range(pop):
            k = 0
            for i in range(n):
                j = genes[p, i] - 1
                ci = memb[p, i]
                cj = memb[p, j]
                if ci == 0 and cj == 0:
                    k += 1
                    memb[p, i] = k
                    memb[p, j] = k
                elif ci == 0:
                    memb[p, i] = cj
                elif cj == 0:
                    memb[p, j] = ci
                # both already assigned: the gene is ignored
            cnt[p] = k
    return membership, counts


def population_stats(
    const cnp.int64_t[:, ::1] genes,
    const cnp.int64_t[::1] eu,
    const cnp.int64_t[::1] ev,
    const cnp.int64_t[::1] degrees,
):
    """Decode chromosomes and gather the integer aggregates the objectives
    need: per-node internal degree k_in, and per-community internal edge
    count, size and degree sum (community-indexed arrays have width N+1 and
    are indexed by the 1-based community id).

    eu/ev are 0-based edge endpoints.  Returns (membership, counts, k_in,
    l_s, sizes, d_s), all int64.
    """
    cdef Py_ssize_t pop = genes.shape[0]
    cdef Py_ssize_t n = genes.shape[1]
    cdef Py_ssize_t m = eu.shape[0]
    cdef Py_ssize_t width = n + 1
    membership, counts = decode_population(genes)
    k_in_arr = np.zeros((pop, n), dtype=np.int64)
    l_arr = np.zeros((pop, width), dtype=np.int64)
    sizes_arr = np.zeros((pop, width), dtype=np.int64)
    d_arr = np.zeros((pop, width), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] memb = membership
    cdef cnp.int64_t[:, ::1] k_in = k_in_arr
    cdef cnp.int64_t[:, ::1] l_s = l_arr
    cdef cnp.int64_t[:, ::1] sizes = sizes_arr
    cdef cnp.int64_t[:, ::1] d_s = d_arr
    cdef Py_ssize_t p, i, e
    cdef cnp.int64_t c, u, v
    with nogil:
        for p in range(pop):
            for i in range(n):
                c = memb[p, i]
                sizes[p, c] += 1
                d_s[p, c] += degrees[i]
            for e in range(m):
                u = eu[e]
                v = ev[e]
                c = memb[p, u]
                if c == memb[p, v]:
                    l_s[p, c] += 1
                    k_in[p, u] += 1
                    k_in[p, v] += 1
    return membership, counts, k_in_arr, l_arr, sizes_arr, d_arr


def nondominated_ranks(const cnp.float64_t[::1] f1, const cnp.float64_t[::1] f2):
    """Pareto ranks (1-based front indices) for a bi-objective minimization.

    rank 1 holds the non-dominated points; rank r+1 the points non-dominated
    once ranks <= r are removed.
    """
    cdef Py_ssize_t n = f1.shape[0]
    ranks = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] rk = ranks
    dom = np.zeros((n, n), dtype=np.uint8)
    cdef cnp.uint8_t[:, ::1] dm = dom
    ncount = np.zeros(n, dtype=np.int64)
    cdef cnp.int64_t[::1] nc = ncount
    cdef Py_ssize_t p, q
    cdef cnp.int64_t assigned, rank
    with nogil:
        for p in range(n):
            for q in range(n):
                if p == q:
                    continue
                if f1[p] <= f1[q] and f2[p] <= f2[q] and (f1[p] < f1[q] or f2[p] < f2[q]):
                    dm[p, q] = 1
                    nc[q] += 1
        assigned = 0
        rank = 0
        while assigned < n:
            rank += 1
            for p in range(n):
                if rk[p] == 0 and nc[p] == 0:
                    rk[p] = rank
                    assigned += 1
            for p in range(n):
                if rk[p] == rank:
                    for q in range(n):
                        if dm[p, q]:
                            nc[q] -= 1
    return ranks
