"""Partition-comparison metrics: confusion matrix and normalized mutual
information (arithmetic-mean normalization, natural logarithm).

NMI terms are accumulated with math.fsum and every term is built from
individual log factors, so the value is exactly invariant under community
relabeling and identical partitions score exactly 1.0.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Partition


@dataclass(frozen=True)
class ConfusionMatrix:
    counts: np.ndarray  # shape (k_a, k_b)
    row_sums: np.ndarray
    col_sums: np.ndarray
    total: int


def confusion_matrix(a: Partition, b: Partition) -> ConfusionMatrix:
    """counts[i][j] = number of nodes in community i+1 of a and j+1 of b."""
    if a.n != b.n:
        raise ValueError(f"partitions cover different node sets ({a.n} vs {b.n} nodes)")
    ka, kb = a.community_count, b.community_count
    flat = (a.membership - 1) * kb + (b.membership - 1)
    counts = np.bincount(flat, minlength=ka * kb).reshape(ka, kb)
    return ConfusionMatrix(
        counts=counts,
        row_sums=counts.sum(axis=1),
        col_sums=counts.sum(axis=0),
        total=int(a.n),
    )


def nmi(a: Partition, b: Partition) -> float:
    """NMI = -2 sum_ij N_ij ln(N_ij N / (N_i. N_.j))
             / [sum_i N_i. ln(N_i./N) + sum_j N_.j ln(N_.j/N)]

    0*ln(.) terms are 0; the two all-in-one partitions (0/0) score 1 by
    definition.  Result lies in [0, 1] up to rounding.
    """
    cm = confusion_matrix(a, b)
    n = cm.total
    log_n = math.log(n)
    den_terms = [v * (math.log(v) - log_n) for v in cm.row_sums.tolist() if v > 0]
    den_terms += [v * (math.log(v) - log_n) for v in cm.col_sums.tolist() if v > 0]
    den = math.fsum(den_terms)
    if den == 0.0:  # both partitions all-in-one
        return 1.0
    # each cell contributes two products; the pairing makes identical
    # partitions come out as the exact negation of the denominator terms
    num_terms = []
    rows, cols = np.nonzero(cm.counts)
    for i, j in zip(rows.tolist(), cols.tolist()):
        nij = int(cm.counts[i, j])
        num_terms.append(nij * (math.log(nij) - math.log(int(cm.col_sums[j]))))
        num_terms.append(nij * (log_n - math.log(int(cm.row_sums[i]))))
    return -2.0 * math.fsum(num_terms) / den + 0.0
