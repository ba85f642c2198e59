"""Gene-per-node chromosome encoding and its variation operators.

A chromosome for an N-node graph is a length-N integer array; gene i holding
value j asserts that nodes i and j belong to the same cluster.  Decoding
processes genes in index order and ignores a gene once both of its endpoints
are assigned, so later genes have less bearing on cluster formation.
"""
from __future__ import annotations

import numpy as np

from . import _kernels
from .graph import Partition


def as_chromosome(genes, n: int | None = None) -> np.ndarray:
    """Validate and convert to a canonical chromosome array (int64, values 1..N)."""
    c = np.asarray(genes, dtype=np.int64)
    if c.ndim != 1 or c.size == 0:
        raise ValueError("chromosome must be a non-empty 1-d sequence")
    if n is None:
        n = c.size
    if c.size != n:
        raise ValueError(f"chromosome length {c.size} does not match node count {n}")
    if c.min() < 1 or c.max() > n:
        raise ValueError("gene values must lie in 1..N")
    return c


def random_chromosome(n: int, rng: np.random.Generator) -> np.ndarray:
    """Chromosome with each gene drawn independently and uniformly from 1..n."""
    if n < 1:
        raise ValueError("node count must be >= 1")
    return rng.integers(1, n + 1, size=n)


def decode(chromosome) -> Partition:
    """Decode a chromosome into its Partition.

    Genes are processed in index order i = 1..N with j = gene(i): if neither
    i nor j is assigned they found a new cluster; if exactly one is assigned
    the other joins it; if both are assigned the gene is ignored.  Cluster
    ids are contiguous in order of creation.  Deterministic, linear in N.
    """
    c = as_chromosome(chromosome)
    membership, _ = _kernels.decode_population(c[None, :])
    return Partition(membership[0])


def one_point_crossover(p1, p2, site: int) -> tuple[np.ndarray, np.ndarray]:
    """Swap tails after `site`: child1 takes the first `site` genes of p1 and
    the rest from p2; child2 the reverse.  site must lie in 1..N-1."""
    a = as_chromosome(p1)
    b = as_chromosome(p2, n=a.size)
    if not 1 <= site <= a.size - 1:
        raise ValueError(f"crossover site must lie in 1..{a.size - 1}, got {site}")
    child1 = np.concatenate([a[:site], b[site:]])
    child2 = np.concatenate([b[:site], a[site:]])
    return child1, child2


def mutate(chromosome, pm: float, rng: np.random.Generator) -> np.ndarray:
    """Per-gene mutation: each gene is independently replaced, with
    probability pm, by a value drawn uniformly from 1..N (possibly its old
    value).  Draw order is fixed: the Bernoulli mask first, then a
    replacement value for every position."""
    c = as_chromosome(chromosome)
    if not 0.0 <= pm <= 1.0:
        raise ValueError("mutation probability must lie in [0, 1]")
    n = c.size
    mask = rng.random(n) < pm
    values = rng.integers(1, n + 1, size=n)
    return np.where(mask, values, c)
