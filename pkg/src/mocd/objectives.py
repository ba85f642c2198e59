"""The two partition-quality objectives and the minimized fitness pair.

Modularity Q compares each community's internal edge fraction against the
degree-preserving random expectation.  Community score CS sums, over
communities, the order-r power mean of each node's internal-connection
fraction times the community's internal edge volume (the ordered double sum
over the adjacency block, i.e. twice the internal edge count).

The two minimized fitnesses are f1 = 1 - Q and f2 = (1 - Q) + 10/(1 + CS);
the weight 10 is an empirical constant of the method.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .encoding import as_chromosome
from .graph import Graph, Partition

CS_WEIGHT = 10.0


@dataclass(frozen=True)
class ScoreParams:
    """Knobs of the community score; r is the power-mean exponent."""

    r: float = 2.5

    def __post_init__(self):
        if not self.r > 0:
            raise ValueError("power-mean exponent r must be > 0")


def fitness_pair(q, cs):
    """The minimized pair (f1, f2) from Q and CS; works on scalars and arrays."""
    f1 = 1.0 - q
    return f1, f1 + CS_WEIGHT / (1.0 + cs)


@dataclass(frozen=True)
class ObjectivePair:
    f1: float
    f2: float
    q: float
    cs: float

    @classmethod
    def from_q_cs(cls, q: float, cs: float) -> "ObjectivePair":
        f1, f2 = fitness_pair(q, cs)
        return cls(f1=f1, f2=f2, q=q, cs=cs)


def _check_cover(g: Graph, p: Partition) -> None:
    if p.n != g.node_count:
        raise ValueError("partition does not cover the graph's node set")


def modularity(g: Graph, p: Partition) -> float:
    """Q = sum over communities of [l_s/m - (d_s/2m)^2].

    l_s counts internal edges once, d_s is the community's degree sum and m
    the total edge count.  Undefined (error) on edgeless graphs.
    """
    _check_cover(g, p)
    m = g.edge_count
    if m == 0:
        raise ValueError("modularity is undefined for a graph with no edges")
    memb = p.membership
    k = p.community_count
    cu = memb[g.edges[:, 0] - 1]
    cv = memb[g.edges[:, 1] - 1]
    l_s = np.bincount(cu[cu == cv], minlength=k + 1)[1:]
    d_s = np.bincount(memb, weights=g.degrees, minlength=k + 1)[1:]
    terms = l_s / m - (d_s / (2.0 * m)) ** 2
    return math.fsum(terms)


def community_score(g: Graph, p: Partition, params: ScoreParams = ScoreParams()) -> float:
    """CS = sum over communities of M(S) * v_S, with M(S) the order-r power
    mean of mu_i = k_in_i/|S| and v_S = 2 * l_S."""
    _check_cover(g, p)
    memb = p.membership
    k = p.community_count
    sizes = p.sizes
    eu = g.edges[:, 0] - 1
    ev = g.edges[:, 1] - 1
    internal = memb[eu] == memb[ev]
    k_in = np.bincount(eu[internal], minlength=g.node_count) + np.bincount(
        ev[internal], minlength=g.node_count
    )
    l_s = np.bincount(memb[eu][internal], minlength=k + 1)[1:]
    mu = k_in / sizes[memb - 1]
    mur_sum = np.bincount(memb, weights=mu**params.r, minlength=k + 1)[1:]
    scores = (mur_sum / sizes) * (2.0 * l_s)
    return math.fsum(scores)


def evaluate(g: Graph, chromosome, params: ScoreParams = ScoreParams()) -> ObjectivePair:
    """Decode a chromosome and compute its objective pair on g."""
    c = as_chromosome(chromosome, n=g.node_count)
    q, cs, _, _ = evaluate_population(g, c[None, :], params)
    return ObjectivePair.from_q_cs(float(q[0]), float(cs[0]))


def evaluate_population(
    g: Graph,
    genes: np.ndarray,
    params: ScoreParams = ScoreParams(),
    kernel=None,
    workers: int = 1,
):
    """Decode and score a whole population at once.

    genes is a (P, N) int64 array of chromosomes.  Returns (q, cs,
    membership, counts) where q and cs are float64 arrays of length P and
    membership/counts are the decoded communities as produced by the kernel.

    Rows are independent, so the work may be chunked across `workers`
    threads; results are identical for any worker count.
    """
    if kernel is None:
        kernel = _kernels.kernel
    if g.edge_count == 0:
        raise ValueError("modularity is undefined for a graph with no edges")
    genes = np.ascontiguousarray(genes, dtype=np.int64)
    pop = genes.shape[0]
    if workers <= 1 or pop < 2 * workers:
        return _evaluate_chunk(g, genes, params.r, kernel)
    bounds = np.linspace(0, pop, workers + 1, dtype=int)
    chunks = [genes[a:b] for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        parts = list(pool.map(lambda ch: _evaluate_chunk(g, ch, params.r, kernel), chunks))
    return tuple(np.concatenate([p[i] for p in parts]) for i in range(4))


def _evaluate_chunk(g: Graph, genes: np.ndarray, r: float, kernel):
    pop, n = genes.shape
    m = g.edge_count
    width = n + 1
    membership, counts, k_in, l_s, sizes, d_s = kernel.population_stats(
        genes, g.edges[:, 0] - 1, g.edges[:, 1] - 1, g.degrees
    )

    q = (l_s / m - (d_s / (2.0 * m)) ** 2)[:, 1:].sum(axis=1)

    size_of_node = np.take_along_axis(sizes, membership, axis=1)
    mur = (k_in / size_of_node) ** r
    memb_flat = (np.arange(pop)[:, None] * width + membership).ravel()
    mur_sum = np.bincount(memb_flat, weights=mur.ravel(), minlength=pop * width).reshape(pop, width)
    m_s = mur_sum / np.maximum(sizes, 1)  # unused community slots stay 0
    cs = (m_s * (2.0 * l_s))[:, 1:].sum(axis=1)
    return q, cs, membership, counts
