"""Planted-partition benchmark generator.

Nodes are split into equal planted communities; each intra-community pair
gets an edge with probability p_in = (1-mu)*d/(c-1) and each inter-community
pair with p_out = mu*d/(n-c), where d is the target average degree and c the
community size.  The mixing parameter mu is the expected fraction of a
node's edges that leave its own community.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, Partition


@dataclass(frozen=True)
class BenchmarkSpec:
    nodes: int = 128
    communities: int = 4
    avg_degree: float = 16.0
    mixing: float = 0.2
    seed: int = 0

    def __post_init__(self):
        if self.communities < 1 or self.nodes < 1:
            raise ValueError("nodes and communities must be positive")
        if self.nodes % self.communities:
            raise ValueError(
                f"nodes ({self.nodes}) must be divisible by communities ({self.communities})"
            )
        if not self.avg_degree < self.nodes:
            raise ValueError("avg_degree must be smaller than the node count")
        if not 0.0 <= self.mixing <= 1.0:
            raise ValueError("mixing parameter must lie in [0, 1]")

    @property
    def community_size(self) -> int:
        return self.nodes // self.communities

    def edge_probabilities(self) -> tuple[float, float]:
        c = self.community_size
        p_in = 0.0 if c == 1 else (1.0 - self.mixing) * self.avg_degree / (c - 1)
        p_out = 0.0 if c == self.nodes else self.mixing * self.avg_degree / (self.nodes - c)
        if not 0.0 <= p_in <= 1.0:
            raise ValueError(
                f"intra-community probability {p_in:.4f} outside [0, 1] "
                f"(mixing={self.mixing}, avg_degree={self.avg_degree}, community size {c})"
            )
        if not 0.0 <= p_out <= 1.0:
            raise ValueError(
                f"inter-community probability {p_out:.4f} outside [0, 1] "
                f"(mixing={self.mixing}, avg_degree={self.avg_degree}, nodes={self.nodes})"
            )
        return p_in, p_out


def generate(spec: BenchmarkSpec) -> tuple[Graph, Partition]:
    """Generate one benchmark instance and its planted ground truth.

    Deterministic given spec.seed; node labels are "1".."n".
    """
    p_in, p_out = spec.edge_probabilities()
    n = spec.nodes
    comm = np.repeat(np.arange(1, spec.communities + 1), spec.community_size)
    u, v = np.triu_indices(n, k=1)
    probs = np.where(comm[u] == comm[v], p_in, p_out)
    rng = np.random.default_rng(spec.seed)
    keep = rng.random(u.size) < probs
    edges = np.stack([u[keep] + 1, v[keep] + 1], axis=1)
    return Graph(n, edges), Partition(comm)
