"""Undirected-graph data model and text-file ingestion.

Nodes carry arbitrary string labels in input files and are mapped to dense
internal indices 1..N in first-appearance order.  Graphs are simple (no
self-loops, no duplicate edges) and immutable once built.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class GraphInputError(ValueError):
    """Malformed edge-list or membership input."""


def _lines(source: str | Iterable[str]) -> Iterable[str]:
    if isinstance(source, str):
        return source.splitlines()
    return source


class Graph:
    """Immutable simple undirected graph over nodes 1..N.

    Node i corresponds to position i-1 of the positional arrays (degrees,
    labels); edge endpoints and neighbor lists are 1-based node indices.
    """

    def __init__(self, node_count: int, edges: np.ndarray, labels: Sequence[str] | None = None):
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        if edges.size:
            if edges.min() < 1 or edges.max() > node_count:
                raise ValueError("edge endpoint outside 1..N")
            if (edges[:, 0] == edges[:, 1]).any():
                raise ValueError("self-loops are not allowed")
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        order = np.lexsort((hi, lo))
        canon = np.stack([lo[order], hi[order]], axis=1)
        if len(canon) > 1 and (np.diff(canon, axis=0) == 0).all(axis=1).any():
            raise ValueError("duplicate edges are not allowed")
        if labels is None:
            labels = [str(i) for i in range(1, node_count + 1)]
        if len(labels) != node_count:
            raise ValueError("labels length must equal node_count")

        self._n = int(node_count)
        self._edges = canon
        self._labels = tuple(str(x) for x in labels)
        self._index = {lab: i + 1 for i, lab in enumerate(self._labels)}
        if len(self._index) != node_count:
            raise ValueError("node labels must be unique")

        deg = np.bincount(canon.ravel(), minlength=node_count + 1)[1:]
        self._degrees = deg.astype(np.int64)
        # CSR adjacency over 0-based indices, neighbor lists sorted
        both = np.concatenate([canon, canon[:, ::-1]]) - 1 if canon.size else np.empty((0, 2), dtype=np.int64)
        order = np.lexsort((both[:, 1], both[:, 0]))
        self._adj_indices = both[order, 1]
        self._adj_indptr = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(np.bincount(both[:, 0], minlength=node_count), out=self._adj_indptr[1:])
        for arr in (self._edges, self._degrees, self._adj_indices, self._adj_indptr):
            arr.setflags(write=False)

    @property
    def node_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> np.ndarray:
        """Edge array of shape (m, 2), 1-based endpoints, u < v, sorted."""
        return self._edges

    @property
    def degrees(self) -> np.ndarray:
        """Degree of node i at position i-1."""
        return self._degrees

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    def degree(self, i: int) -> int:
        return int(self._degrees[i - 1])

    def neighbors(self, i: int) -> np.ndarray:
        """Sorted 1-based neighbor indices of node i."""
        lo, hi = self._adj_indptr[i - 1], self._adj_indptr[i]
        return self._adj_indices[lo:hi] + 1

    def label_of(self, i: int) -> str:
        return self._labels[i - 1]

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.edge_count})"


class Partition:
    """Assignment of every node 1..N to exactly one community 1..k.

    membership[i-1] is the community id of node i; ids are contiguous with no
    empty community.
    """

    def __init__(self, membership):
        memb = np.asarray(membership, dtype=np.int64)
        if memb.ndim != 1 or memb.size == 0:
            raise ValueError("membership must be a non-empty 1-d sequence")
        k = int(memb.max())
        if memb.min() < 1:
            raise ValueError("community ids must be >= 1")
        sizes = np.bincount(memb, minlength=k + 1)[1:]
        if (sizes == 0).any():
            empty = int(np.flatnonzero(sizes == 0)[0]) + 1
            raise ValueError(f"community ids must be contiguous; id {empty} is empty")
        self._memb = memb
        self._memb.setflags(write=False)
        self._k = k
        self._sizes = sizes.astype(np.int64)
        self._sizes.setflags(write=False)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Build a Partition from arbitrary community labels, renumbered 1..k
        in first-appearance order."""
        seen: dict = {}
        memb = np.empty(len(labels), dtype=np.int64)
        for i, lab in enumerate(labels):
            if lab not in seen:
                seen[lab] = len(seen) + 1
            memb[i] = seen[lab]
        return cls(memb)

    @property
    def n(self) -> int:
        return self._memb.size

    @property
    def membership(self) -> np.ndarray:
        return self._memb

    @property
    def community_count(self) -> int:
        return self._k

    @property
    def sizes(self) -> np.ndarray:
        """Size of community s at position s-1."""
        return self._sizes

    def community(self, s: int) -> np.ndarray:
        """Sorted 1-based node indices of community s."""
        if not 1 <= s <= self._k:
            raise ValueError(f"unknown community id {s}; partition has {self._k} communities")
        return np.flatnonzero(self._memb == s) + 1

    def communities(self) -> list[np.ndarray]:
        return [self.community(s) for s in range(1, self._k + 1)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and np.array_equal(self._memb, other._memb)

    def __repr__(self) -> str:
        return f"Partition(n={self.n}, k={self._k})"


def load_edge_list(source: str | Iterable[str]) -> Graph:
    """Parse an edge-list text: one edge per line, two whitespace-separated
    labels, '#' comment lines skipped.  Duplicate and reversed-duplicate
    lines collapse to a single edge."""
    labels: list[str] = []
    index: dict[str, int] = {}
    edge_set: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []

    def intern(lab: str) -> int:
        if lab not in index:
            index[lab] = len(labels) + 1
            labels.append(lab)
        return index[lab]

    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphInputError(
                f"line {lineno}: expected 2 whitespace-separated node labels, got {len(tokens)}"
            )
        if tokens[0] == tokens[1]:
            raise GraphInputError(f"line {lineno}: self-loop on node {tokens[0]!r}")
        u, v = intern(tokens[0]), intern(tokens[1])
        key = (u, v) if u < v else (v, u)
        if key not in edge_set:
            edge_set.add(key)
            edges.append(key)

    arr = np.array(edges, dtype=np.int64) if edges else np.empty((0, 2), dtype=np.int64)
    return Graph(len(labels), arr, labels)


def load_membership(source: str | Iterable[str], g: Graph) -> Partition:
    """Parse a membership text ("node_label community_label" per line) for the
    nodes of g.  Community labels are renumbered 1..k in file order."""
    raw_comm: list = [None] * g.node_count
    seen: set[int] = set()
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphInputError(
                f"line {lineno}: expected 'node community', got {len(tokens)} tokens"
            )
        node_lab, comm_lab = tokens
        try:
            i = g.index_of(node_lab)
        except KeyError:
            raise GraphInputError(f"line {lineno}: unknown node {node_lab!r}") from None
        if i in seen:
            raise GraphInputError(f"line {lineno}: duplicate node {node_lab!r}")
        seen.add(i)
        raw_comm[i - 1] = comm_lab
    if len(seen) != g.node_count:
        missing = next(g.label_of(i) for i in range(1, g.node_count + 1) if i not in seen)
        raise GraphInputError(f"membership is missing node {missing!r}")
    return Partition.from_labels(raw_comm)


def internal_edge_count(g: Graph, p: Partition, s: int) -> int:
    """Number of edges of g with both endpoints inside community s of p."""
    if p.n != g.node_count:
        raise ValueError("partition does not cover the graph's node set")
    if not 1 <= s <= p.community_count:
        raise ValueError(f"unknown community id {s}; partition has {p.community_count} communities")
    memb = p.membership
    eu, ev = g.edges[:, 0] - 1, g.edges[:, 1] - 1
    return int(((memb[eu] == s) & (memb[ev] == s)).sum())
