"""Elitist bi-objective evolutionary engine (NSGA-II).

The generational loop is sequential and fully deterministic given the seed:
all random draws happen in a fixed order per generation (tournament
contestants, crossover coins, crossover sites, mutation masks, mutation
values), and fitness evaluation is a pure function of the chromosomes, so it
may be chunked across workers without changing any result.

Environmental selection is the canonical elitist scheme: parents and
offspring are sorted together, the next generation is filled front by front,
and the last admitted front is truncated by descending crowding distance
(ties broken by lower pool index).  Ranks and crowding carried into the next
generation's tournaments are the ones computed on the combined pool.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .graph import Graph
from .objectives import ObjectivePair, ScoreParams, evaluate_population, fitness_pair


@dataclass
class GaConfig:
    population_size: int = 200
    generations: int = 3000
    crossover_prob: float = 0.7
    mutation_prob: float = 0.03
    r: float = 2.5
    seed: int = 0

    def validate(self) -> None:
        if self.population_size < 4 or self.population_size % 2:
            raise ValueError("population_size must be an even integer >= 4")
        if self.generations < 1:
            raise ValueError("generations must be >= 1")
        for name in ("crossover_prob", "mutation_prob"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")
        if not self.r > 0:
            raise ValueError("power-mean exponent r must be > 0")


@dataclass(eq=False)
class Individual:
    chromosome: np.ndarray
    objectives: ObjectivePair
    rank: int = 0
    crowding: float = 0.0


@dataclass(frozen=True)
class GenerationRecord:
    generation: int
    best_q: float
    best_cs: float
    front_size: int


@dataclass
class RunResult:
    final_front: list[Individual]
    best_by_q: Individual
    history: list[GenerationRecord] = field(default_factory=list)


def dominates(a: ObjectivePair, b: ObjectivePair) -> bool:
    """Pareto dominance for minimization: no worse in both, better in one."""
    return a.f1 <= b.f1 and a.f2 <= b.f2 and (a.f1 < b.f1 or a.f2 < b.f2)


def fast_nondominated_sort(pop: list[Individual]) -> list[list[Individual]]:
    """Split a population into Pareto fronts and assign each Individual's rank."""
    f1 = np.array([ind.objectives.f1 for ind in pop], dtype=np.float64)
    f2 = np.array([ind.objectives.f2 for ind in pop], dtype=np.float64)
    ranks = _kernels.nondominated_ranks(f1, f2)
    fronts: list[list[Individual]] = [[] for _ in range(int(ranks.max(initial=0)))]
    for ind, r in zip(pop, ranks):
        ind.rank = int(r)
        fronts[r - 1].append(ind)
    return fronts


def crowding_distance(front: list[Individual]) -> np.ndarray:
    """Crowding distances for one mutually non-dominating front; also stored
    on the Individuals."""
    f1 = np.array([ind.objectives.f1 for ind in front], dtype=np.float64)
    f2 = np.array([ind.objectives.f2 for ind in front], dtype=np.float64)
    dist = _crowding(f1, f2)
    for ind, d in zip(front, dist):
        ind.crowding = float(d)
    return dist


def _crowding(f1: np.ndarray, f2: np.ndarray) -> np.ndarray:
    n = f1.size
    if n <= 2:
        return np.full(n, np.inf)
    dist = np.zeros(n)
    for obj in (f1, f2):
        order = np.argsort(obj, kind="stable")
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        span = obj[order[-1]] - obj[order[0]]
        if span > 0:
            dist[order[1:-1]] += (obj[order[2:]] - obj[order[:-2]]) / span
    return dist


def tournament_select(pop: list[Individual], rng: np.random.Generator) -> Individual:
    """Draw 4 contestants uniformly with replacement; the winner has the
    lowest rank, then the highest crowding distance, then the lowest index."""
    idx = rng.integers(0, len(pop), size=4)
    best = idx[0]
    for c in idx[1:]:
        if _beats(pop[c].rank, pop[c].crowding, c, pop[best].rank, pop[best].crowding, best):
            best = c
    return pop[best]


def _beats(rank_c, crowd_c, idx_c, rank_w, crowd_w, idx_w) -> bool:
    if rank_c != rank_w:
        return rank_c < rank_w
    if crowd_c != crowd_w:
        return crowd_c > crowd_w
    return idx_c < idx_w


def evolve(
    g: Graph,
    config: GaConfig | None = None,
    workers: int = 1,
    kernel: str | None = None,
    progress=None,
) -> RunResult:
    """Run the full evolutionary loop on g and return the final Pareto front.

    `workers` only parallelizes fitness evaluation (results are identical for
    any value).  `kernel` forces a backend ("compiled"/"python"); the default
    is the one selected at import.  `progress`, if given, is called with each
    GenerationRecord.
    """
    config = config if config is not None else GaConfig()
    config.validate()
    if g.edge_count < 1:
        raise ValueError("evolve requires a graph with at least one edge")
    kern = _kernels.kernel if kernel is None else _kernels.load_kernel(kernel)
    params = ScoreParams(r=config.r)
    pop_size = config.population_size
    n = g.node_count
    rng = np.random.default_rng(config.seed)

    genes = rng.integers(1, n + 1, size=(pop_size, n))
    q, cs, _, _ = evaluate_population(g, genes, params, kernel=kern, workers=workers)
    f1, f2 = fitness_pair(q, cs)
    rank = kern.nondominated_ranks(f1, f2)
    crowd = _crowding_by_front(f1, f2, rank)

    history = [_record(0, q, cs, rank)]
    if progress is not None:
        progress(history[-1])

    half = pop_size // 2
    for gen in range(1, config.generations + 1):
        contestants = rng.integers(0, pop_size, size=(pop_size, 4))
        coins = rng.random(half)
        sites = rng.integers(1, n, size=half)
        mut_mask = rng.random((pop_size, n)) < config.mutation_prob
        mut_vals = rng.integers(1, n + 1, size=(pop_size, n))

        winners = _tournament_winners(contestants, rank, crowd)
        parents = genes[winners]
        pa, pb = parents[0::2], parents[1::2]
        cross = (coins < config.crossover_prob)[:, None]
        head = np.arange(n)[None, :] < sites[:, None]
        c1 = np.where(cross & ~head, pb, pa)
        c2 = np.where(cross & ~head, pa, pb)
        offspring = np.empty_like(parents)
        offspring[0::2] = c1
        offspring[1::2] = c2
        offspring = np.where(mut_mask, mut_vals, offspring)

        oq, ocs, _, _ = evaluate_population(g, offspring, params, kernel=kern, workers=workers)

        pool_genes = np.concatenate([genes, offspring])
        pool_q = np.concatenate([q, oq])
        pool_cs = np.concatenate([cs, ocs])
        pool_f1, pool_f2 = fitness_pair(pool_q, pool_cs)
        pool_rank = kern.nondominated_ranks(pool_f1, pool_f2)

        sel, sel_crowd = _environmental_selection(pool_f1, pool_f2, pool_rank, pop_size)
        genes = pool_genes[sel]
        q, cs = pool_q[sel], pool_cs[sel]
        f1, f2 = pool_f1[sel], pool_f2[sel]
        rank = pool_rank[sel]
        crowd = sel_crowd

        history.append(_record(gen, q, cs, rank))
        if progress is not None:
            progress(history[-1])

    return _finalize(genes, q, cs, f1, f2, rank, crowd, history)


def _tournament_winners(contestants: np.ndarray, rank: np.ndarray, crowd: np.ndarray) -> np.ndarray:
    w = contestants[:, 0]
    for t in range(1, contestants.shape[1]):
        c = contestants[:, t]
        better = (rank[c] < rank[w]) | (
            (rank[c] == rank[w])
            & ((crowd[c] > crowd[w]) | ((crowd[c] == crowd[w]) & (c < w)))
        )
        w = np.where(better, c, w)
    return w


def _crowding_by_front(f1: np.ndarray, f2: np.ndarray, rank: np.ndarray) -> np.ndarray:
    crowd = np.empty(f1.size)
    for r in range(1, int(rank.max(initial=0)) + 1):
        idx = np.flatnonzero(rank == r)
        crowd[idx] = _crowding(f1[idx], f2[idx])
    return crowd


def _environmental_selection(
    pool_f1: np.ndarray, pool_f2: np.ndarray, pool_rank: np.ndarray, pop_size: int
) -> tuple[np.ndarray, np.ndarray]:
    """Pick pop_size pool indices front by front; returns (indices, crowding)
    with crowding computed on full pool fronts."""
    selected: list[np.ndarray] = []
    crowd_parts: list[np.ndarray] = []
    taken = 0
    for r in range(1, int(pool_rank.max()) + 1):
        idx = np.flatnonzero(pool_rank == r)
        cd = _crowding(pool_f1[idx], pool_f2[idx])
        if taken + idx.size <= pop_size:
            selected.append(idx)
            crowd_parts.append(cd)
            taken += idx.size
            if taken == pop_size:
                break
        else:
            order = np.lexsort((idx, -cd))[: pop_size - taken]
            selected.append(idx[order])
            crowd_parts.append(cd[order])
            break
    return np.concatenate(selected), np.concatenate(crowd_parts)


def _record(gen: int, q: np.ndarray, cs: np.ndarray, rank: np.ndarray) -> GenerationRecord:
    return GenerationRecord(
        generation=gen,
        best_q=float(q.max()),
        best_cs=float(cs.max()),
        front_size=int((rank == 1).sum()),
    )


def _finalize(genes, q, cs, f1, f2, rank, crowd, history) -> RunResult:
    front_idx = np.flatnonzero(rank == 1)
    order = np.lexsort((front_idx, f2[front_idx], f1[front_idx]))
    front_idx = front_idx[order]
    front = [
        Individual(
            chromosome=genes[i].copy(),
            objectives=ObjectivePair.from_q_cs(float(q[i]), float(cs[i])),
            rank=1,
            crowding=float(crowd[i]),
        )
        for i in front_idx
    ]
    best_pos = int(np.argmax(q[front_idx]))
    return RunResult(final_front=front, best_by_q=front[best_pos], history=history)
