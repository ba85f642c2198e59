"""Multi-objective genetic algorithm for community detection in undirected
networks, with evaluation metrics and a planted-partition benchmark
generator."""

from ._kernels import BACKEND
from .benchmark import BenchmarkSpec, generate
from .encoding import decode, mutate, one_point_crossover, random_chromosome
from .graph import Graph, GraphInputError, Partition, internal_edge_count, load_edge_list, load_membership
from .metrics import ConfusionMatrix, confusion_matrix, nmi
from .nsga2 import (
    GaConfig,
    GenerationRecord,
    Individual,
    RunResult,
    crowding_distance,
    dominates,
    evolve,
    fast_nondominated_sort,
    tournament_select,
)
from .objectives import ObjectivePair, ScoreParams, community_score, evaluate, modularity

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BenchmarkSpec",
    "ConfusionMatrix",
    "GaConfig",
    "GenerationRecord",
    "Graph",
    "GraphInputError",
    "Individual",
    "ObjectivePair",
    "Partition",
    "RunResult",
    "ScoreParams",
    "community_score",
    "confusion_matrix",
    "crowding_distance",
    "decode",
    "dominates",
    "evaluate",
    "evolve",
    "fast_nondominated_sort",
    "generate",
    "internal_edge_count",
    "load_edge_list",
    "load_membership",
    "modularity",
    "mutate",
    "nmi",
    "one_point_crossover",
    "random_chromosome",
    "tournament_select",
]
