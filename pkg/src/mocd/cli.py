"""Command-line front end: detect / evaluate / generate.

Exit codes: 0 on success, 1 on input or data errors, 2 on usage errors.
All randomness flows from --seed, so identical invocations write identical
files (the run record's timing field aside).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import _kernels
from .benchmark import BenchmarkSpec, generate
from .encoding import decode
from .graph import Graph, Partition, load_edge_list, load_membership
from .metrics import nmi
from .nsga2 import GaConfig, RunResult, evolve
from .objectives import ScoreParams, community_score, modularity

RECORD_FORMAT_VERSION = 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mocd",
        description="Bi-objective genetic algorithm for community detection in undirected networks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("detect", help="run community detection on an edge-list file")
    p.add_argument("graph", help="edge-list file (one 'u v' pair per line, '#' comments)")
    p.add_argument("--truth", help="membership file with ground-truth communities")
    p.add_argument("--population", type=int, default=200)
    p.add_argument("--generations", type=int, default=3000)
    p.add_argument("--crossover-prob", type=float, default=0.7)
    p.add_argument("--mutation-prob", type=float, default=0.03)
    p.add_argument("--exponent-r", type=float, default=2.5, help="power-mean exponent of the community score")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--runs", type=int, default=1, help="run seeds seed..seed+K-1 and keep the best by Q")
    p.add_argument("--workers", type=int, default=1, help="threads for fitness evaluation")
    p.add_argument("--output", help="output prefix (default: the graph file's stem)")
    p.add_argument("--json", action="store_true", help="print the run record as JSON")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("evaluate", help="score a partition (and compare two partitions)")
    p.add_argument("graph")
    p.add_argument("partition", help="membership file to score")
    p.add_argument("second", nargs="?", help="second membership file; prints NMI against the first")
    p.add_argument("--exponent-r", type=float, default=2.5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("generate", help="write a planted-partition benchmark graph")
    p.add_argument("--nodes", type=int, default=128)
    p.add_argument("--communities", type=int, default=4)
    p.add_argument("--avg-degree", type=float, default=16.0)
    p.add_argument("--mu", type=float, required=True, help="mixing parameter in [0, 1]")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="benchmark", help="output prefix for .edges and .truth files")
    p.set_defaults(func=cmd_generate)
    return parser


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _out(prefix: Path, ext: str) -> Path:
    return prefix.parent / (prefix.name + ext)


def cmd_detect(args) -> int:
    try:
        if args.runs < 1:
            raise ValueError("--runs must be >= 1")
        if args.workers < 1:
            raise ValueError("--workers must be >= 1")
        GaConfig(
            population_size=args.population,
            generations=args.generations,
            crossover_prob=args.crossover_prob,
            mutation_prob=args.mutation_prob,
            r=args.exponent_r,
        ).validate()
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    g = load_edge_list(_read(args.graph))
    truth = load_membership(_read(args.truth), g) if args.truth else None

    results: list[tuple[int, RunResult]] = []
    for k in range(args.runs):
        config = GaConfig(
            population_size=args.population,
            generations=args.generations,
            crossover_prob=args.crossover_prob,
            mutation_prob=args.mutation_prob,
            r=args.exponent_r,
            seed=args.seed + k,
        )
        results.append((config.seed, evolve(g, config, workers=args.workers)))
    best_seed, best = max(results, key=lambda sr: (sr[1].best_by_q.objectives.q, -sr[0]))

    best_ind = best.best_by_q
    best_part = decode(best_ind.chromosome)
    score = None if truth is None else nmi(best_part, truth)

    prefix = Path(args.output) if args.output else Path(Path(args.graph).stem)
    _write_membership(_out(prefix, ".membership"), g, best_part)
    _write_pareto(_out(prefix, ".pareto.csv"), best)
    record = _run_record(args, g, best_seed, best, best_part, score, results)
    record["timing"] = {"wall_seconds": time.perf_counter() - start}
    _out(prefix, ".run.json").write_text(json.dumps(record, indent=2) + "\n", encoding="utf-8")

    if args.json:
        print(json.dumps(record, indent=2))
    else:
        print(f"best seed {best_seed}: q={best_ind.objectives.q:.6f} cs={best_ind.objectives.cs:.6f} "
              f"k={best_part.community_count} front={len(best.final_front)}")
        if score is not None:
            print(f"nmi vs ground truth: {score:.6f}")
        print(f"wrote {_out(prefix, '.membership')}, {_out(prefix, '.pareto.csv')}, "
              f"{_out(prefix, '.run.json')}")
    return 0


def _write_membership(path: Path, g: Graph, p: Partition) -> None:
    lines = [f"{g.label_of(i)} {p.membership[i - 1]}" for i in range(1, g.node_count + 1)]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _write_pareto(path: Path, result: RunResult) -> None:
    rows = ["f1,f2,q,cs,k"]
    for ind in result.final_front:
        o = ind.objectives
        k = decode(ind.chromosome).community_count
        rows.append(f"{o.f1!r},{o.f2!r},{o.q!r},{o.cs!r},{k}")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def _run_record(args, g, best_seed, best: RunResult, best_part, score, results) -> dict:
    per_run = [
        {
            "seed": seed,
            "q": r.best_by_q.objectives.q,
            "cs": r.best_by_q.objectives.cs,
            "k": decode(r.best_by_q.chromosome).community_count,
        }
        for seed, r in results
    ]
    return {
        "format_version": RECORD_FORMAT_VERSION,
        "command": "detect",
        "input": args.graph,
        "truth": args.truth,
        "nodes": g.node_count,
        "edges": g.edge_count,
        "config": {
            "population_size": args.population,
            "generations": args.generations,
            "crossover_prob": args.crossover_prob,
            "mutation_prob": args.mutation_prob,
            "r": args.exponent_r,
            "seed": args.seed,
            "runs": args.runs,
            "workers": args.workers,
        },
        "kernel": _kernels.BACKEND,
        "results": {
            "best_seed": best_seed,
            "q": best.best_by_q.objectives.q,
            "cs": best.best_by_q.objectives.cs,
            "k": best_part.community_count,
            "nmi": score,
            "front_size": len(best.final_front),
            "best_chromosome": ",".join(str(v) for v in best.best_by_q.chromosome.tolist()),
        },
        "runs": per_run,
        "history": [
            [rec.generation, rec.best_q, rec.best_cs, rec.front_size] for rec in best.history
        ],
    }


def cmd_evaluate(args) -> int:
    g = load_edge_list(_read(args.graph))
    part = load_membership(_read(args.partition), g)
    q = modularity(g, part)
    cs = community_score(g, part, ScoreParams(r=args.exponent_r))
    score = None
    if args.second:
        other = load_membership(_read(args.second), g)
        score = nmi(part, other)
    if args.json:
        out = {"q": q, "cs": cs, "k": part.community_count, "nmi": score}
        print(json.dumps(out, indent=2))
    else:
        print(f"q={q:.6f} cs={cs:.6f} k={part.community_count}")
        if score is not None:
            print(f"nmi={score:.6f}")
    return 0


def cmd_generate(args) -> int:
    spec = BenchmarkSpec(
        nodes=args.nodes,
        communities=args.communities,
        avg_degree=args.avg_degree,
        mixing=args.mu,
        seed=args.seed,
    )
    g, truth = generate(spec)
    prefix = Path(args.output)
    header = (f"# planted partition: nodes={spec.nodes} communities={spec.communities} "
              f"avg_degree={spec.avg_degree} mu={spec.mixing} seed={spec.seed}")
    edge_lines = [header] + [f"{g.label_of(u)} {g.label_of(v)}" for u, v in g.edges]
    _out(prefix, ".edges").write_text("\n".join(edge_lines) + "\n", encoding="utf-8")
    truth_lines = [header] + [
        f"{g.label_of(i)} {truth.membership[i - 1]}" for i in range(1, g.node_count + 1)
    ]
    _out(prefix, ".truth").write_text("\n".join(truth_lines) + "\n", encoding="utf-8")
    print(f"wrote {_out(prefix, '.edges')} and {_out(prefix, '.truth')}: "
          f"{g.node_count} nodes, {g.edge_count} edges")
    return 0


if __name__ == "__main__":
    sys.exit(main())
