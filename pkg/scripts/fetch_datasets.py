#!/usr/bin/env python3
"""Download the dolphins and football networks and convert them to the
edge-list / membership formats used by this package.

The karate network ships with the repository (data/karate.edges plus the
classic 2-group split in data/karate.truth); the other two networks are
fetched from their original distribution point:

    dolphins: 62 bottlenose dolphins, 159 ties (no community labels upstream)
    football: 115 college teams, 613 games, conference labels as ground truth

Usage: python scripts/fetch_datasets.py [--dest data/]

The dolphins archive carries no ground-truth labels; to enable the dolphins
NMI check, write the customary 2-group split to data/dolphins.truth
("<name> <group>" per line) from your preferred source.
"""
from __future__ import annotations

import argparse
import io
import re
import sys
import urllib.request
import zipfile
from pathlib import Path

BASE = "https://websites.umich.edu/~mejn/netdata"
DATASETS = {
    "dolphins": f"{BASE}/dolphins.zip",
    "football": f"{BASE}/football.zip",
}


def parse_gml(text: str):
    """Minimal GML reader for these datasets: node id/label/value plus
    edge source/target."""
    nodes: dict[int, dict] = {}
    edges: list[tuple[int, int]] = []
    for block_kind, body in re.findall(r"(node|edge)\s*\[(.*?)\]", text, flags=re.S):
        fields = dict(re.findall(r"(\w+)\s+(\"[^\"]*\"|\S+)", body))
        fields = {k: v.strip('"') for k, v in fields.items()}
        if block_kind == "node":
            nodes[int(fields["id"])] = fields
        else:
            edges.append((int(fields["source"]), int(fields["target"])))
    return nodes, edges


def convert(name: str, gml_text: str, dest: Path) -> None:
    nodes, edges = parse_gml(gml_text)

    def label(i: int) -> str:
        return nodes[i].get("label", str(i)).replace(" ", "_")

    seen = set()
    lines = []
    for u, v in edges:
        key = (min(u, v), max(u, v))
        if u == v or key in seen:
            continue
        seen.add(key)
        lines.append(f"{label(u)} {label(v)}")
    (dest / f"{name}.edges").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {dest / f'{name}.edges'} ({len(nodes)} nodes, {len(lines)} edges)")

    if all("value" in f for f in nodes.values()):
        truth = [f"{label(i)} {nodes[i]['value']}" for i in sorted(nodes)]
        (dest / f"{name}.truth").write_text("\n".join(truth) + "\n", encoding="utf-8")
        print(f"wrote {dest / f'{name}.truth'}")
    else:
        print(f"{name}: no community labels in the GML; {name}.truth not written")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dest", default=Path(__file__).parent.parent / "data", type=Path)
    args = parser.parse_args()
    args.dest.mkdir(parents=True, exist_ok=True)
    for name, url in DATASETS.items():
        try:
            with urllib.request.urlopen(url, timeout=60) as resp:
                payload = resp.read()
        except OSError as exc:
            print(f"{name}: download failed ({exc}); see README for manual placement", file=sys.stderr)
            continue
        with zipfile.ZipFile(io.BytesIO(payload)) as zf:
            gml_name = next(n for n in zf.namelist() if n.endswith(".gml"))
            convert(name, zf.read(gml_name).decode("utf-8", errors="replace"), args.dest)
    return 0


if __name__ == "__main__":
    sys.exit(main())
