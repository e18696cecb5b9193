"""Regenerate tests/fixtures/*.json.

four_connected.json: pairwise non-isomorphic 4-connected triangulations with
n <= 12 from a random flip walk, each confirmed both by the separating
triangle search and by networkx vertex connectivity.

near_triangulations.json: near-triangulations with n <= 10 obtained from
those by deleting one vertex or a path of two or three vertices, plus a
triangle, K4 and small wheels.

Usage: python3 scripts/generate_fixtures.py [--seed N]
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

import networkx as nx

from b3epg import fixtures
from b3epg.graph import (
    EmbeddedGraph,
    find_separating_triangles,
    is_near_triangulation,
)

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def to_record(name: str, g: EmbeddedGraph) -> dict:
    return {
        "name": name,
        "n": g.n,
        "rotation": {str(v): list(g.rotation[v]) for v in g.vertices},
        "outer": list(g.outer_face),
    }


def delete(g: EmbeddedGraph, drop: set[int]) -> EmbeddedGraph | None:
    rot = {v: tuple(w for w in ns if w not in drop) for v, ns in g.rotation.items() if v not in drop}
    if any(len(ns) < 2 for ns in rot.values()):
        return None
    h = EmbeddedGraph(rot, ())
    long_faces = [f for f in h.faces if len(f) > 3]
    if len(long_faces) != 1:
        return None
    h = h.with_outer_face(long_faces[0])
    return h if is_near_triangulation(h) else None


def marked(g: EmbeddedGraph) -> nx.Graph:
    h = g.to_networkx()
    outer = set(g.outer_face)
    nx.set_node_attributes(h, {v: v in outer for v in h}, "outer")
    return h


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)

    tri = list(fixtures.four_connected_triangulations(range(6, 13), per_size=30, seed=args.seed, steps=60000))
    for g in tri:
        assert not find_separating_triangles(g)
        assert nx.node_connectivity(g.to_networkx()) >= 4
    counts: dict[int, int] = {}
    records = []
    for g in sorted(tri, key=lambda g: g.n):
        counts[g.n] = counts.get(g.n, 0) + 1
        records.append(to_record(f"t{g.n}_{counts[g.n]:02d}", g))
    (OUT / "four_connected.json").write_text(json.dumps({"graphs": records}, indent=0) + "\n")
    print("four_connected:", counts)

    near: list[tuple[str, EmbeddedGraph]] = [
        ("triangle", fixtures.triangle()),
        ("k4", fixtures.k4()),
    ]
    for k in range(4, 10):
        w = fixtures.wheel(k)
        rim = next(f for f in w.faces if len(f) == k)
        near.append((f"wheel{k}", w.with_outer_face(rim)))
    seen: list[nx.Graph] = []
    for name, g in near:
        seen.append(marked(g))
    for g in tri:
        if g.n > 12:
            continue
        drops = [{v} for v in g.vertices]
        drops += [{u, v} for u, v in sorted(g.edges)]
        drops += [{u, v, w} for u, v in sorted(g.edges) for w in g.rotation[v] if w > u and w != u]
        for drop in drops:
            if g.n - len(drop) > 10:
                continue
            h = delete(g, drop)
            if h is None:
                continue
            m = marked(h)
            nm = nx.algorithms.isomorphism.categorical_node_match("outer", False)
            if any(nx.is_isomorphic(m, o, node_match=nm) for o in seen):
                continue
            seen.append(m)
            near.append((f"near{h.n}_{len(near):03d}", h))
    (OUT / "near_triangulations.json").write_text(
        json.dumps({"graphs": [to_record(nm, g) for nm, g in near]}, indent=0) + "\n"
    )
    print("near_triangulations:", len(near), "graphs")


if __name__ == "__main__":
    main()
