"""Fixture loading and brute-force oracles used only by the tests."""

from __future__ import annotations

import itertools
import json
from functools import lru_cache
from pathlib import Path

from b3epg.decomposition import ApRemoval, BqRemoval, Split
from b3epg.graph import EmbeddedGraph, is_near_triangulation

FIXTURES = Path(__file__).parent / "fixtures"


@lru_cache(maxsize=None)
def _load(name: str) -> tuple[tuple[str, EmbeddedGraph], ...]:
    data = json.loads((FIXTURES / name).read_text())
    out = []
    for rec in data["graphs"]:
        rot = {int(v): tuple(ns) for v, ns in rec["rotation"].items()}
        out.append((rec["name"], EmbeddedGraph(rot, tuple(rec["outer"]))))
    return tuple(out)


def four_connected_fixtures() -> list[tuple[str, EmbeddedGraph]]:
    return list(_load("four_connected.json"))


def near_triangulation_fixtures() -> list[tuple[str, EmbeddedGraph]]:
    return list(_load("near_triangulations.json"))


def brute_separating_triangles(g: EmbeddedGraph) -> set[frozenset[int]]:
    """3-cycles that are not faces, by checking every vertex triple."""
    faces = {frozenset(f) for f in g.faces if len(f) == 3}
    out = set()
    for u, v, w in itertools.combinations(g.vertices, 3):
        if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w):
            if frozenset((u, v, w)) not in faces:
                out.add(frozenset((u, v, w)))
    return out


def brute_unit_edges(points) -> set[frozenset]:
    """Unit grid edges of a polyline, stepping one unit at a time."""
    out = set()
    for (x1, y1), (x2, y2) in zip(points, points[1:]):
        dx = (x2 > x1) - (x2 < x1)
        dy = (y2 > y1) - (y2 < y1)
        x, y = x1, y1
        while (x, y) != (x2, y2):
            out.add(frozenset({(x, y), (x + dx, y + dy)}))
            x, y = x + dx, y + dy
    return out


def brute_intersection_graph(paths) -> set[tuple[int, int]]:
    """Pairwise comparison of unit edge sets."""
    cells = {v: brute_unit_edges(p) for v, p in paths.items()}
    return {
        (min(u, v), max(u, v))
        for u, v in itertools.combinations(cells, 2)
        if cells[u] & cells[v]
    }


def all_labelings(g: EmbeddedGraph):
    """(start, split) for every rotation of the outer face and every split point."""
    outer = g.outer_face
    for s in outer:
        for p in range(1, len(outer)):
            yield s, p


def shift_segment(points, k: int, d: int):
    """Move segment k of a polyline perpendicular to itself by d; neighbours stretch."""
    pts = [tuple(p) for p in points]
    (x1, y1), (x2, y2) = pts[k], pts[k + 1]
    if y1 == y2:
        pts[k], pts[k + 1] = (x1, y1 + d), (x2, y2 + d)
    else:
        pts[k], pts[k + 1] = (x1 + d, y1), (x2 + d, y2)
    return pts


def mutants(rep, rng, count: int):
    """Random single-segment shifts of multi-segment paths that keep every segment non-degenerate."""
    multi = [v for v, p in rep.paths.items() if len(p) >= 3]
    out = []
    while len(out) < count:
        v = rng.choice(multi)
        path = rep.paths[v]
        k = rng.randrange(len(path) - 1)
        d = rng.choice([-2, -1, 1, 2])
        new = shift_segment(path, k, d)
        if any(p == q for p, q in zip(new, new[1:])):
            continue
        out.append((v, k, d, new))
    return out


def ground_truth_valid(paths, expected_edges, max_bends=3) -> bool:
    """Validity judged by brute force: simple paths, bend bound, exact edge set."""
    for pts in paths.values():
        cells = brute_unit_edges(pts)
        length = sum(abs(x2 - x1) + abs(y2 - y1) for (x1, y1), (x2, y2) in zip(pts, pts[1:]))
        if len(cells) != length or len({q for c in cells for q in c}) != length + 1:
            return False
        turns = sum(
            ((a[1] == b[1]) != (b[1] == c[1]))
            for a, b, c in zip(pts, pts[1:], pts[2:])
        )
        if turns > max_bends:
            return False
    want = {(min(u, v), max(u, v)) for u, v in expected_edges}
    return brute_intersection_graph(paths) == want


def to_segments(paths):
    return {v: [[p[0], p[1], q[0], q[1]] for p, q in zip(pts, pts[1:])] for v, pts in paths.items()}


def cyclic(f):
    k = f.index(min(f))
    return tuple(f[k:]) + tuple(f[:k])


def inner_faces(t):
    outer = cyclic(t.graph.outer_face)
    return [cyclic(f) for f in t.graph.faces if cyclic(f) != outer]


def revalidate(t, step):
    """Independent check of a decomposition step against the parent."""
    g = t.graph
    if isinstance(step, ApRemoval):
        sub = step.t_prime
        assert sub.a == t.a[:-1] and sub.b == t.b + step.new_b
        assert set(sub.graph.edges) == {e for e in g.edges if t.a[-1] not in e}
        assert set(step.new_b) == set(g.neighbors(t.a[-1])) - {t.a[-2], t.b[-1]}
        assert is_near_triangulation(sub.graph)
    elif isinstance(step, BqRemoval):
        sub = step.t_prime
        assert sub.b == t.b[:-1] and sub.a == t.a + step.new_a
        assert set(sub.graph.edges) == {e for e in g.edges if t.b[-1] not in e}
        assert is_near_triangulation(sub.graph)
    else:
        assert isinstance(step, Split)
        x, i, j = step.x, step.i, step.j
        assert 1 <= i < t.p and 1 <= j < t.q
        assert g.has_edge(x, t.a[-1]) and g.has_edge(x, t.b[-1])
        assert g.has_edge(x, t.a[i - 1]) and g.has_edge(x, t.b[j - 1])
        assert x not in t.outer_cycle
        assert step.t_prime.a == t.a[:i] + (x,) and step.t_prime.b == t.b[:j]
        assert step.t_a.a == t.a[i - 1 :] and step.t_a.b == (x,)
        assert step.t_b.a == (x,) and step.t_b.b == t.b[j - 1 :]
        # inner faces of the parts plus the face (a_p, x, b_q) are the inner faces of T
        parts = inner_faces(step.t_prime) + inner_faces(step.t_a) + inner_faces(step.t_b)
        parts.append(cyclic((t.b[-1], t.a[-1], x)))
        assert sorted(parts) == sorted(inner_faces(t))
        for sub in (step.t_prime, step.t_a, step.t_b):
            assert is_near_triangulation(sub.graph)
            assert sub.n < t.n


# acceptance criterion id -> (passed, detail); printed in the terminal summary
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, passed: bool, detail: str) -> None:
    ACCEPTANCE[number] = (passed, detail)
    print(f"criterion {number}: {'PASS' if passed else 'FAIL'} {detail}")
