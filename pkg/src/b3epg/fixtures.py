"""Named graphs and a random triangulation generator for tests and the CLI."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

import networkx as nx

from .graph import EmbeddedGraph, build_embedded_graph, edge_key, is_four_connected_triangulation


def triangle() -> EmbeddedGraph:
    return build_embedded_graph([(0, 1), (1, 2), (0, 2)])


def k4() -> EmbeddedGraph:
    return build_embedded_graph([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def cycle(k: int) -> EmbeddedGraph:
    return build_embedded_graph([(i, (i + 1) % k) for i in range(k)])


def wheel(k: int) -> EmbeddedGraph:
    """Rim 0..k-1, hub k."""
    edges = [(i, (i + 1) % k) for i in range(k)] + [(i, k) for i in range(k)]
    return build_embedded_graph(edges)


def double_wheel(k: int) -> EmbeddedGraph:
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(i, k) for i in range(k)] + [(i, k + 1) for i in range(k)]
    return build_embedded_graph(edges)


def octahedron() -> EmbeddedGraph:
    return double_wheel(4)


def icosahedron() -> EmbeddedGraph:
    g = nx.icosahedral_graph()
    return build_embedded_graph(sorted(g.edges()))


def cube() -> EmbeddedGraph:
    g = nx.convert_node_labels_to_integers(nx.hypercube_graph(3), ordering="sorted")
    return build_embedded_graph(sorted(g.edges()))


def stacked_tetrahedra() -> EmbeddedGraph:
    """K4 on 0..3 plus vertex 4 inside face (0, 1, 2)."""
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)]
    return build_embedded_graph(edges)


# Diagonals turning the cube into a 4-connected triangulation; one per
# square face, found by exhaustive search over the 64 diagonal choices.
CUBE_AUGMENTATION: tuple[tuple[int, int], ...] = ((0, 3), (0, 6), (1, 4), (1, 7), (2, 7), (5, 6))


def _flip_walk(
    n: int,
    rng: random.Random,
    keep_four_connected: bool = False,
    start: dict[int, set[int]] | None = None,
    attempts: int | None = None,
):
    """Random walk of edge flips on triangulations with n >= 6 vertices.

    Starts from the double wheel, or from the triangulation ``start``.
    Yields the adjacency sets after each accepted flip (the same mutable
    object every time) and stops after ``attempts`` tries if given.  With
    ``keep_four_connected`` a flip is only taken when the new edge lies in
    no triangle besides its two faces and both old endpoints keep degree >= 4.
    """
    if start is None:
        faces = _double_wheel_faces(n)
    else:
        faces = {_canon(f) for f in _adjacency_graph(start).faces}
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for f in faces:
        for s in range(3):
            adj[f[s]].add(f[(s + 1) % 3])
            adj[f[(s + 1) % 3]].add(f[s])
    # directed edge -> face containing it (face on the left)
    owner = {}
    for f in faces:
        for s in range(3):
            owner[(f[s], f[(s + 1) % 3])] = f
    tried = 0
    while attempts is None or tried < attempts:
        tried += 1
        u, v = rng.choice(sorted(owner))
        f1, f2 = owner[(u, v)], owner[(v, u)]
        w = _third(f1, u, v)
        z = _third(f2, u, v)
        if z in adj[w] or len(adj[u]) <= 3 or len(adj[v]) <= 3:
            continue
        if keep_four_connected and (
            len(adj[u]) <= 4 or len(adj[v]) <= 4 or adj[w] & adj[z] != {u, v}
        ):
            continue
        for f in (f1, f2):
            for s in range(3):
                del owner[(f[s], f[(s + 1) % 3])]
        adj[u].discard(v)
        adj[v].discard(u)
        adj[w].add(z)
        adj[z].add(w)
        for f in (_canon((u, z, w)), _canon((z, v, w))):
            for s in range(3):
                owner[(f[s], f[(s + 1) % 3])] = f
        yield adj


def _double_wheel_faces(n: int) -> set[tuple[int, int, int]]:
    k = n - 2
    faces = set()
    for i in range(k):
        j = (i + 1) % k
        faces.add(_canon((i, j, k)))
        faces.add(_canon((j, i, k + 1)))
    return faces


def _adjacency_graph(adj: dict[int, set[int]]) -> EmbeddedGraph:
    return build_embedded_graph(sorted({edge_key(u, v) for u in adj for v in adj[u]}))


def random_triangulation(
    n: int, flips: int, rng: random.Random, keep_four_connected: bool = False
) -> EmbeddedGraph:
    """Random triangulation on n >= 6 vertices after up to ``flips`` accepted flips.

    Gives up after 20 tries per requested flip, so a walk that cannot move
    returns its starting graph.
    """
    adj = None
    for adj in itertools.islice(
        _flip_walk(n, rng, keep_four_connected, attempts=20 * flips), flips
    ):
        pass
    return double_wheel(n - 2) if adj is None else _adjacency_graph(adj)


def random_four_connected_triangulation(
    n: int, rng: random.Random, mix: int = 0, steps: int = 200000
) -> EmbeddedGraph:
    """First 4-connected triangulation on a free flip walk, then ``mix`` flips that keep it so."""
    if n < 6:
        raise ValueError("4-connected triangulations need n >= 6")
    walk = _flip_walk(n, rng, attempts=steps)
    skip = rng.randrange(0, 4 * n)
    for t, adj in enumerate(walk):
        if t >= skip and min(len(s) for s in adj.values()) >= 4 and _triangle_count(adj) == 2 * n - 4:
            break
    else:
        if n != 6:
            raise RuntimeError(f"no 4-connected triangulation on {n} vertices found")
        adj = {v: set(ns) for v, ns in octahedron().to_networkx().adjacency()}
    start = {v: set(ns) for v, ns in adj.items()}
    for adj in itertools.islice(_flip_walk(n, rng, True, start=start, attempts=20 * mix), mix):
        pass
    g = _adjacency_graph(adj)
    if not is_four_connected_triangulation(g):
        raise RuntimeError("flip walk left the 4-connected triangulations")
    return g


def _canon(f: tuple[int, int, int]) -> tuple[int, int, int]:
    s = f.index(min(f))
    return f[s:] + f[:s]  # type: ignore[return-value]


def _third(f: tuple[int, int, int], u: int, v: int) -> int:
    return next(x for x in f if x != u and x != v)


def _triangle_count(adj: dict[int, set[int]]) -> int:
    return sum(len(adj[u] & adj[v]) for u in adj for v in adj[u] if u < v) // 3


def four_connected_triangulations(
    sizes: range, per_size: int, seed: int = 0, steps: int = 20000
) -> Iterator[EmbeddedGraph]:
    """Pairwise non-isomorphic 4-connected triangulations met on a random flip walk.

    A triangulation on n vertices has 2n - 4 faces, so it has no separating
    triangle exactly when it has 2n - 4 triangles; candidates passing that
    count are then checked in full.
    """
    rng = random.Random(seed)
    for n in sizes:
        if n == 6:
            yield octahedron()
            continue
        found: dict[str, list[nx.Graph]] = {}
        count = 0
        walk = _flip_walk(n, rng)
        for _ in range(steps):
            if count >= per_size:
                break
            adj = next(walk)
            if min(len(s) for s in adj.values()) < 4 or _triangle_count(adj) != 2 * n - 4:
                continue
            g = _adjacency_graph(adj)
            h = g.to_networkx()
            bucket = found.setdefault(nx.weisfeiler_lehman_graph_hash(h), [])
            if any(nx.is_isomorphic(h, o) for o in bucket):
                continue
            if not is_four_connected_triangulation(g):
                continue
            bucket.append(h)
            count += 1
            yield g
