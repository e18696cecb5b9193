"""Representations of plane graphs without separating triangles.

Such a graph G is made an induced subgraph of a 4-connected triangulation:
a wheel gets a second hub; otherwise G plus caller-supplied augmentation
edges must form a 4-connected triangulation H, every added edge of H is
subdivided, and every face that is not a triangle is stellated.  The paths
of the helper vertices are deleted from the final representation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .builder import add_a1b1_edge, build_representation, delete_vertices
from .decomposition import label_two_sided
from .graph import (
    Edge,
    EmbeddedGraph,
    GraphError,
    build_embedded_graph,
    edge_key,
    find_separating_triangles,
    induced_edges,
    is_biconnected,
    is_four_connected_triangulation,
    is_triangulation,
)
from .model import EpgRepresentation


class AugmentationError(ValueError):
    pass


class NotAWheel(AugmentationError):
    pass


class AugmentationInvalid(AugmentationError):
    pass


class PostconditionFailed(AugmentationError):
    pass


class SeparatingTriangle(AugmentationError):
    pass


@dataclass(frozen=True)
class Augmented:
    """A 4-connected triangulation containing the input graph as an induced subgraph."""

    graph: EmbeddedGraph
    origin: Mapping[int, str] = field(default_factory=dict)

    def input_vertices(self) -> list[int]:
        return sorted(v for v, tag in self.origin.items() if tag == "input")


def wheel_hub(g: EmbeddedGraph) -> int | None:
    """Hub of a wheel with a rim of length >= 3, else None."""
    n = g.n
    if n < 4 or g.m != 2 * (n - 1):
        return None
    for v in g.vertices:
        if g.degree(v) != n - 1:
            continue
        rim = [w for w in g.vertices if w != v]
        if all(sum(1 for u in g.rotation[w] if u != v) == 2 for w in rim):
            h = g.to_networkx().subgraph(rim)
            if nx.is_connected(h):
                return v
    return None


def handle_wheel(g: EmbeddedGraph) -> Augmented:
    """Add a second hub adjacent to the whole rim.

    The rim must have length >= 4: the doubled 3-wheel is K5 minus an edge,
    whose rim is a separating triangle.
    """
    hub = wheel_hub(g)
    if hub is None:
        raise NotAWheel("graph is not a wheel")
    if g.n - 1 < 4:
        raise NotAWheel("rim of length 3: the doubled wheel would not be 4-connected")
    w = max(g.vertices) + 1
    rim = [v for v in g.vertices if v != hub]
    t = build_embedded_graph(sorted(g.edges) + [(v, w) for v in rim])
    if not is_four_connected_triangulation(t):
        raise PostconditionFailed("double wheel is not a 4-connected triangulation")
    origin = {v: "input" for v in g.vertices}
    origin[w] = "hub"
    return Augmented(t, origin)


def _stellate(rot: dict[int, list[int]], face: Sequence[int], c: int) -> None:
    k = len(face)
    for s in range(k):
        prev, cur, nxt = face[s - 1], face[s], face[(s + 1) % k]
        ns = rot[cur]
        # around cur the face wedge runs ccw from nxt to prev
        pos = ns.index(prev)
        if ns[pos - 1] != nxt:
            raise PostconditionFailed(f"face {face} is not consistent with the rotation at {cur}")
        ns.insert(pos, c)
    rot[c] = list(face)


def subdivide_and_stellate(
    g: EmbeddedGraph, augmentation_edges: Iterable[Sequence[int]]
) -> Augmented:
    aug = [edge_key(*e) for e in augmentation_edges]
    if find_separating_triangles(g):
        raise SeparatingTriangle("input embedding has a separating triangle")
    if not aug:
        if is_four_connected_triangulation(g):
            return Augmented(g, {v: "input" for v in g.vertices})
        raise AugmentationInvalid("no augmentation edges and graph is not a 4-connected triangulation")
    if wheel_hub(g) is not None:
        raise AugmentationInvalid("wheels are handled by adding a second hub")
    try:
        h = build_embedded_graph(sorted(g.edges) + aug)
    except GraphError as exc:
        raise AugmentationInvalid(f"G plus augmentation is not a simple plane graph: {exc}") from exc
    if not is_four_connected_triangulation(h):
        raise AugmentationInvalid("G plus augmentation is not a 4-connected triangulation")

    origin = {v: "input" for v in g.vertices}
    rot = {v: list(ns) for v, ns in h.rotation.items()}
    fresh = max(h.vertices) + 1
    for u, v in aug:
        s = fresh
        fresh += 1
        rot[u][rot[u].index(v)] = s
        rot[v][rot[v].index(u)] = s
        rot[s] = [u, v]
        origin[s] = "subdivision"
    h_sub = EmbeddedGraph({v: tuple(ns) for v, ns in rot.items()}, ())
    for face in h_sub.faces:
        if len(face) == 3:
            continue
        _stellate(rot, face, fresh)
        origin[fresh] = "stellation"
        fresh += 1
    t = EmbeddedGraph({v: tuple(ns) for v, ns in rot.items()}, ())
    t = t.with_outer_face(t.faces[0])
    if not is_four_connected_triangulation(t):
        raise PostconditionFailed("stellated graph is not a 4-connected triangulation")
    if induced_edges(t.edges, g.vertices) != set(g.edges):
        raise PostconditionFailed("input graph is not an induced subgraph of the result")
    return Augmented(t, origin)


def greedy_augmentation(
    g: EmbeddedGraph, seed: int = 0, attempts: int = 200
) -> list[Edge]:
    """Randomly triangulate every face, keeping the first 4-connected result.

    A heuristic only; its output still goes through full validation.
    """
    if not is_biconnected(g):
        raise AugmentationInvalid("greedy augmentation needs a 2-connected graph")
    rng = random.Random(seed)
    base = set(g.edges)
    for _ in range(attempts):
        edges = set(base)
        added: list[Edge] = []
        ok = True
        for face in g.faces:
            stack = [list(face)]
            while stack and ok:
                f = stack.pop()
                if len(f) <= 3:
                    continue
                k = len(f)
                options = [
                    (s, r)
                    for s in range(k)
                    for r in range(s + 2, k)
                    if not (s == 0 and r == k - 1) and edge_key(f[s], f[r]) not in edges
                ]
                if not options:
                    ok = False
                    break
                s, r = rng.choice(options)
                e = edge_key(f[s], f[r])
                edges.add(e)
                added.append(e)
                stack.append(f[s : r + 1])
                stack.append(f[r:] + f[: s + 1])
            if not ok:
                break
        if not ok:
            continue
        try:
            h = build_embedded_graph(sorted(edges))
        except GraphError:
            continue
        if is_four_connected_triangulation(h):
            return sorted(added)
    raise AugmentationInvalid(f"no 4-connected triangulation found in {attempts} attempts")


def augment(
    g: EmbeddedGraph,
    augmentation_edges: Iterable[Sequence[int]] | None = None,
    seed: int = 0,
) -> Augmented:
    """Choose the right route to a 4-connected (or directly buildable) host graph."""
    if find_separating_triangles(g):
        raise SeparatingTriangle("input embedding has a separating triangle")
    if is_triangulation(g):
        # no separating triangle: a near-triangulation the builder takes as is
        return Augmented(g, {v: "input" for v in g.vertices})
    hub = wheel_hub(g)
    if hub is not None:
        return handle_wheel(g)
    if augmentation_edges is None:
        augmentation_edges = greedy_augmentation(g, seed)
    return subdivide_and_stellate(g, augmentation_edges)


def represent_planar_no_sep_triangle(
    g: EmbeddedGraph,
    augmentation_edges: Iterable[Sequence[int]] | None = None,
    seed: int = 0,
    audit: bool = False,
) -> EpgRepresentation:
    host = augment(g, augmentation_edges, seed)
    t_graph = host.graph
    face = next(f for f in t_graph.faces if len(f) == 3)
    t = label_two_sided(t_graph.with_outer_face(face), 2)
    rep = build_representation(t, audit=audit)
    rep = add_a1b1_edge(rep, t.a[0], t.b[0])
    return delete_vertices(rep, g.vertices)
