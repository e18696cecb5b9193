"""Plane graphs stored as rotation systems.

Rotations are counterclockwise neighbour orders.  Faces are traced with the
face on the left of every directed edge, so inner faces come out
counterclockwise and the outer face comes out clockwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    pass


class NonPlanar(GraphError):
    pass


class InconsistentRotation(GraphError):
    pass


class MultiEdge(GraphError):
    pass


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Triangle:
    vertices: tuple[int, int, int]

    @classmethod
    def of(cls, u: int, v: int, w: int) -> "Triangle":
        return cls(tuple(sorted((u, v, w))))  # type: ignore[arg-type]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Triangle) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return f"Triangle{self.vertices}"


@dataclass(frozen=True, eq=False)
class EmbeddedGraph:
    """A connected plane graph: ccw rotation system plus a designated outer face."""

    rotation: Mapping[int, tuple[int, ...]]
    outer_face: tuple[int, ...]

    def __post_init__(self) -> None:
        rot = {v: tuple(ns) for v, ns in self.rotation.items()}
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "outer_face", tuple(self.outer_face))
        _check_rotation(rot)
        faces = self.faces
        v, e, f = len(rot), len(self.edges), len(faces)
        if v > 1 and v - e + f != 2:
            raise InconsistentRotation(
                f"rotation is not planar: V-E+F = {v}-{e}+{f} != 2"
            )
        if self.outer_face and _find_face(faces, self.outer_face) is None:
            raise InconsistentRotation(f"outer face {self.outer_face} is not a face")

    # -- basic accessors ---------------------------------------------------

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.rotation))

    @cached_property
    def edges(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u, ns in self.rotation.items() for v in ns)

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(ns) for v, ns in self.rotation.items()}

    @cached_property
    def _pos(self) -> dict[int, dict[int, int]]:
        return {v: {w: i for i, w in enumerate(ns)} for v, ns in self.rotation.items()}

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj.get(u, ())

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def next_in_face(self, u: int, v: int) -> int:
        """Vertex following the directed edge (u, v) on the face to its left."""
        ns = self.rotation[v]
        return ns[self._pos[v][u] - 1]

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_trace_faces(self))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.rotation)
        g.add_edges_from(self.edges)
        return g

    def with_outer_face(self, face: Sequence[int]) -> "EmbeddedGraph":
        return EmbeddedGraph(self.rotation, tuple(face))

    def restrict(self, keep_edges: Iterable[Edge], outer_face: Sequence[int]) -> "EmbeddedGraph":
        """Sub-embedding on an edge subset; rotations inherit the parent order."""
        kept = {edge_key(*e) for e in keep_edges}
        rot: dict[int, tuple[int, ...]] = {}
        for v, ns in self.rotation.items():
            sub = tuple(w for w in ns if edge_key(v, w) in kept)
            if sub:
                rot[v] = sub
        return EmbeddedGraph(rot, tuple(outer_face))

    def delete_vertex(self, x: int, outer_face: Sequence[int]) -> "EmbeddedGraph":
        rot = {
            v: tuple(w for w in ns if w != x)
            for v, ns in self.rotation.items()
            if v != x
        }
        return EmbeddedGraph(rot, tuple(outer_face))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return dict(self.rotation) == dict(other.rotation) and (
            _find_face([other.outer_face], self.outer_face) is not None
        )

    def __repr__(self) -> str:
        return f"EmbeddedGraph(n={self.n}, m={self.m}, outer={self.outer_face})"


def _check_rotation(rot: Mapping[int, tuple[int, ...]]) -> None:
    for v, ns in rot.items():
        if v in ns:
            raise MultiEdge(f"loop at {v}")
        if len(set(ns)) != len(ns):
            raise MultiEdge(f"repeated neighbour in rotation of {v}")
        for w in ns:
            if w not in rot or v not in rot[w]:
                raise InconsistentRotation(f"{v} lists {w} but not vice versa")


def _trace_faces(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    seen: set[tuple[int, int]] = set()
    faces = []
    for u in sorted(g.rotation):
        for v in g.rotation[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                a, b = b, g.next_in_face(a, b)
            faces.append(tuple(face))
    return faces


def _find_face(faces: Iterable[Sequence[int]], target: Sequence[int]) -> int | None:
    """Index of the face equal to ``target`` up to cyclic rotation."""
    k = len(target)
    for idx, f in enumerate(faces):
        if len(f) != k:
            continue
        if k == 0:
            return idx
        try:
            s = list(f).index(target[0])
        except ValueError:
            continue
        if all(f[(s + t) % k] == target[t] for t in range(k)):
            return idx
    return None


def build_embedded_graph(
    edges: Iterable[Sequence[int]],
    rotation: Mapping[int, Sequence[int]] | None = None,
    outer_face: Sequence[int] | None = None,
) -> EmbeddedGraph:
    """Build a plane graph from an edge list, embedding it if no rotation is given.

    Without ``outer_face`` the longest face is chosen (first one on ties).
    """
    edge_list = [tuple(e) for e in edges]
    seen: set[Edge] = set()
    vertices: set[int] = set()
    for e in edge_list:
        if len(e) != 2:
            raise GraphError(f"bad edge {e!r}")
        u, v = e
        if u == v:
            raise MultiEdge(f"loop at {u}")
        k = edge_key(u, v)
        if k in seen:
            raise MultiEdge(f"edge {k} given twice")
        seen.add(k)
        vertices.update(k)

    if rotation is not None:
        rot = {v: tuple(ns) for v, ns in rotation.items()}
        _check_rotation(rot)
        from_rot = {edge_key(u, w) for u, ns in rot.items() for w in ns}
        if edge_list and from_rot != seen:
            raise InconsistentRotation("rotation does not match the edge list")
    else:
        g = nx.Graph()
        g.add_nodes_from(vertices)
        g.add_edges_from(seen)
        if g.number_of_nodes() > 1 and not nx.is_connected(g):
            raise GraphError("graph is not connected")
        planar, emb = nx.check_planarity(g)
        if not planar:
            raise NonPlanar("graph is not planar")
        rot = {v: tuple(reversed(list(emb.neighbors_cw_order(v)))) for v in emb.nodes}

    if len(rot) > 1:
        comp = nx.Graph()
        comp.add_nodes_from(rot)
        comp.add_edges_from((u, w) for u, ns in rot.items() for w in ns)
        if not nx.is_connected(comp):
            raise GraphError("graph is not connected")
    probe = EmbeddedGraph(rot, ())
    if outer_face is None:
        faces = probe.faces
        outer = max(faces, key=len) if faces else ()
    else:
        outer = tuple(outer_face)
    return EmbeddedGraph(rot, outer)


def enumerate_faces(g: EmbeddedGraph) -> list[tuple[int, ...]]:
    return list(g.faces)


def triangles(g: EmbeddedGraph) -> list[Triangle]:
    out = []
    for u, v in sorted(g.edges):
        for w in g._adj[u] & g._adj[v]:
            if w > v:
                out.append(Triangle((u, v, w)))
    return sorted(out, key=lambda t: t.vertices)


def find_separating_triangles(g: EmbeddedGraph) -> list[Triangle]:
    """Triangles of ``g`` that do not bound a face of the embedding."""
    facial = {Triangle.of(*f) for f in g.faces if len(f) == 3}
    return [t for t in triangles(g) if t not in facial]


def is_biconnected(g: EmbeddedGraph) -> bool:
    return g.n >= 3 and nx.is_biconnected(g.to_networkx())


def is_near_triangulation(g: EmbeddedGraph) -> bool:
    if not is_biconnected(g):
        return False
    outer = _find_face(g.faces, g.outer_face)
    if any(len(f) != 3 for i, f in enumerate(g.faces) if i != outer):
        return False
    return not find_separating_triangles(g)


def is_triangulation(g: EmbeddedGraph) -> bool:
    return g.n >= 3 and all(len(f) == 3 for f in g.faces)


def is_four_connected_triangulation(g: EmbeddedGraph) -> bool:
    """All faces triangles and vertex connectivity at least 4.

    Computed twice: through separating triangles and through a max-flow
    connectivity computation.  The two must agree.
    """
    if not is_triangulation(g):
        return False
    by_triangles = g.n >= 5 and not find_separating_triangles(g)
    by_flow = g.n >= 5 and nx.node_connectivity(g.to_networkx()) >= 4
    if by_triangles != by_flow:
        raise AssertionError(
            f"connectivity checks disagree: triangles={by_triangles} flow={by_flow}"
        )
    return by_triangles


def induced_edges(edges: Iterable[Edge], keep: Iterable[int]) -> set[Edge]:
    ks = set(keep)
    return {edge_key(u, v) for u, v in edges if u in ks and v in ks}

