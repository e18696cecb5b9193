"""2-sided near-triangulations and their one-step decomposition.

A near-triangulation is 2-sided when its clockwise outer face reads
``a_1 .. a_p, b_q .. b_1`` with no chord inside the a-run or inside the
b-run.  Every such graph on four or more vertices admits an a_p-removal, a
b_q-removal, or a split at the common neighbour x of a_p and b_q.  Every
candidate step here is checked by actually building the smaller pieces and
validating them, so nothing rests on a shortcut condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .graph import EmbeddedGraph, GraphError, edge_key, is_near_triangulation


class DecompositionError(ValueError):
    pass


class ChordOnSide(DecompositionError):
    def __init__(self, side: str, i: int, j: int):
        super().__init__(f"chord ({side}_{i}, {side}_{j}) on the {side}-side")
        self.side, self.i, self.j = side, i, j


class NotNearTriangulation(DecompositionError):
    pass


class NoValidStep(DecompositionError):
    pass


class NoValidSplit(NoValidStep):
    pass


@dataclass(frozen=True)
class TwoSidedNearTriangulation:
    graph: EmbeddedGraph
    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.a)

    @property
    def q(self) -> int:
        return len(self.b)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def outer_cycle(self) -> tuple[int, ...]:
        return self.a + tuple(reversed(self.b))

    def expected_edges(self, with_a1b1: bool = False) -> set[tuple[int, int]]:
        """Edge set the representation must realize (without (a_1, b_1) by default)."""
        edges = set(self.graph.edges)
        if not with_a1b1:
            edges.discard(edge_key(self.a[0], self.b[0]))
        return edges


def _rotate_to(face: Sequence[int], start: int) -> tuple[int, ...]:
    k = list(face).index(start)
    return tuple(face[k:]) + tuple(face[:k])


def make_two_sided(
    graph: EmbeddedGraph, a: Sequence[int], b: Sequence[int], *, check: bool = True
) -> TwoSidedNearTriangulation:
    """Validate an explicit (a, b) labeling of ``graph``'s outer face."""
    a, b = tuple(a), tuple(b)
    if not a or not b:
        raise DecompositionError("both sides need at least one vertex")
    cycle = a + tuple(reversed(b))
    if len(set(cycle)) != len(cycle):
        raise DecompositionError("outer labeling repeats a vertex")
    outer = graph.outer_face
    if len(outer) != len(cycle) or _rotate_to(outer, a[0]) != cycle:
        graph = graph.with_outer_face(cycle)
    for side, seq in (("a", a), ("b", b)):
        for i in range(len(seq)):
            for j in range(i + 2, len(seq)):
                if graph.has_edge(seq[i], seq[j]):
                    raise ChordOnSide(side, i + 1, j + 1)
    if check and not is_near_triangulation(graph):
        raise NotNearTriangulation("graph is not a near-triangulation")
    return TwoSidedNearTriangulation(graph, a, b)


def label_two_sided(
    g: EmbeddedGraph, split_point: int, start: int | None = None
) -> TwoSidedNearTriangulation:
    """Label the clockwise outer face as a_1..a_p (p = split_point) then b_q..b_1.

    ``start`` picks a_1 (default: first vertex of the stored outer face).
    """
    outer = g.outer_face
    if start is not None:
        outer = _rotate_to(outer, start)
    if not 1 <= split_point < len(outer):
        raise DecompositionError(
            f"split point {split_point} outside 1..{len(outer) - 1}"
        )
    a = outer[:split_point]
    b = tuple(reversed(outer[split_point:]))
    return make_two_sided(g, a, b)


@dataclass(frozen=True)
class ApRemoval:
    new_b: tuple[int, ...]
    t_prime: TwoSidedNearTriangulation


@dataclass(frozen=True)
class BqRemoval:
    new_a: tuple[int, ...]
    t_prime: TwoSidedNearTriangulation


@dataclass(frozen=True)
class Split:
    """Split at x with 1-based indices i < p and j < q."""

    x: int
    i: int
    j: int
    t_prime: TwoSidedNearTriangulation
    t_a: TwoSidedNearTriangulation
    t_b: TwoSidedNearTriangulation


DecompositionStep = Union[ApRemoval, BqRemoval, Split]


def _between_ccw(g: EmbeddedGraph, v: int, start: int, stop: int) -> list[int]:
    """Neighbours of v strictly after ``start`` and before ``stop`` in ccw order."""
    ns = g.rotation[v]
    k = ns.index(start)
    out = []
    for t in range(1, len(ns)):
        w = ns[(k + t) % len(ns)]
        if w == stop:
            return out
        out.append(w)
    raise DecompositionError(f"{stop} is not a neighbour of {v}")


def try_ap_removal(t: TwoSidedNearTriangulation) -> ApRemoval | None:
    if t.p < 2 or t.n < 4:
        return None
    ap, prev, bq = t.a[-1], t.a[-2], t.b[-1]
    inner = _between_ccw(t.graph, ap, prev, bq)
    # inner[0] sits next to a_{p-1} on the new outer face, i.e. it is b_{q+r}
    new_b = tuple(reversed(inner))
    a2, b2 = t.a[:-1], t.b + new_b
    try:
        sub = t.graph.delete_vertex(ap, a2 + tuple(reversed(b2)))
        return ApRemoval(new_b, make_two_sided(sub, a2, b2))
    except GraphError:
        return None
    except DecompositionError:
        return None


def try_bq_removal(t: TwoSidedNearTriangulation) -> BqRemoval | None:
    if t.q < 2 or t.n < 4:
        return None
    bq, prev, ap = t.b[-1], t.b[-2], t.a[-1]
    new_a = tuple(_between_ccw(t.graph, bq, ap, prev))
    a2, b2 = t.a + new_a, t.b[:-1]
    try:
        sub = t.graph.delete_vertex(bq, a2 + tuple(reversed(b2)))
        return BqRemoval(new_a, make_two_sided(sub, a2, b2))
    except GraphError:
        return None
    except DecompositionError:
        return None


def region(g: EmbeddedGraph, cycle_cw: Sequence[int]) -> EmbeddedGraph:
    """Sub-embedding enclosed by a clockwise cycle of ``g``.

    Collects the faces on the inner side of the cycle by a walk in the dual
    graph that never crosses a cycle edge.
    """
    cyc = tuple(cycle_cw)
    k = len(cyc)
    if len(set(cyc)) != k or k < 3:
        raise DecompositionError("cycle must be simple with at least 3 vertices")
    inward = {(cyc[(s + 1) % k], cyc[s]) for s in range(k)}
    for u, v in inward:
        if not g.has_edge(u, v):
            raise DecompositionError(f"({u}, {v}) is not an edge")
    face_of: dict[tuple[int, int], int] = {}
    for idx, f in enumerate(g.faces):
        for s in range(len(f)):
            face_of[(f[s], f[(s + 1) % len(f)])] = idx
    outer_idx = face_of[(g.outer_face[0], g.outer_face[1 % len(g.outer_face)])]
    todo = [face_of[d] for d in inward]
    inside = set(todo)
    while todo:
        f = g.faces[todo.pop()]
        for s in range(len(f)):
            u, v = f[s], f[(s + 1) % len(f)]
            if (u, v) in inward:
                continue
            nb = face_of[(v, u)]
            if nb not in inside:
                inside.add(nb)
                todo.append(nb)
    if outer_idx in inside:
        raise DecompositionError("cycle does not enclose a proper region")
    edges = set()
    for idx in inside:
        f = g.faces[idx]
        for s in range(len(f)):
            edges.add(edge_key(f[s], f[(s + 1) % len(f)]))
    return g.restrict(edges, cyc)


def split_candidates(t: TwoSidedNearTriangulation) -> tuple[int, list[int], list[int]]:
    """The vertex x and the candidate indices i (desc) and j (desc), all 1-based."""
    ap, bq = t.a[-1], t.b[-1]
    # the inner face at the outer edge a_p -> b_q is traversed b_q -> a_p -> x
    x = t.graph.next_in_face(bq, ap)
    if x in t.outer_cycle:
        raise NoValidSplit(f"common neighbour {x} of a_p and b_q lies on the outer face")
    i_cands = [i for i in range(t.p - 1, 0, -1) if t.graph.has_edge(x, t.a[i - 1])]
    j_cands = [j for j in range(t.q - 1, 0, -1) if t.graph.has_edge(x, t.b[j - 1])]
    return x, i_cands, j_cands


def build_split(t: TwoSidedNearTriangulation, x: int, i: int, j: int) -> Split:
    a, b = t.a, t.b
    pa = a[:i] + (x,)
    pb = b[:j]
    t_prime = make_two_sided(region(t.graph, pa + tuple(reversed(pb))), pa, pb)
    aa = a[i - 1 :]
    t_a = make_two_sided(region(t.graph, aa + (x,)), aa, (x,))
    bb = b[j - 1 :]
    t_b = make_two_sided(region(t.graph, (x,) + tuple(reversed(bb))), (x,), bb)
    return Split(x, i, j, t_prime, t_a, t_b)


def find_split(t: TwoSidedNearTriangulation) -> Split:
    """First validating (i, j), trying i from largest, then j from largest."""
    x, i_cands, j_cands = split_candidates(t)
    for i in i_cands:
        for j in j_cands:
            try:
                return build_split(t, x, i, j)
            except (DecompositionError, GraphError):
                continue
    raise NoValidSplit(f"no valid split at x={x}")


def classify_step(t: TwoSidedNearTriangulation) -> DecompositionStep:
    if t.n < 4:
        raise NoValidStep("decomposition needs at least 4 vertices")
    step: DecompositionStep | None = try_ap_removal(t) or try_bq_removal(t)
    if step is not None:
        return step
    try:
        return find_split(t)
    except NoValidSplit as exc:
        raise NoValidStep(str(exc)) from exc
