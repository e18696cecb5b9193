"""Construction-blind checks of EPG representations.

The intersection-graph oracle recomputes grid-edge coverage from raw segment
endpoints and deliberately shares no code with the construction.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .decomposition import TwoSidedNearTriangulation
from .model import (
    EpgRepresentation,
    GeometryError,
    HookedLShape,
    NotHexagonal,
    boundary,
    normalize,
)

Pair = tuple[int, int]


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def raw_segments(path: Sequence[tuple[int, int]]) -> list[tuple[int, int, int, int]]:
    return [(p[0], p[1], q[0], q[1]) for p, q in zip(path, path[1:])]


def coverage(segs_by_vertex: Mapping[int, Iterable[Sequence[int]]]) -> dict:
    """Unit grid edge -> set of vertices, from [x1, y1, x2, y2] segment lists."""
    cov: dict = defaultdict(set)
    for v, segs in segs_by_vertex.items():
        for x1, y1, x2, y2 in segs:
            if x1 == x2:
                lo, hi = sorted((y1, y2))
                for y in range(lo, hi):
                    cov[("v", x1, y)].add(v)
            elif y1 == y2:
                lo, hi = sorted((x1, x2))
                for x in range(lo, hi):
                    cov[("h", x, y1)].add(v)
            else:
                raise ValueError(f"segment {(x1, y1, x2, y2)} of {v} is not axis-parallel")
    return cov


def intersection_graph(rep: EpgRepresentation) -> set[Pair]:
    """Pairs of vertices whose paths cover a common unit grid edge."""
    cov = coverage({v: raw_segments(p) for v, p in rep.paths.items()})
    edges = set()
    for owners in cov.values():
        ordered = sorted(owners)
        for i, u in enumerate(ordered):
            for w in ordered[i + 1 :]:
                edges.add((u, w))
    return edges


def path_problem(path: Sequence[tuple[int, int]]) -> str | None:
    """Why ``path`` is not a simple orthogonal grid path, or None."""
    if not path:
        return "empty path"
    visited = {tuple(path[0])}
    for (x1, y1), (x2, y2) in zip(path, path[1:]):
        if (x1, y1) == (x2, y2):
            return f"zero-length segment at {(x1, y1)}"
        if x1 != x2 and y1 != y2:
            return f"segment {(x1, y1)}-{(x2, y2)} is not axis-parallel"
        dx = (x2 > x1) - (x2 < x1)
        dy = (y2 > y1) - (y2 < y1)
        x, y = x1, y1
        while (x, y) != (x2, y2):
            x, y = x + dx, y + dy
            if (x, y) in visited:
                return f"path revisits {(x, y)}"
            visited.add((x, y))
    return None


def chain_segments(segs: Sequence[Sequence[int]]) -> list[tuple[int, int]] | str:
    """Join [x1,y1,x2,y2] segments into a polyline, or explain why they do not chain."""
    if not segs:
        return "no segments"
    pts = [(segs[0][0], segs[0][1]), (segs[0][2], segs[0][3])]
    for s in segs[1:]:
        a, b = (s[0], s[1]), (s[2], s[3])
        if a == pts[-1]:
            pts.append(b)
        elif b == pts[-1]:
            pts.append(a)
        elif len(pts) == 2 and a == pts[0]:
            pts.reverse()
            pts.append(b)
        elif len(pts) == 2 and b == pts[0]:
            pts.reverse()
            pts.append(a)
        else:
            return f"segment {tuple(s)} does not continue the path at {pts[-1]}"
    return pts


def bends(path: Sequence[tuple[int, int]]) -> int:
    count = 0
    dirs = []
    for (x1, y1), (x2, y2) in zip(path, path[1:]):
        dirs.append("h" if y1 == y2 else "v")
    for d1, d2 in zip(dirs, dirs[1:]):
        count += d1 != d2
    return count


def classify_shape(path: Sequence[tuple[int, int]]) -> str:
    try:
        pts = normalize(path)
    except GeometryError:
        return "other"
    if len(pts) == 2:
        return "segment"
    try:
        shape = HookedLShape.from_path(pts)
    except GeometryError:
        return "other"
    if shape.top is None and shape.right is None:
        return "L"
    return "hooked-L"


@dataclass
class Report:
    passed: bool
    missing_edges: list[Pair]
    extra_edges: list[Pair]
    bends: dict[int, int]
    shapes: dict[int, str]
    path_errors: dict[int, str] = field(default_factory=dict)
    max_bends: int = 0
    max_ownership: int = 0

    def to_dict(self, names: Mapping[int, str] | None = None) -> dict:
        name = (lambda v: names[v]) if names else (lambda v: v)
        return {
            "pass": self.passed,
            "missing_edges": [[name(u), name(v)] for u, v in self.missing_edges],
            "extra_edges": [[name(u), name(v)] for u, v in self.extra_edges],
            "max_bends": self.max_bends,
            "max_ownership": self.max_ownership,
            "bends": {str(name(v)): b for v, b in self.bends.items()},
            "shapes": {str(name(v)): s for v, s in self.shapes.items()},
            "path_errors": {str(name(v)): e for v, e in self.path_errors.items()},
        }


def verify_representation(
    rep: EpgRepresentation, expected_edges: Iterable[Sequence[int]], max_bends: int = 3
) -> Report:
    """Compare the oracle graph with ``expected_edges`` and check path shapes."""
    expected = {_pair(*e) for e in expected_edges}
    got = intersection_graph(rep)
    errors = {v: msg for v, p in rep.paths.items() if (msg := path_problem(p))}
    bend_map = {v: bends(p) for v, p in rep.paths.items()}
    shapes = {v: classify_shape(p) for v, p in rep.paths.items()}
    cov = coverage({v: raw_segments(p) for v, p in rep.paths.items()})
    worst = max(bend_map.values(), default=0)
    missing = sorted(expected - got)
    extra = sorted(got - expected)
    ok = not missing and not extra and not errors and worst <= max_bends
    return Report(
        passed=ok,
        missing_edges=missing,
        extra_edges=extra,
        bends=bend_map,
        shapes=shapes,
        path_errors=errors,
        max_bends=worst,
        max_ownership=max((len(s) for s in cov.values()), default=0),
    )


def verify_segments(
    segs_by_vertex: Mapping[int, Sequence[Sequence[int]]],
    expected_edges: Iterable[Sequence[int]],
    max_bends: int = 3,
) -> Report:
    """Verify raw per-vertex segment lists, as read from a file."""
    paths = {}
    errors = {}
    for v, segs in segs_by_vertex.items():
        chained = chain_segments(segs)
        if isinstance(chained, str):
            errors[v] = chained
        else:
            paths[v] = chained
    expected = {_pair(*e) for e in expected_edges}
    cov = coverage(segs_by_vertex)
    got = set()
    for owners in cov.values():
        ordered = sorted(owners)
        for i, u in enumerate(ordered):
            for w in ordered[i + 1 :]:
                got.add((u, w))
    for v, p in paths.items():
        if (msg := path_problem(p)) is not None:
            errors[v] = msg
    bend_map = {v: bends(p) for v, p in paths.items()}
    worst = max(bend_map.values(), default=0)
    missing, extra = sorted(expected - got), sorted(got - expected)
    return Report(
        passed=not missing and not extra and not errors and worst <= max_bends,
        missing_edges=missing,
        extra_edges=extra,
        bends=bend_map,
        shapes={v: classify_shape(p) for v, p in paths.items()},
        path_errors=errors,
        max_bends=worst,
        max_ownership=max((len(s) for s in cov.values()), default=0),
    )


# -- invariant audit --------------------------------------------------------


@dataclass
class AuditReport:
    items: dict[str, bool]
    messages: dict[str, str]

    @property
    def passed(self) -> bool:
        return all(self.items.values())

    def failures(self) -> list[str]:
        return [f"{k}: {self.messages.get(k, '')}" for k, ok in self.items.items() if not ok]


def _owners(cov: Mapping, kind: str, x: int, y: int) -> set[int]:
    return set(cov.get((kind, x, y), ()))


def _side_runs(owner_seq: Sequence[set[int]]) -> list[int] | str:
    """Collapse a walk of exclusively owned edges into the sequence of owners."""
    runs: list[int] = []
    for owners in owner_seq:
        if len(owners) != 1:
            return f"edge owned by {sorted(owners)}"
        (v,) = owners
        if not runs or runs[-1] != v:
            runs.append(v)
    return runs


def audit_invariants(
    rep: EpgRepresentation, t: TwoSidedNearTriangulation
) -> AuditReport:
    """Check each item of the inductive invariant for ``rep`` against ``t``."""
    a, b = t.a, t.b
    p, q = t.p, t.q
    a1, b1 = a[0], b[0]
    items: dict[str, bool] = {}
    msgs: dict[str, str] = {}

    def record(key: str, ok: bool, msg: str = "") -> None:
        items[key] = bool(ok)
        if not ok:
            msgs[key] = msg

    expected = t.expected_edges()
    got = intersection_graph(rep)
    record(
        "graph",
        got == expected and set(rep.paths) == set(t.graph.vertices),
        f"missing {sorted(expected - got)} extra {sorted(got - expected)}",
    )
    absent = set(t.graph.vertices) - set(rep.paths)
    if absent:
        msgs["graph"] += f"; no path for {sorted(absent)}"
        return AuditReport(items, msgs)
    pa1 = normalize(rep.paths[a1])
    pb1 = normalize(rep.paths[b1])
    record("1", len(pa1) == 2 and pa1[0][0] == pa1[1][0], f"P(a_1) = {pa1}")
    record("2", len(pb1) == 2 and pb1[0][1] == pb1[1][1], f"P(b_1) = {pb1}")
    bad = [v for v in t.graph.vertices if v not in (a1, b1) and classify_shape(rep.paths[v]) not in ("L", "hooked-L")]
    record("3", not bad, f"not hooked L-shapes: {bad}")
    try:
        hexagon = boundary(rep)
    except NotHexagonal as exc:
        for key in ("4a", "4b", "4c", "4d", "4e", "4f", "4g"):
            record(key, False, str(exc))
        return AuditReport(items, msgs)
    L, R, T, Bot = hexagon.left, hexagon.right, hexagon.top, hexagon.bottom
    rx, ry = hexagon.reflex
    cov = coverage({v: raw_segments(pth) for v, pth in rep.paths.items()})

    # 4a: no grid point of any path strictly inside the SW quadrant of the reflex corner
    inside = [
        k for k in cov
        if (k[0] == "h" and k[1] < rx and k[2] < ry) or (k[0] == "v" and k[1] < rx and k[2] < ry)
    ]
    record("4a", not inside, f"edges in the empty quadrant: {inside[:3]}")

    # 4b: d(b_1) is the top side, rightmost edge exclusive
    top_ok = pb1[0][1] == T and min(pb1[0][0], pb1[1][0]) == L and max(pb1[0][0], pb1[1][0]) == R
    record("4b", top_ok and _owners(cov, "h", R - 1, T) == {b1}, f"P(b_1)={pb1}, box top {T} [{L},{R}]")

    # 4c: ell(a_1) is the right side, topmost edge exclusive
    right_ok = pa1[0][0] == R and min(pa1[0][1], pa1[1][1]) == Bot and max(pa1[0][1], pa1[1][1]) == T
    record("4c", right_ok and _owners(cov, "v", R, T - 1) == {a1}, f"P(a_1)={pa1}, box right {R} [{Bot},{T}]")

    # 4d: left side top to bottom: exclusive runs of ell(b_2) .. ell(b_q)
    runs = _side_runs([_owners(cov, "v", L, y) for y in range(T - 1, ry - 1, -1)])
    want = list(b[1:])
    record("4d", runs == want, f"left side runs {runs}, expected {want}")

    # 4e: bottom side right to left: exclusive runs of d(a_2) .. d(a_p)
    runs = _side_runs([_owners(cov, "h", x, Bot) for x in range(R - 1, rx - 1, -1)])
    want = list(a[1:])
    record("4e", runs == want, f"bottom side runs {runs}, expected {want}")

    # 4f: vertical reflex side belongs to ell(a_p), bottommost edge exclusive
    ap = a[-1]
    col = [_owners(cov, "v", rx, y) for y in range(Bot, ry)]
    record(
        "4f",
        bool(col) and all(ap in s for s in col) and col[0] == {ap},
        f"vertical reflex side owners {[sorted(s) for s in col]}",
    )

    # 4g: horizontal reflex side belongs to d(b_q), leftmost edge exclusive
    bq = b[-1]
    row = [_owners(cov, "h", x, ry) for x in range(L, rx)]
    record(
        "4g",
        bool(row) and all(bq in s for s in row) and row[0] == {bq},
        f"horizontal reflex side owners {[sorted(s) for s in row]}",
    )

    if q == 1:
        ok, msg = _hook_removal_check(rep, t, ap, "top", _pair(ap, b1))
        record("5", ok, msg)
    if p == 1:
        ok, msg = _hook_removal_check(rep, t, bq, "right", _pair(a1, bq))
        record("6", ok, msg)
    return AuditReport(items, msgs)


def _hook_removal_check(rep, t, v, hook: str, lost: Pair) -> tuple[bool, str]:
    try:
        shape = HookedLShape.from_path(rep.paths[v])
    except GeometryError:
        return False, f"P({v}) is not a hooked L-shape"
    if getattr(shape, hook) is None:
        return False, f"P({v}) has no {hook} hook"
    trimmed = HookedLShape(shape.ell, shape.down, *(
        (None, shape.right) if hook == "top" else (shape.top, None)
    ))
    got = intersection_graph(rep.replace({v: trimmed.to_path()}))
    want = t.expected_edges() - {lost}
    return got == want, f"without the {hook} hook of {v}: missing {sorted(want - got)} extra {sorted(got - want)}"
