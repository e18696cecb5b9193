"""Orthogonal grid paths, hooked L-shapes and representations with edge ownership.

A path is stored as its polyline: the list of corner points, consecutive
points differing in exactly one coordinate.  A representation maps each
vertex to one path; two vertices are adjacent when their paths cover a
common unit grid edge.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

Point = tuple[int, int]
Segment = tuple[Point, Point]
Path = tuple[Point, ...]
UnitEdge = tuple[Point, Point]


class GeometryError(ValueError):
    pass


class ConnectivityBroken(GeometryError):
    pass


class NotHexagonal(GeometryError):
    pass


def canonical_segment(p: Point, q: Point) -> Segment:
    if p[0] != q[0] and p[1] != q[1]:
        raise GeometryError(f"segment {p}-{q} is not axis-parallel")
    if p == q:
        raise GeometryError(f"segment at {p} has zero length")
    return (p, q) if p < q else (q, p)


def normalize(points: Iterable[Point]) -> Path:
    """Drop repeated points and interior points of straight runs.

    A run that reverses direction raises GeometryError.
    """
    pts: list[Point] = []
    for p in points:
        p = (int(p[0]), int(p[1]))
        if pts and pts[-1] == p:
            continue
        pts.append(p)
    out: list[Point] = []
    for p in pts:
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            if not _between(out[-2], out[-1], p):
                raise GeometryError(f"path doubles back at {out[-1]}")
            out.pop()
        out.append(p)
    for p, q in zip(out, out[1:]):
        if p[0] != q[0] and p[1] != q[1]:
            raise GeometryError(f"segment {p}-{q} is not axis-parallel")
    return tuple(out)


def _collinear(a: Point, b: Point, c: Point) -> bool:
    return (a[0] == b[0] == c[0]) or (a[1] == b[1] == c[1])


def _between(a: Point, b: Point, c: Point) -> bool:
    return min(a, c) < b < max(a, c)


def segments(path: Sequence[Point]) -> list[Segment]:
    return [(p, q) for p, q in zip(path, path[1:])]


def unit_edges(path: Sequence[Point]) -> Iterator[UnitEdge]:
    for (x1, y1), (x2, y2) in zip(path, path[1:]):
        if y1 == y2:
            for x in range(min(x1, x2), max(x1, x2)):
                yield ((x, y1), (x + 1, y1))
        else:
            for y in range(min(y1, y2), max(y1, y2)):
                yield ((x1, y), (x1, y + 1))


def grid_points(path: Sequence[Point]) -> Iterator[Point]:
    if len(path) == 1:
        yield path[0]
        return
    for e in unit_edges(path):
        yield e[0]
        yield e[1]


def bend_count(path: Sequence[Point]) -> int:
    """Direction changes along the path."""
    return max(len(normalize(path)) - 2, 0)


def is_simple(path: Sequence[Point]) -> bool:
    seen: set[Point] = set()
    count = 0
    for e in unit_edges(path):
        count += 1
        seen.update(e)
    return len(path) == 1 or len(seen) == count + 1


@dataclass(frozen=True)
class HookedLShape:
    """ell goes down to the corner, down goes right from it; top and right are hooks."""

    ell: Segment
    down: Segment
    top: Segment | None = None
    right: Segment | None = None

    @property
    def corner(self) -> Point:
        return self.ell[1]

    def to_path(self) -> Path:
        pts: list[Point] = []
        if self.top is not None:
            pts.append(self.top[0])
        pts += [self.ell[0], self.ell[1], self.down[1]]
        if self.right is not None:
            pts.append(self.right[1])
        return normalize(pts)

    @classmethod
    def from_path(cls, path: Sequence[Point]) -> "HookedLShape":
        """Parse a polyline; segments are stored in traversal order t, ell, d, r."""
        path = normalize(path)
        for pts in (path, tuple(reversed(path))):
            shape = _parse_hooked(pts)
            if shape is not None:
                return shape
        raise GeometryError(f"path {path} is not a hooked L-shape")


def _parse_hooked(pts: Sequence[Point]) -> HookedLShape | None:
    segs = segments(pts)
    if not 2 <= len(segs) <= 4:
        return None
    for k in range(len(segs) - 1):
        (a, b), (c, d) = segs[k], segs[k + 1]
        if not (a[0] == b[0] and b[1] < a[1] and c[1] == d[1] and d[0] > c[0]):
            continue
        before, after = segs[:k], segs[k + 2 :]
        if len(before) > 1 or len(after) > 1:
            continue
        top = right = None
        if before:
            if before[0][0][1] != before[0][1][1]:
                continue
            top = before[0]
        if after:
            if after[0][0][0] != after[0][1][0]:
                continue
            right = after[0]
        return HookedLShape(segs[k], segs[k + 1], top, right)
    return None


def is_hooked_l_shape(path: Sequence[Point]) -> bool:
    try:
        HookedLShape.from_path(path)
    except GeometryError:
        return False
    return True


@dataclass(frozen=True, eq=False)
class EpgRepresentation:
    paths: Mapping[int, Path]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "paths", {v: normalize(p) for v, p in sorted(self.paths.items())}
        )

    @cached_property
    def ownership(self) -> dict[UnitEdge, frozenset[int]]:
        own: dict[UnitEdge, set[int]] = defaultdict(set)
        for v, path in self.paths.items():
            for e in unit_edges(path):
                own[e].add(v)
        return {e: frozenset(s) for e, s in own.items()}

    def owners(self, e: UnitEdge) -> frozenset[int]:
        return self.ownership.get(e, frozenset())

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self.paths)

    def __getitem__(self, v: int) -> Path:
        return self.paths[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EpgRepresentation):
            return NotImplemented
        return dict(self.paths) == dict(other.paths)

    def __repr__(self) -> str:
        return f"EpgRepresentation({len(self.paths)} paths)"

    def replace(self, updates: Mapping[int, Sequence[Point]]) -> "EpgRepresentation":
        paths = dict(self.paths)
        paths.update({v: tuple(p) for v, p in updates.items()})
        return EpgRepresentation(paths)

    def without(self, vertices: Iterable[int]) -> "EpgRepresentation":
        drop = set(vertices)
        return EpgRepresentation({v: p for v, p in self.paths.items() if v not in drop})

    def map_points(self, f) -> "EpgRepresentation":
        return EpgRepresentation({v: tuple(f(pt) for pt in p) for v, p in self.paths.items()})

    def bbox(self) -> tuple[int, int, int, int]:
        """(min_x, min_y, max_x, max_y)."""
        xs = [pt[0] for p in self.paths.values() for pt in p]
        ys = [pt[1] for p in self.paths.values() for pt in p]
        if not xs:
            raise GeometryError("empty representation has no bounding box")
        return min(xs), min(ys), max(xs), max(ys)

    def max_ownership(self) -> int:
        return max((len(s) for s in self.ownership.values()), default=0)


def transpose(rep: EpgRepresentation) -> EpgRepresentation:
    """Reflect in the diagonal x = y; swaps the roles of ell/d and t/r."""
    return rep.map_points(lambda pt: (pt[1], pt[0]))


def insert_empty_columns(rep: EpgRepresentation, at: int, count: int) -> EpgRepresentation:
    """Shift every point with x >= at right by ``count``; crossing segments stretch."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return rep
    return rep.map_points(lambda pt: (pt[0] + count, pt[1]) if pt[0] >= at else pt)


def insert_empty_rows(rep: EpgRepresentation, at: int, count: int) -> EpgRepresentation:
    if count < 0:
        raise ValueError("count must be non-negative")
    if count == 0:
        return rep
    return rep.map_points(lambda pt: (pt[0], pt[1] + count) if pt[1] >= at else pt)


def translate_paths(
    rep: EpgRepresentation,
    vertices: Iterable[int],
    dx: int = 0,
    dy: int = 0,
    *,
    at_x: int | None = None,
    at_y: int | None = None,
) -> EpgRepresentation:
    """Move points of the given paths; segments incident to moved points stretch.

    With ``at_x`` only points on the vertical line x = at_x move (and with
    ``at_y`` only points on the horizontal line y = at_y), which is how a
    side of a path slides while its neighbouring segments lengthen.
    Without either, whole paths are translated.
    """
    if dx == 0 and dy == 0:
        return rep
    updates = {}
    for v in vertices:
        new = []
        for x, y in rep.paths[v]:
            hit = (at_x is None or x == at_x) and (at_y is None or y == at_y)
            new.append((x + dx, y + dy) if hit else (x, y))
        try:
            path = normalize(new)
        except GeometryError as exc:
            raise ConnectivityBroken(f"moving path of {v} broke it: {exc}") from exc
        if not is_simple(path):
            raise ConnectivityBroken(f"moving path of {v} made it self-overlapping")
        updates[v] = path
    return rep.replace(updates)


@dataclass(frozen=True)
class BoundaryHexagon:
    """Orthogonal hexagon with the south-west corner cut away at ``reflex``.

    Degenerates when reflex.y == top (no left side) or reflex.x == right
    (no bottom side).
    """

    left: int
    bottom: int
    right: int
    top: int
    reflex: Point

    @property
    def corners(self) -> tuple[Point, ...]:
        rx, ry = self.reflex
        return (
            (self.left, self.top),
            (self.right, self.top),
            (self.right, self.bottom),
            (rx, self.bottom),
            (rx, ry),
            (self.left, ry),
        )

    def contains(self, pt: Point) -> bool:
        x, y = pt
        if not (self.left <= x <= self.right and self.bottom <= y <= self.top):
            return False
        return not (x < self.reflex[0] and y < self.reflex[1])


def boundary(rep: EpgRepresentation) -> BoundaryHexagon:
    """The hexagon spanned by the representation's outline.

    The reflex corner sits at the lowest covered point of the left side and
    the leftmost covered point of the bottom side.
    """
    pts = {pt for p in rep.paths.values() for pt in grid_points(p)}
    if not pts:
        raise NotHexagonal("empty representation")
    left = min(x for x, _ in pts)
    right = max(x for x, _ in pts)
    bottom = min(y for _, y in pts)
    top = max(y for _, y in pts)
    ry = min(y for x, y in pts if x == left)
    rx = min(x for x, y in pts if y == bottom)
    hexagon = BoundaryHexagon(left, bottom, right, top, (rx, ry))
    if rx < left or ry > top or (rx == left and ry != bottom and ry != top):
        raise NotHexagonal(f"outline is not an orthogonal hexagon: {hexagon}")
    outside = [pt for pt in pts if not hexagon.contains(pt)]
    if outside:
        raise NotHexagonal(f"points {sorted(outside)[:3]} lie in the cut-away quadrant")
    return hexagon
