"""Text graph format and JSON representation format.

Graph files hold either rotation lines ``v: w1 w2 ... wk`` (counterclockwise
order at v) or edge lines ``u v``.  Optional extras::

    outer: v1 v2 v3        # clockwise outer face
    [augment]              # following edge lines are augmentation edges
    u v

Labels are arbitrary tokens mapped to dense integer ids in order of first
appearance.  ``#`` starts a comment.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

from .graph import EmbeddedGraph, build_embedded_graph
from .model import EpgRepresentation, Point


class FormatError(ValueError):
    pass


@dataclass
class SymbolTable:
    ids: dict[str, int] = field(default_factory=dict)

    def id(self, label: str) -> int:
        if label not in self.ids:
            self.ids[label] = len(self.ids)
        return self.ids[label]

    @property
    def names(self) -> dict[int, str]:
        return {i: s for s, i in self.ids.items()}

    def lookup(self, label) -> int:
        label = str(label)
        if label not in self.ids:
            raise FormatError(f"unknown vertex {label!r}")
        return self.ids[label]


@dataclass
class GraphInput:
    graph: EmbeddedGraph
    symbols: SymbolTable
    augmentation: list[tuple[int, int]] | None = None

    @property
    def names(self) -> dict[int, str]:
        return self.symbols.names


def parse_graph(text: str) -> GraphInput:
    sym = SymbolTable()
    rotation: dict[int, list[int]] = {}
    edges: list[tuple[int, int]] = []
    aug: list[tuple[int, int]] | None = None
    outer: list[int] | None = None
    in_aug = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower() == "[augment]":
            in_aug = True
            aug = []
            continue
        if ":" in line:
            head, rest = line.split(":", 1)
            head = head.strip()
            toks = rest.split()
            if head.lower() == "outer":
                outer = [sym.id(t) for t in toks]
                continue
            if in_aug:
                raise FormatError(f"line {lineno}: rotation line inside [augment]")
            v = sym.id(head)
            if v in rotation:
                raise FormatError(f"line {lineno}: second rotation for {head!r}")
            rotation[v] = [sym.id(t) for t in toks]
            continue
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"line {lineno}: expected 'u v' or 'v: w1 w2 ...'")
        e = (sym.id(toks[0]), sym.id(toks[1]))
        (aug if in_aug else edges).append(e)  # type: ignore[union-attr]
    if rotation and edges:
        raise FormatError("mixes rotation lines and edge lines")
    if rotation:
        undirected = {tuple(sorted((u, w))) for u, ns in rotation.items() for w in ns}
        g = build_embedded_graph(sorted(undirected), rotation=rotation, outer_face=outer)
    else:
        g = build_embedded_graph(edges, outer_face=outer)
    return GraphInput(g, sym, aug)


def read_graph(path: str | Path) -> GraphInput:
    return parse_graph(Path(path).read_text())


def format_graph(
    g: EmbeddedGraph,
    names: Mapping[int, str] | None = None,
    augmentation: Sequence[Sequence[int]] | None = None,
) -> str:
    name = (lambda v: names[v]) if names else str
    lines = [f"outer: {' '.join(name(v) for v in g.outer_face)}"]
    for v in g.vertices:
        lines.append(f"{name(v)}: {' '.join(name(w) for w in g.rotation[v])}")
    if augmentation:
        lines.append("[augment]")
        lines += [f"{name(u)} {name(v)}" for u, v in augmentation]
    return "\n".join(lines) + "\n"


def rep_to_dict(rep: EpgRepresentation, names: Mapping[int, str] | None = None) -> dict:
    out = []
    for v, path in rep.paths.items():
        segs = [[p[0], p[1], q[0], q[1]] for p, q in zip(path, path[1:])]
        out.append({"id": names[v] if names else v, "segments": segs})
    return {"vertices": out}


def segments_from_dict(
    data: Mapping, symbols: SymbolTable | None = None
) -> dict[int, list[list[int]]]:
    """Raw per-vertex segment lists, exactly as stored."""
    try:
        entries = data["vertices"]
    except (KeyError, TypeError) as exc:
        raise FormatError("representation JSON needs a 'vertices' list") from exc
    out: dict[int, list[list[int]]] = {}
    for entry in entries:
        try:
            raw_id = entry["id"]
            v = symbols.lookup(raw_id) if symbols is not None else int(raw_id)
            segs = [[int(c) for c in s] for s in entry["segments"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad vertex entry {entry!r}") from exc
        if any(len(s) != 4 for s in segs):
            raise FormatError(f"segments of {raw_id!r} need four coordinates")
        out[v] = segs
    return out


def rep_from_dict(data: Mapping, symbols: SymbolTable | None = None) -> EpgRepresentation:
    paths: dict[int, tuple[Point, ...]] = {}
    for v, segs in segments_from_dict(data, symbols).items():
        if not segs:
            raise FormatError(f"vertex {v} has no segments")
        pts = [(segs[0][0], segs[0][1])]
        for x1, y1, x2, y2 in segs:
            if (x1, y1) != pts[-1]:
                raise FormatError(f"segments of vertex {v} do not form a path")
            pts.append((x2, y2))
        paths[v] = tuple(pts)
    return EpgRepresentation(paths)


def dumps_rep(rep: EpgRepresentation, names: Mapping[int, str] | None = None) -> str:
    return json.dumps(rep_to_dict(rep, names), indent=1)


def loads_rep(text: str, symbols: SymbolTable | None = None) -> EpgRepresentation:
    return rep_from_dict(json.loads(text), symbols)
