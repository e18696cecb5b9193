"""Command line interface: build, verify, augment, render.

Graph arguments are files in the text graph format or ``@name`` for a
bundled graph (``@octahedron``, ``@icosahedron``, ``@cube``, ``@wheel5``, ...).
Every failure prints ``{"error": ..., "message": ...}`` on stdout and exits 1.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
import time
from pathlib import Path
from typing import Sequence

from . import fixtures
from .augment import AugmentationError, represent_planar_no_sep_triangle
from .builder import add_a1b1_edge, build_representation
from .decomposition import DecompositionError, TwoSidedNearTriangulation, label_two_sided
from .graph import EmbeddedGraph, GraphError, edge_key
from .io import FormatError, GraphInput, SymbolTable, dumps_rep, parse_graph, read_graph, rep_from_dict, segments_from_dict
from .model import EpgRepresentation, GeometryError
from .render import render_ascii, render_figure, render_svg
from .verify import verify_representation, verify_segments

log = logging.getLogger("b3epg")


class CliError(Exception):
    def __init__(self, kind: str, message: str, details: dict | None = None):
        super().__init__(message)
        self.kind = kind
        self.details = details or {}


def _builtin(name: str) -> GraphInput:
    named = {
        "triangle": fixtures.triangle,
        "k4": fixtures.k4,
        "octahedron": fixtures.octahedron,
        "icosahedron": fixtures.icosahedron,
        "cube": fixtures.cube,
    }
    aug = None
    if name in named:
        g = named[name]()
    elif m := re.fullmatch(r"wheel(\d+)", name):
        g = fixtures.wheel(int(m.group(1)))
    elif m := re.fullmatch(r"double_wheel(\d+)", name):
        g = fixtures.double_wheel(int(m.group(1)))
    elif m := re.fullmatch(r"cycle(\d+)", name):
        g = fixtures.cycle(int(m.group(1)))
    else:
        raise CliError("UnknownGraph", f"no bundled graph named {name!r}")
    if name == "cube":
        aug = [tuple(e) for e in fixtures.CUBE_AUGMENTATION]
    sym = SymbolTable({str(v): v for v in g.vertices})
    return GraphInput(g, sym, aug)


def load_graph(arg: str) -> GraphInput:
    if arg.startswith("@"):
        return _builtin(arg[1:])
    if arg == "-":
        return parse_graph(sys.stdin.read())
    return read_graph(arg)


def _label_outer(gi: GraphInput, outer: str | None) -> TwoSidedNearTriangulation:
    g = gi.graph
    if outer is None:
        return label_two_sided(g, len(g.outer_face) - 1)
    parts = [s.strip() for s in outer.split(",")]
    if len(parts) != 3:
        raise CliError("BadOuter", "--outer takes a_1,b_1,p")
    a1, b1 = gi.symbols.lookup(parts[0]), gi.symbols.lookup(parts[1])
    try:
        split = int(parts[2])
    except ValueError as exc:
        raise CliError("BadOuter", f"split point {parts[2]!r} is not an integer") from exc
    face = _face_with(g, b1, a1)
    return label_two_sided(g.with_outer_face(face), split, start=a1)


def _face_with(g: EmbeddedGraph, u: int, v: int) -> tuple[int, ...]:
    for f in g.faces:
        k = len(f)
        if any(f[s] == u and f[(s + 1) % k] == v for s in range(k)):
            return f
    raise CliError("BadOuter", "b_1 and a_1 are not consecutive on a face")


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_rep(rep: EpgRepresentation, names, args) -> None:
    fmt = args.format
    if fmt == "json":
        _write(dumps_rep(rep, names), args.output)
    elif fmt == "svg":
        _write(render_svg(rep, names), args.output)
    elif fmt == "ascii":
        _write(render_ascii(rep, names), args.output)
    if getattr(args, "figure", None):
        render_figure(rep, args.figure, names)


def cmd_build(args) -> int:
    gi = load_graph(args.graph)
    t = _label_outer(gi, args.outer)
    start = time.perf_counter()
    rep = build_representation(t, audit=args.audit)
    if not args.no_a1b1:
        rep = add_a1b1_edge(rep, t.a[0], t.b[0])
    elapsed = time.perf_counter() - start
    report = verify_representation(rep, t.expected_edges(with_a1b1=not args.no_a1b1))
    if not report.passed:
        raise CliError("SelfCheckFailed", "built representation failed verification", report.to_dict(gi.names))
    _emit_rep(rep, gi.names, args)
    summary = report.to_dict(gi.names)
    summary.update(
        a=[gi.names[v] for v in t.a],
        b=[gi.names[v] for v in t.b],
        seconds=round(elapsed, 4),
        audit=bool(args.audit),
    )
    if args.report:
        Path(args.report).write_text(json.dumps(summary, indent=1) + "\n")
    log.info("built %d paths, max bends %d", len(rep.paths), report.max_bends)
    return 0


def cmd_verify(args) -> int:
    gi = load_graph(args.graph)
    data = json.loads(Path(args.rep).read_text())
    segs = segments_from_dict(data, gi.symbols)
    expected = set(gi.graph.edges)
    if args.no_a1b1:
        if not args.outer:
            raise CliError("BadOuter", "--no-a1b1 needs --outer to name a_1 and b_1")
        t = _label_outer(gi, args.outer)
        expected.discard(edge_key(t.a[0], t.b[0]))
    missing = set(gi.graph.vertices) - set(segs)
    report = verify_segments(segs, expected)
    out = report.to_dict(gi.names)
    out["vertices_without_path"] = sorted(gi.names[v] for v in missing)
    if missing:
        out["pass"] = False
    _write(json.dumps(out, indent=1), args.output)
    return 0 if out["pass"] else 1


def cmd_augment(args) -> int:
    gi = load_graph(args.graph)
    rep = represent_planar_no_sep_triangle(gi.graph, gi.augmentation, seed=args.seed, audit=args.audit)
    report = verify_representation(rep, gi.graph.edges)
    if not report.passed:
        raise CliError("SelfCheckFailed", "pipeline output failed verification", report.to_dict(gi.names))
    _emit_rep(rep, gi.names, args)
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_dict(gi.names), indent=1) + "\n")
    return 0


def cmd_render(args) -> int:
    data = json.loads(Path(args.rep).read_text())
    entries = data.get("vertices") if isinstance(data, dict) else None
    if not isinstance(entries, list) or not all(isinstance(e, dict) and "id" in e for e in entries):
        raise FormatError("representation JSON needs a 'vertices' list of objects with an 'id'")
    sym = SymbolTable()
    for entry in entries:
        sym.id(str(entry["id"]))
    rep = rep_from_dict({"vertices": [dict(e, id=str(e["id"])) for e in entries]}, sym)
    names = sym.names
    if args.format == "png":
        if not args.output:
            raise CliError("MissingOutput", "--format png needs -o")
        render_figure(rep, args.output, names)
        return 0
    _emit_rep(rep, names, args)
    return 0


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="b3epg", description="B3-EPG representations of planar graphs")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common_out(sp, formats=("json", "svg", "ascii")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("-o", "--output", help="write here instead of stdout")
        sp.add_argument("--figure", help="also save a matplotlib figure (png, pdf, svg by suffix)")

    b = sub.add_parser("build", help="represent a 4-connected triangulation or 2-sided near-triangulation")
    b.add_argument("graph")
    b.add_argument("--outer", help="a_1,b_1,p: outer face through b_1 -> a_1, first p vertices on side a")
    b.add_argument("--no-a1b1", action="store_true", help="leave the edge (a_1, b_1) unrepresented")
    b.add_argument("--audit", action="store_true", help="check all invariants at every recursion level")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--report", help="write the verification report JSON here")
    common_out(b)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check a representation JSON against a graph")
    v.add_argument("rep")
    v.add_argument("graph")
    v.add_argument("--outer")
    v.add_argument("--no-a1b1", action="store_true")
    v.add_argument("-o", "--output")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("augment", help="represent a plane graph without separating triangles")
    a.add_argument("graph")
    a.add_argument("--seed", type=int, default=0, help="seed for the greedy augmentation fallback")
    a.add_argument("--audit", action="store_true")
    a.add_argument("--report")
    common_out(a)
    a.set_defaults(func=cmd_augment)

    r = sub.add_parser("render", help="draw a representation JSON")
    r.add_argument("rep")
    common_out(r, ("svg", "ascii", "png"))
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        err = {"error": exc.kind, "message": str(exc), **({"report": exc.details} if exc.details else {})}
    except (GraphError, DecompositionError, AugmentationError, FormatError, GeometryError, RuntimeError, OSError, ValueError, KeyError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
    sys.stdout.write(json.dumps(err) + "\n")
    return 1


if __name__ == "__main__":
    sys.exit(main())
