"""SVG, ASCII and matplotlib views of a representation.

Shared grid edges are drawn as parallel strokes, one per owner, spaced
``OFFSET`` grid units apart.  SVG and ASCII output is deterministic.
"""

from __future__ import annotations

from pathlib import Path as FsPath
from typing import Mapping
from xml.sax.saxutils import escape

from .model import EpgRepresentation

OFFSET = 0.15
SCALE = 40
MARGIN = 1.0

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#393b79", "#637939",
    "#8c6d31", "#843c39", "#7b4173", "#3182bd",
)


def color(index: int) -> str:
    return PALETTE[index % len(PALETTE)]


def _label(v: int, names: Mapping[int, str] | None) -> str:
    return names[v] if names and v in names else str(v)


def shared_strokes(rep: EpgRepresentation):
    """(vertex, (x1, y1, x2, y2)) strokes for edges with two or more owners, offset per layer."""
    out = []
    for (p, q), owners in sorted(rep.ownership.items()):
        k = len(owners)
        if k < 2:
            continue
        horizontal = p[1] == q[1]
        for layer, v in enumerate(sorted(owners)):
            d = (layer - (k - 1) / 2) * OFFSET
            if horizontal:
                out.append((v, (p[0], p[1] + d, q[0], q[1] + d)))
            else:
                out.append((v, (p[0] + d, p[1], q[0] + d, q[1])))
    return out


def _fmt(z: float) -> str:
    return f"{z:.2f}".rstrip("0").rstrip(".")


def render_svg(rep: EpgRepresentation, names: Mapping[int, str] | None = None) -> str:
    verts = rep.vertices
    if verts:
        x0, y0, x1, y1 = rep.bbox()
    else:
        x0 = y0 = x1 = y1 = 0
    legend_w = 3.0 if verts else 0.0
    width = (x1 - x0 + 2 * MARGIN + legend_w) * SCALE
    height = (max(y1 - y0, 0.5 * len(verts)) + 2 * MARGIN) * SCALE

    def sx(x: float) -> str:
        return _fmt((x - x0 + MARGIN) * SCALE)

    def sy(y: float) -> str:
        return _fmt((y1 - y + MARGIN) * SCALE)

    idx = {v: i for i, v in enumerate(verts)}
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        '<g fill="none" stroke-width="3" stroke-linecap="round" stroke-linejoin="round">',
    ]
    for v in verts:
        pts = " ".join(f"{sx(x)},{sy(y)}" for x, y in rep.paths[v])
        lab = escape(_label(v, names), {'"': "&quot;"})
        lines.append(f'<polyline class="path" data-vertex="{lab}" stroke="{color(idx[v])}" points="{pts}"/>')
    for v, (ax, ay, bx, by) in shared_strokes(rep):
        lines.append(
            f'<line class="shared" stroke="{color(idx[v])}" stroke-width="2" '
            f'x1="{sx(ax)}" y1="{sy(ay)}" x2="{sx(bx)}" y2="{sy(by)}"/>'
        )
    lines.append("</g>")
    if verts:
        lx = (x1 - x0 + 2 * MARGIN) * SCALE
        lines.append('<g class="legend" font-family="monospace" font-size="12">')
        for i, v in enumerate(verts):
            ly = (MARGIN + 0.5 * i) * SCALE
            lines.append(
                f'<rect x="{_fmt(lx)}" y="{_fmt(ly - 8)}" width="10" height="10" fill="{color(i)}"/>'
                f'<text x="{_fmt(lx + 14)}" y="{_fmt(ly + 1)}">{escape(_label(v, names))}</text>'
            )
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def glyphs(rep: EpgRepresentation, names: Mapping[int, str] | None = None) -> dict[int, str]:
    """One letter per vertex: its label if that is a single unused letter, else the next free one.

    Digits are reserved for owner counts.
    """
    pool = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ"
    out: dict[int, str] = {}
    used: set[str] = set()
    for v in rep.vertices:
        c = _label(v, names)[:1]
        if len(_label(v, names)) != 1 or c in used or not c.isalpha():
            c = next(ch for ch in pool if ch not in used)
        used.add(c)
        out[v] = c
    return out


def render_ascii(rep: EpgRepresentation, names: Mapping[int, str] | None = None) -> str:
    """Text drawing at twice the grid resolution, top row first.

    Grid point (x, y) sits at cell (2x, 2y) and a unit edge at the cell
    between its endpoints.  An edge owned by one path shows that path's
    glyph; a shared edge shows its owner count.  Points show ``+`` where
    several paths meet and the glyph otherwise.
    """
    if not rep.vertices:
        return "\n"
    g = glyphs(rep, names)
    x0, y0, x1, y1 = rep.bbox()
    w, h = 2 * (x1 - x0) + 1, 2 * (y1 - y0) + 1
    grid = [[" "] * w for _ in range(h)]
    at_point: dict[tuple[int, int], set[int]] = {}
    for (p, q), owners in rep.ownership.items():
        cx, cy = p[0] + q[0] - 2 * x0, p[1] + q[1] - 2 * y0
        grid[cy][cx] = g[next(iter(owners))] if len(owners) == 1 else str(len(owners))
        for pt in (p, q):
            at_point.setdefault(pt, set()).update(owners)
    for (x, y), owners in at_point.items():
        grid[2 * (y - y0)][2 * (x - x0)] = g[next(iter(owners))] if len(owners) == 1 else "+"
    rows = ["".join(r).rstrip() for r in reversed(grid)]
    legend = [f"{g[v]} = {_label(v, names)}" for v in rep.vertices]
    return "\n".join(rows + [""] + legend) + "\n"


def render_figure(
    rep: EpgRepresentation,
    out: str | FsPath,
    names: Mapping[int, str] | None = None,
    title: str | None = None,
) -> None:
    """Write a raster or vector figure with matplotlib; format follows the file suffix."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    idx = {v: i for i, v in enumerate(rep.vertices)}
    for v in rep.vertices:
        xs, ys = zip(*rep.paths[v])
        ax.plot(xs, ys, color=color(idx[v]), lw=2.5, label=_label(v, names), solid_capstyle="round")
    for v, (ax_, ay, bx, by) in shared_strokes(rep):
        ax.plot([ax_, bx], [ay, by], color=color(idx[v]), lw=1.5)
    ax.set_aspect("equal")
    ax.grid(True, lw=0.3)
    if rep.vertices:
        ax.legend(loc="center left", bbox_to_anchor=(1.0, 0.5), fontsize=8)
    if title:
        ax.set_title(title)
    fig.savefig(out, bbox_inches="tight", dpi=120)
    plt.close(fig)
