"""Recursive construction of B3-EPG representations of 2-sided near-triangulations.

Every intermediate drawing represents T - (a_1, b_1) and keeps the following
shape, with y growing upward:

* P(b_1) is the top side and P(a_1) the right side of the drawing;
* the left side carries ell(b_2) .. ell(b_q) from top to bottom and the
  bottom side carries d(a_2) .. d(a_p) from right to left, all exclusively;
* the drawing is a hexagon whose south-west corner is cut away; the cut's
  vertical side lies on ell(a_p) and its horizontal side on d(b_q).

Column and row insertions never change which paths share a grid edge, so
all stretching is done with them.
"""

from __future__ import annotations

import logging
from typing import Callable, Sequence

from .decomposition import (
    ApRemoval,
    BqRemoval,
    Split,
    TwoSidedNearTriangulation,
    classify_step,
)
from .model import (
    EpgRepresentation,
    GeometryError,
    HookedLShape,
    Point,
    boundary,
    insert_empty_columns,
    insert_empty_rows,
    normalize,
    translate_paths,
    transpose,
    unit_edges,
)
from .verify import audit_invariants

log = logging.getLogger(__name__)


class InvariantViolation(RuntimeError):
    pass


AuditHook = Callable[[EpgRepresentation, TwoSidedNearTriangulation], None]


def build_base_triangle(a: Sequence[int], b: Sequence[int]) -> EpgRepresentation:
    """Drawing of a triangle minus (a_1, b_1) for the labelings (a1, a2 | b1) and (a1 | b2, b1)."""
    if len(a) == 2 and len(b) == 1:
        a1, a2 = a
        (b1,) = b
        return EpgRepresentation(
            {
                b1: ((0, 2), (3, 2)),
                a1: ((3, 0), (3, 2)),
                a2: ((2, 2), (1, 2), (1, 0), (3, 0), (3, 1)),
            }
        )
    if len(a) == 1 and len(b) == 2:
        return transpose(build_base_triangle(b, a))
    raise ValueError(f"a triangle is labeled p=2,q=1 or p=1,q=2, not p={len(a)},q={len(b)}")


def _corner_y_on_left(rep: EpgRepresentation, v: int, left: int) -> int:
    return min(y for x, y in rep.paths[v] if x == left)


def merge_ap_removal(
    rep_prime: EpgRepresentation,
    a: Sequence[int],
    b: Sequence[int],
    new_b: Sequence[int],
) -> EpgRepresentation:
    """Add a_p = a[-1] to the drawing of T' (a-side a[:-1], b-side b + new_b)."""
    a, b, new_b = tuple(a), tuple(b), tuple(new_b)
    hexagon = boundary(rep_prime)
    left = hexagon.left
    sx, sy = hexagon.reflex[0], hexagon.bottom
    y_top = _corner_y_on_left(rep_prime, b[-1], left)

    rep = translate_paths(rep_prime, b, dx=-2, at_x=left)
    rep = translate_paths(rep, new_b, dx=-1, at_x=left)
    # up the exclusive edge above s, left along the bottom, up to d(b_q), one step right
    path = ((sx, sy + 1), (sx, sy), (left - 1, sy), (left - 1, y_top), (left, y_top))
    return rep.replace({a[-1]: path})


def merge_bq_removal(
    rep_prime: EpgRepresentation,
    a: Sequence[int],
    b: Sequence[int],
    new_a: Sequence[int],
) -> EpgRepresentation:
    """Mirror image of the a_p-removal across the diagonal."""
    return transpose(merge_ap_removal(transpose(rep_prime), b, a, new_a))


def _without_hook(path: Sequence[Point], hook: str) -> HookedLShape:
    shape = HookedLShape.from_path(path)
    if hook == "top":
        return HookedLShape(shape.ell, shape.down, None, shape.right)
    return HookedLShape(shape.ell, shape.down, shape.top, None)


def _check_contained(outer: Sequence[Point], inner: Sequence[Point], v: int) -> None:
    if not set(unit_edges(inner)) <= set(unit_edges(outer)):
        raise InvariantViolation(f"copies of {v} do not fuse into one path")


def merge_split(
    rep_prime: EpgRepresentation,
    rep_a: EpgRepresentation,
    rep_b: EpgRepresentation,
    a: Sequence[int],
    b: Sequence[int],
    step: Split,
) -> EpgRepresentation:
    """Fit the drawings of T_a and T_b into the drawing of T'."""
    a, b = tuple(a), tuple(b)
    x, i, j = step.x, step.i, step.j
    ai, bj, ap, bq = a[i - 1], b[j - 1], a[-1], b[-1]

    # T_a: x is its b_1, so t(a_p) only realizes (a_p, x); redirect it leftward
    hex_a = boundary(rep_a)
    ox, oy = hex_a.reflex
    shape = _without_hook(rep_a.paths[ap], "top")
    if shape.ell[0] != (ox, oy):
        raise InvariantViolation(f"ell({ap}) does not reach the reflex corner of T_a")
    new_ap = normalize(((hex_a.left, oy),) + shape.to_path())
    rep_a = rep_a.replace({ap: new_ap})

    # T_b: x is its a_1; drop ell(x) below the reflex corner and r(b_q)
    hex_b = boundary(rep_b)
    cx, cy = hex_b.reflex
    px = rep_b.paths[x]
    rep_b = rep_b.replace(
        {
            x: ((cx, cy), (cx, max(pt[1] for pt in px))),
            bq: _without_hook(rep_b.paths[bq], "right").to_path(),
        }
    )
    if boundary(rep_b).bottom != cy:
        raise InvariantViolation("T_b has content below the reflex corner")

    # interleave exclusive and shared stretches of d(b_j)
    hp = boundary(rep_prime)
    hb = boundary(rep_b)
    w_prime = hp.reflex[0] - hp.left
    w_b = hb.right - hb.left
    rep_prime = insert_empty_columns(rep_prime, hp.left + 1, w_b - 1)
    rep_b = insert_empty_columns(rep_b, hb.right, w_prime - 1)

    # same for ell(x)
    hp = boundary(rep_prime)
    hb = boundary(rep_b)
    h_prime = hp.reflex[1] - hp.bottom
    h_b = hb.top - hb.bottom
    rep_prime = insert_empty_rows(rep_prime, hp.bottom + 1, h_b - 1)
    rep_b = insert_empty_rows(rep_b, hb.top, h_prime - 1)

    # widen d(x) in T' or the drawing of T_a until they have equal width
    hp = boundary(rep_prime)
    ha = boundary(rep_a)
    xc, bot = hp.reflex[0], hp.bottom
    x_ai = min(px_ for px_, py_ in rep_prime.paths[ai] if py_ == bot)
    gap = x_ai - xc
    w_a = ha.right - ha.left
    if gap < w_a:
        rep_prime = insert_empty_columns(rep_prime, xc + 1, w_a - gap)
    elif gap > w_a:
        rep_a = insert_empty_columns(rep_a, ha.reflex[0] + 1, gap - w_a)
    hp = boundary(rep_prime)
    ha = boundary(rep_a)
    xc, yr, bot = hp.reflex[0], hp.reflex[1], hp.bottom
    x_ai = min(px_ for px_, py_ in rep_prime.paths[ai] if py_ == bot)

    # lower d(a_2) .. d(a_i) and ell(a_1) by the height of T_a
    h_a = ha.top - ha.bottom
    rep_prime = translate_paths(rep_prime, a[:i], dy=-h_a, at_y=bot)

    hb = boundary(rep_b)
    rep_b = rep_b.map_points(lambda pt: (pt[0] + xc - hb.right, pt[1] + bot - hb.bottom))
    rep_a = rep_a.map_points(lambda pt: (pt[0] + xc - ha.left, pt[1] + bot - ha.top))
    hb, ha = boundary(rep_b), boundary(rep_a)
    if (hb.left, hb.top) != (hp.left, yr) or ha.right != x_ai:
        raise InvariantViolation("child drawings do not fit into the parent drawing")

    for v, child in ((ai, rep_a), (x, rep_a), (x, rep_b), (bj, rep_b)):
        _check_contained(rep_prime.paths[v], child.paths[v], v)

    paths = dict(rep_prime.paths)
    paths.update({v: pth for v, pth in rep_a.paths.items() if v not in (ai, x)})
    paths.update({v: pth for v, pth in rep_b.paths.items() if v not in (bj, x)})
    # d(b_q) runs on to the reflex corner of T_a, sharing its last edge with x and a_p
    new_bq = list(paths[bq])
    end_x = ha.reflex[0]
    if new_bq[-1] == (xc, bot):
        new_bq.append((end_x, bot))
    elif new_bq[0] == (xc, bot):
        new_bq.insert(0, (end_x, bot))
    else:
        raise InvariantViolation(f"d({bq}) does not end at the corner of x")
    paths[bq] = normalize(new_bq)
    return EpgRepresentation(paths)


def add_a1b1_edge(rep: EpgRepresentation, a1: int, b1: int) -> EpgRepresentation:
    """Give P(a_1) and P(b_1) one shared grid edge just outside the top-right corner."""
    hexagon = boundary(rep)
    R, T, B = hexagon.right, hexagon.top, hexagon.bottom
    pa = normalize(rep.paths[a1])
    pb = normalize(rep.paths[b1])
    if sorted(pa) != [(R, B), (R, T)] or max(pb) != (R, T) or len(pb) != 2:
        raise InvariantViolation("P(a_1) and P(b_1) are not the right and top sides")
    return rep.replace(
        {
            a1: ((R, B), (R, T + 1), (R + 1, T + 1), (R + 1, T)),
            b1: (min(pb), (R + 1, T), (R + 1, T + 1)),
        }
    )


def delete_vertices(rep: EpgRepresentation, keep) -> EpgRepresentation:
    keep = set(keep)
    return EpgRepresentation({v: p for v, p in rep.paths.items() if v in keep})


def strict_audit(rep: EpgRepresentation, t: TwoSidedNearTriangulation) -> None:
    report = audit_invariants(rep, t)
    if not report.passed:
        raise InvariantViolation(
            f"invariant failed for a={t.a} b={t.b}: " + "; ".join(report.failures())
        )


def build_representation(
    t: TwoSidedNearTriangulation,
    audit: bool | AuditHook = False,
) -> EpgRepresentation:
    """Representation of T - (a_1, b_1).

    ``audit=True`` checks the full invariant after every merge and raises
    InvariantViolation on the first failure; a callable is invoked instead.
    Recursion depth is at most the number of vertices.
    """
    hook: AuditHook | None
    if audit is True:
        hook = strict_audit
    elif callable(audit):
        hook = audit
    else:
        hook = None
    return _build(t, hook)


def _build(t: TwoSidedNearTriangulation, hook: AuditHook | None) -> EpgRepresentation:
    if t.n == 3:
        rep = build_base_triangle(t.a, t.b)
    else:
        step = classify_step(t)
        try:
            if isinstance(step, ApRemoval):
                rep = merge_ap_removal(_build(step.t_prime, hook), t.a, t.b, step.new_b)
            elif isinstance(step, BqRemoval):
                rep = merge_bq_removal(_build(step.t_prime, hook), t.a, t.b, step.new_a)
            else:
                rep = merge_split(
                    _build(step.t_prime, hook),
                    _build(step.t_a, hook),
                    _build(step.t_b, hook),
                    t.a,
                    t.b,
                    step,
                )
        except GeometryError as exc:
            raise InvariantViolation(f"merge failed for a={t.a} b={t.b}: {exc}") from exc
        log.debug("%s on n=%d -> %d paths", type(step).__name__, t.n, len(rep.paths))
    if hook is not None:
        hook(rep, t)
    return rep
