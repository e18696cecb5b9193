import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from b3epg.model import (
    ConnectivityBroken,
    EpgRepresentation,
    GeometryError,
    HookedLShape,
    NotHexagonal,
    bend_count,
    boundary,
    insert_empty_columns,
    insert_empty_rows,
    is_hooked_l_shape,
    is_simple,
    normalize,
    translate_paths,
    transpose,
    unit_edges,
)


def test_normalize_drops_collinear_and_duplicates():
    assert normalize([(0, 0), (0, 0), (1, 0), (2, 0), (2, 3)]) == ((0, 0), (2, 0), (2, 3))


def test_normalize_rejects_diagonal():
    with pytest.raises(GeometryError):
        normalize([(0, 0), (1, 1)])


def test_unit_edges_count():
    assert len(list(unit_edges(((0, 0), (3, 0), (3, 2))))) == 5


def test_bend_count():
    assert bend_count(((0, 0), (2, 0))) == 0
    assert bend_count(((0, 2), (0, 0), (2, 0))) == 1
    assert bend_count(((-1, 2), (0, 2), (0, 0), (2, 0), (2, 1))) == 3


def test_is_simple_detects_overlap():
    assert is_simple(((0, 0), (2, 0), (2, 1)))
    assert not is_simple(((0, 0), (2, 0), (1, 0)))


def test_hooked_l_parse_full():
    path = ((-1, 3), (0, 3), (0, 0), (4, 0), (4, 2))
    shape = HookedLShape.from_path(path)
    assert shape.corner == (0, 0)
    assert shape.top == ((-1, 3), (0, 3))
    assert shape.right == ((4, 0), (4, 2))
    assert shape.to_path() == normalize(path)


def test_hooked_l_parse_reversed_path():
    path = ((4, 2), (4, 0), (0, 0), (0, 3))
    shape = HookedLShape.from_path(path)
    assert shape.top is None and shape.right == ((4, 0), (4, 2))


def test_top_hook_may_point_right():
    assert is_hooked_l_shape(((2, 3), (0, 3), (0, 0), (4, 0)))


@pytest.mark.parametrize(
    "path",
    [
        ((0, 0), (3, 0)),  # straight
        ((0, 0), (0, 3), (3, 3)),  # Gamma, corner at top-left
        ((0, 0), (3, 0), (3, 3)),  # corner at bottom-right
        ((0, 3), (0, 0), (3, 0), (3, 2), (4, 2)),  # five segments
    ],
)
def test_not_hooked_l(path):
    assert not is_hooked_l_shape(path)


def small_rep():
    return EpgRepresentation(
        {
            0: ((0, 2), (3, 2)),
            1: ((3, 0), (3, 2)),
            2: ((2, 2), (1, 2), (1, 0), (3, 0), (3, 1)),
        }
    )


def test_ownership():
    rep = small_rep()
    assert rep.owners(((1, 2), (2, 2))) == {0, 2}
    assert rep.owners(((3, 0), (3, 1))) == {1, 2}
    assert rep.max_ownership() == 2


def test_transpose_involution():
    rep = small_rep()
    assert transpose(transpose(rep)) == rep


def test_boundary_of_base_triangle():
    h = boundary(small_rep())
    assert (h.left, h.bottom, h.right, h.top) == (0, 0, 3, 2)
    assert h.reflex == (1, 2)


def test_boundary_rejects_point_in_cut_corner():
    rep = EpgRepresentation(
        {0: ((0, 4), (5, 4)), 1: ((5, 0), (5, 4)), 2: ((3, 0), (5, 0)), 3: ((0, 3), (0, 4))}
    )
    assert boundary(rep).reflex == (3, 3)
    with pytest.raises(NotHexagonal):
        boundary(rep.replace({4: ((1, 1), (2, 1))}))


def test_insert_columns_stretches_crossing_segments():
    rep = insert_empty_columns(small_rep(), 2, 3)
    assert rep.paths[0] == ((0, 2), (6, 2))
    assert rep.owners(((4, 2), (5, 2))) == {0, 2}


def test_insert_negative_count_rejected():
    with pytest.raises(ValueError):
        insert_empty_rows(small_rep(), 0, -1)


def test_translate_side_of_path():
    rep = translate_paths(small_rep(), [0], dx=-2, at_x=0)
    assert rep.paths[0] == ((-2, 2), (3, 2))


def test_translate_that_folds_path_rejected():
    rep = EpgRepresentation({0: ((0, 0), (3, 0), (3, 1), (1, 1))})
    with pytest.raises(ConnectivityBroken):
        translate_paths(rep, [0], dy=-1, at_y=1)


def test_rep_equality_ignores_orientation_of_input():
    a = EpgRepresentation({0: ((0, 0), (1, 0), (2, 0))})
    b = EpgRepresentation({0: ((0, 0), (2, 0))})
    assert a == b


def test_bbox_of_empty_rep():
    with pytest.raises(GeometryError):
        EpgRepresentation({}).bbox()


# -- properties --------------------------------------------------------------


@st.composite
def orthogonal_paths(draw):
    x, y = draw(st.integers(-5, 5)), draw(st.integers(-5, 5))
    pts = [(x, y)]
    horizontal = draw(st.booleans())
    for _ in range(draw(st.integers(1, 4))):
        step = draw(st.integers(1, 4)) * draw(st.sampled_from([-1, 1]))
        x, y = (x + step, y) if horizontal else (x, y + step)
        pts.append((x, y))
        horizontal = not horizontal
    return pts


@st.composite
def reps(draw):
    paths = draw(st.lists(orthogonal_paths(), min_size=1, max_size=6))
    return EpgRepresentation(dict(enumerate(paths)))


def sharing_pairs(rep):
    return {
        (u, v)
        for owners in rep.ownership.values()
        for u in owners
        for v in owners
        if u < v
    }


@settings(max_examples=150, deadline=None)
@given(reps(), st.integers(-8, 8), st.integers(0, 4), st.booleans())
def test_row_and_column_insertion_preserve_sharing(rep, at, count, rows):
    f = insert_empty_rows if rows else insert_empty_columns
    assert sharing_pairs(f(rep, at, count)) == sharing_pairs(rep)


@settings(max_examples=150, deadline=None)
@given(reps())
def test_transpose_preserves_sharing_and_bends(rep):
    t = transpose(rep)
    assert sharing_pairs(t) == sharing_pairs(rep)
    assert all(bend_count(t.paths[v]) == bend_count(rep.paths[v]) for v in rep.paths)


@settings(max_examples=150, deadline=None)
@given(orthogonal_paths())
def test_normalize_idempotent_and_edge_preserving(path):
    n = normalize(path)
    assert normalize(n) == n
    assert set(unit_edges(n)) == set(unit_edges(path))
