"""B3-EPG representations of 4-connected planar triangulations.

Every vertex becomes a grid path with at most three bends, and two vertices
are adjacent exactly when their paths share a grid edge.
"""

from .augment import augment, represent_planar_no_sep_triangle
from .builder import add_a1b1_edge, build_base_triangle, build_representation, delete_vertices
from .decomposition import TwoSidedNearTriangulation, classify_step, label_two_sided, make_two_sided
from .graph import (
    EmbeddedGraph,
    build_embedded_graph,
    find_separating_triangles,
    is_four_connected_triangulation,
    is_near_triangulation,
)
from .model import EpgRepresentation, boundary, insert_empty_columns, insert_empty_rows
from .verify import audit_invariants, intersection_graph, verify_representation, verify_segments

__all__ = [
    "EmbeddedGraph",
    "EpgRepresentation",
    "TwoSidedNearTriangulation",
    "add_a1b1_edge",
    "audit_invariants",
    "augment",
    "boundary",
    "build_base_triangle",
    "build_embedded_graph",
    "build_representation",
    "classify_step",
    "delete_vertices",
    "find_separating_triangles",
    "insert_empty_columns",
    "insert_empty_rows",
    "intersection_graph",
    "is_four_connected_triangulation",
    "is_near_triangulation",
    "label_two_sided",
    "make_two_sided",
    "represent_planar_no_sep_triangle",
    "verify_representation",
    "verify_segments",
]
