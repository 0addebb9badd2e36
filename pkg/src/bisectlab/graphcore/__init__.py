"""Graph representation, graph6 I/O, canonical forms and enumeration."""

from .canon import are_isomorphic, canonical_code, canonical_form, canonical_labelling, isomorphism
from .enumerate import connected_cubic, enumerate_cubic
from .graph import CubicGraph, GraphError, SimpleGraph, as_cubic, disjoint_union
from .graph6 import Graph6Error, parse_graph6, read_graph6_lines, write_graph6
from .structure import (
    EdgeColouring3,
    component_signature,
    has_perfect_matching,
    is_proper_edge_colouring,
    proper_3_edge_colouring,
    vertex_connectivity,
)

__all__ = [
    "CubicGraph",
    "EdgeColouring3",
    "Graph6Error",
    "GraphError",
    "SimpleGraph",
    "are_isomorphic",
    "as_cubic",
    "canonical_code",
    "canonical_form",
    "canonical_labelling",
    "component_signature",
    "connected_cubic",
    "disjoint_union",
    "enumerate_cubic",
    "has_perfect_matching",
    "is_proper_edge_colouring",
    "isomorphism",
    "parse_graph6",
    "proper_3_edge_colouring",
    "read_graph6_lines",
    "vertex_connectivity",
    "write_graph6",
]
