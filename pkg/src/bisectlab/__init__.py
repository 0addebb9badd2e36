"""Bisections, Wormald colourings and linear-forest decompositions of cubic graphs."""

from .ando import (
    find_ando,
    find_k_bisection_iso_linear_forests,
    is_ando,
    is_strong_ando,
    minimal_k_iso_linear_forests,
    reduce_to_max_degree_2,
)
from .arboricity import (
    TwoForestDecomposition,
    find_two_colouring_max4_edge_components,
    find_two_isomorphic_k_linear_forests,
    find_two_k_linear_forests,
)
from .bisection import B, W, find_k_bisection, two_bisection_from_3ec, verify_k_bisection
from .budget import BudgetExceeded, Deadline
from .cyperm import CpgSpec, PetersenException, build_cpg, build_gp, two_bisection_cpg
from .graphcore import CubicGraph, SimpleGraph, canonical_code, parse_graph6, write_graph6
from .wormald import (
    EdgeTwoColouring,
    find_pair_removed_strong_wormald,
    find_strong_wormald,
    find_wormald,
    verify_strong_wormald,
    verify_wormald,
)

__version__ = "0.1.0"

__all__ = [
    "B",
    "W",
    "BudgetExceeded",
    "CpgSpec",
    "CubicGraph",
    "Deadline",
    "EdgeTwoColouring",
    "PetersenException",
    "SimpleGraph",
    "TwoForestDecomposition",
    "build_cpg",
    "build_gp",
    "canonical_code",
    "find_ando",
    "find_k_bisection",
    "find_k_bisection_iso_linear_forests",
    "find_pair_removed_strong_wormald",
    "find_strong_wormald",
    "find_two_colouring_max4_edge_components",
    "find_two_isomorphic_k_linear_forests",
    "find_two_k_linear_forests",
    "find_wormald",
    "is_ando",
    "is_strong_ando",
    "minimal_k_iso_linear_forests",
    "parse_graph6",
    "reduce_to_max_degree_2",
    "two_bisection_cpg",
    "two_bisection_from_3ec",
    "verify_k_bisection",
    "verify_strong_wormald",
    "verify_wormald",
    "write_graph6",
]
