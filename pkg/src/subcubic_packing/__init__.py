"""Exact tools for S-packing edge-colorings of subcubic graphs."""

from .graph import Graph, GraphError, conflict_pairs, contract_class, edge_distance, is_bridgeless, structure_stats
from .packing import (BudgetExhausted, EdgeColoring, PackingSpec, SolveOptions, chromatic_index, max_exact2_set,
                      sdr, solve, strong_index, verify)
from .polynomials import PolySpec, SparsePoly, build_poly, coeff, lemma9_coeffs, p_closed_form

__version__ = "0.1.0"

__all__ = [
    "Graph", "GraphError", "conflict_pairs", "contract_class", "edge_distance", "is_bridgeless",
    "structure_stats", "BudgetExhausted", "EdgeColoring", "PackingSpec", "SolveOptions",
    "chromatic_index", "max_exact2_set", "sdr", "solve", "strong_index", "verify", "PolySpec",
    "SparsePoly", "build_poly", "coeff", "lemma9_coeffs", "p_closed_form",
]
