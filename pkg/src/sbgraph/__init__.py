"""Signed bi-graphs, Z_k colorings and Hajós-like derivations."""

from .core import Edge, GraphError, Sign, SignedBiGraph, find_isomorphism, is_isomorphic, reduce_multigraph
from .coloring import Coloring, chromatic_number, exists_k_coloring, is_valid_coloring

__all__ = [
    "Coloring",
    "Edge",
    "GraphError",
    "Sign",
    "SignedBiGraph",
    "chromatic_number",
    "exists_k_coloring",
    "find_isomorphism",
    "is_isomorphic",
    "is_valid_coloring",
    "reduce_multigraph",
]
