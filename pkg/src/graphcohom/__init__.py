"""Cohomology of the complex of symmetrized vector graphs, computed exactly.

The coboundary itself is ``graphcohom.coboundary.coboundary``; the submodule
keeps that name, so the function is not re-exported here.
"""

from .coboundary import coboundary_alt, homotopy, reduced_coboundary, symbol
from .cohomology import (
    CohomologyReport,
    ResourceBoundExceeded,
    cohomology_dim,
    enumerate_graphs,
    independence_certificate,
    solve_coboundary,
)
from .combination import GraphCombination, format_combination, is_symmetric, parse_combination, sym_orbit, symmetrize
from .generators import MonomialSpec, line, line_generator, predicted_basis, wheel, wheel_generator
from .graph import VectorGraph, canonicalize, format_graph, parse_graph

__version__ = "0.1.0"

__all__ = [
    "CohomologyReport",
    "GraphCombination",
    "MonomialSpec",
    "ResourceBoundExceeded",
    "VectorGraph",
    "canonicalize",
    "coboundary_alt",
    "cohomology_dim",
    "enumerate_graphs",
    "format_combination",
    "format_graph",
    "homotopy",
    "independence_certificate",
    "is_symmetric",
    "line",
    "line_generator",
    "parse_combination",
    "parse_graph",
    "predicted_basis",
    "reduced_coboundary",
    "solve_coboundary",
    "sym_orbit",
    "symbol",
    "symmetrize",
    "wheel",
    "wheel_generator",
]
