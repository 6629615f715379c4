"""Orthogonal colourings of Cayley graphs.

Constructions for cycles, circulants on p^2 vertices, Paley graphs, and
Hamming graphs; a shared verifier; and an exact backtracking oracle.  All
heavy lifting happens in the compiled extension; this package re-exports its
public surface.
"""

from orthocolour._core import (
    BudgetExceeded,
    Colouring,
    Graph,
    LatinSquare,
    NoApplicableConstruction,
    SearchResult,
    SearchStatus,
    VerificationFailure,
    are_orthogonal,
    cartesian_product,
    circulant,
    colour_circulant,
    colourings_from_json,
    colourings_to_json,
    complement,
    complete,
    cycle,
    exact_orthochromatic,
    find_violation,
    four_cube_pair,
    four_cube_power_pair,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    hamming,
    hamming_even_pair,
    is_proper,
    latin_are_orthogonal,
    orthogonal_cycle_family,
    orthogonal_cycle_pair,
    orthogonal_latin_pair,
    orthogonal_lower_bound,
    paley_colourings,
    paley_graph,
    search_orthogonal,
)

__all__ = [
    "BudgetExceeded",
    "Colouring",
    "Graph",
    "LatinSquare",
    "NoApplicableConstruction",
    "SearchResult",
    "SearchStatus",
    "VerificationFailure",
    "are_orthogonal",
    "cartesian_product",
    "circulant",
    "colour_circulant",
    "colourings_from_json",
    "colourings_to_json",
    "complement",
    "complete",
    "cycle",
    "exact_orthochromatic",
    "find_violation",
    "four_cube_pair",
    "four_cube_power_pair",
    "graph_from_json",
    "graph_to_dot",
    "graph_to_json",
    "hamming",
    "hamming_even_pair",
    "is_proper",
    "latin_are_orthogonal",
    "orthogonal_cycle_family",
    "orthogonal_cycle_pair",
    "orthogonal_latin_pair",
    "orthogonal_lower_bound",
    "paley_colourings",
    "paley_graph",
    "search_orthogonal",
]
