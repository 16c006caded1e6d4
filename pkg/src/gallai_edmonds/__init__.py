"""Maximum matchings, the Gallai-Edmonds decomposition and a brute-force checker for both."""

from .decomposition import (
    Decomposition,
    DeficiencyProfile,
    VerificationReport,
    check_decomposition,
    compute_D,
    deficiency_profile,
    gallai_edmonds,
    hall_condition,
    is_tutte_berge,
    tutte_berge_formula_check,
    verify_ge_conditions,
)
from .errors import GraphError, InvariantError, MinorUndefinedError, ParseError, SizeGuardError
from .graph import (
    BipartiteMinor,
    ComponentSplit,
    Graph,
    VertexSet,
    bipartite_minor,
    component_split,
    delete_vertices,
    vertex_set,
)
from .matching import (
    Matching,
    bipartite_maximum_matching,
    exposed_vertices,
    has_perfect_matching,
    is_factor_critical,
    maximum_matching,
)

__all__ = [
    "BipartiteMinor",
    "ComponentSplit",
    "Decomposition",
    "DeficiencyProfile",
    "Graph",
    "GraphError",
    "InvariantError",
    "Matching",
    "MinorUndefinedError",
    "ParseError",
    "SizeGuardError",
    "VerificationReport",
    "VertexSet",
    "bipartite_maximum_matching",
    "bipartite_minor",
    "check_decomposition",
    "component_split",
    "compute_D",
    "deficiency_profile",
    "delete_vertices",
    "exposed_vertices",
    "gallai_edmonds",
    "hall_condition",
    "has_perfect_matching",
    "is_factor_critical",
    "is_tutte_berge",
    "maximum_matching",
    "tutte_berge_formula_check",
    "verify_ge_conditions",
    "vertex_set",
]
