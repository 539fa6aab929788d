"""Effective-resistance analysis and greedy total-resistance rewiring."""

from .bounds import (
    BoundParams,
    jacobian_bound_adjacency,
    jacobian_bound_resistance,
    spectral_gap_jacobian_bound,
    total_jacobian_bound,
)
from .errors import (
    BipartiteGraphError,
    CrossComponentError,
    DisconnectedGraphError,
    EdgeListParseError,
    IllConditionedError,
    InfeasibleSearchError,
    ReswireError,
)
from .graph import (
    Graph,
    adjacency,
    boundary_matrix,
    build_graph,
    components,
    degrees,
    from_edge_list,
    is_bipartite,
    laplacian,
    normalized_adjacency,
    normalized_laplacian,
    to_edge_list,
)
from .rewiring import (
    RewirePlan,
    brute_force_optimal,
    delta_table,
    gtr,
    nonmonotonicity_witness,
    random_baseline,
    rewire,
    same_component_non_edges,
)
from .spectral import (
    Spectrum,
    biharmonic_distance_sq,
    effective_resistance,
    effective_resistance_flow,
    effective_resistance_normalized,
    mu_bound,
    regularized_inverse,
    resistance_series_truncated,
    rmax,
    spectral_gap,
    spectrum,
    total_resistance,
)
from .state import ResistanceState

__version__ = "0.1.0"
