"""Spanning-tree leaf invariants, robust connectivity and surface embeddings."""

from .bounds import (
    BoundCurve,
    bound_curve,
    component_bound,
    curve_check,
    epsilon,
    epsilon_floor,
    epsilon_table,
    kappa_genus_bound,
    leaf_fraction_floor,
)
from .embedding import (
    EmbeddedGraph,
    FaceStructure,
    augment_with_component_vertices,
    cut_components,
    edge_maximal_completion,
    euler_genus,
    format_embedding,
    from_faces,
    is_edge_maximal_embedding,
    m_value,
    parse_embedding,
    trace_faces,
)
from .exact import (
    LeafCertificate,
    SolveReport,
    build_certificate,
    check_certificate,
    ell,
    kappa_rho,
    leaf_feasible,
    max_induced_forest,
    max_leaf_number,
)
from .graph import (
    Graph,
    GraphError,
    SizeLimitError,
    Tree,
    components_after_removal,
    format_graph,
    is_connected,
    oracle_max_leaf_in_R,
    parse_graph,
    spanning_tree_any,
    tree_bipartition,
    vertex_connectivity,
)
from .greedy import GreedyTrace, PreconditionError, greedy_reduce, theorem5_bound_holds, theorem6_pipeline

__version__ = "0.1.0"
