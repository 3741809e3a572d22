"""Maximum-cardinality matching in general undirected graphs by blossom
shrinking, with a brute-force oracle and odd-set-cover maximality
certificates."""

from .assembly import (
    AugmentingPath,
    FoundBlossom,
    find_path_or_blossom,
    longest_disjoint_prefixes,
)
from .certificate import (
    ContractionStep,
    MaximalityCertificate,
    VerificationReport,
    capacity,
    cover_capacity,
    covers,
    format_certificate,
    is_odd_set_cover,
    parse_certificate,
    verify_certificate,
    verify_maximum,
)
from .contraction import (
    ContractionMap,
    cycle_neighbour,
    cycle_segment,
    fresh_vertex,
    is_blossom,
    is_odd_cycle,
    lift_path,
    prefix_until,
    quotient_graph,
    splice_cycle,
)
from .forest import (
    InvariantViolation,
    Label,
    Parity,
    SearchResult,
    SearchState,
    build_odd_set_cover,
    check_search_invariants,
    find_alternating_paths,
    follow,
    run_search,
)
from .graph import (
    Edge,
    Vertex,
    adjacency,
    component_as_path,
    component_edges,
    connected_component,
    connected_components,
    degree,
    edge,
    edges_of_path,
    graph,
    is_path,
    is_simple,
    neighbours,
    vertices,
)
from .matching import (
    augment,
    is_alternating,
    is_augmenting_path,
    is_matching,
    symmetric_difference,
)
from .oracle import (
    MAX_ORACLE_EDGES,
    MAX_ORACLE_VERTICES,
    OracleLimitError,
    brute_force_augmenting_path,
    brute_force_maximum_matching,
)
from .solver import certify_maximality, find_augmenting_path, find_maximum_matching

__all__ = [
    "AugmentingPath",
    "ContractionMap",
    "ContractionStep",
    "Edge",
    "FoundBlossom",
    "InvariantViolation",
    "Label",
    "MAX_ORACLE_EDGES",
    "MAX_ORACLE_VERTICES",
    "MaximalityCertificate",
    "OracleLimitError",
    "Parity",
    "SearchResult",
    "SearchState",
    "VerificationReport",
    "Vertex",
    "adjacency",
    "augment",
    "brute_force_augmenting_path",
    "brute_force_maximum_matching",
    "build_odd_set_cover",
    "capacity",
    "certify_maximality",
    "check_search_invariants",
    "component_as_path",
    "component_edges",
    "connected_component",
    "connected_components",
    "cover_capacity",
    "covers",
    "cycle_neighbour",
    "cycle_segment",
    "degree",
    "edge",
    "edges_of_path",
    "find_alternating_paths",
    "find_augmenting_path",
    "find_maximum_matching",
    "find_path_or_blossom",
    "follow",
    "format_certificate",
    "fresh_vertex",
    "graph",
    "is_alternating",
    "is_augmenting_path",
    "is_blossom",
    "is_matching",
    "is_odd_cycle",
    "is_odd_set_cover",
    "is_path",
    "is_simple",
    "lift_path",
    "longest_disjoint_prefixes",
    "neighbours",
    "parse_certificate",
    "prefix_until",
    "quotient_graph",
    "run_search",
    "splice_cycle",
    "symmetric_difference",
    "verify_certificate",
    "verify_maximum",
    "vertices",
]
