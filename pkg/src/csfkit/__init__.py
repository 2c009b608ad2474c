"""Exact chromatic symmetric functions of simple graphs, power-sum basis."""

from .csf import (
    DEFAULT_MAX_EDGES,
    ExtractedReport,
    PowerSumPolynomial,
    chromatic_symmetric_function,
    count_proper_colorings,
    csf_equal,
    extract_invariants,
    specialize,
)
from .errors import (
    CsfkitError,
    GraphParseError,
    InconsistentDataError,
    NotATreeError,
    ResourceLimitError,
    TwoCentroidError,
)
from .graph import (
    CycleStats,
    Graph,
    StructuralReport,
    canonical_tree_code,
    centroid,
    cycle_stats,
    enumerate_trees,
    parse_graph,
    pi_type,
    rooted_code,
    structural_report,
    vertex_weights,
)
from .pairgen import P1Check, RootedTree, build_pair, glue_rooted_trees, verify_p1
from .partitions import (
    Partition,
    compare_balanced,
    parse_partition_key,
    partition_key,
    rearrange,
)
from .rewrite import (
    GraphCombination,
    combination_csf,
    path_split,
    triangle_split,
    wedge_split,
)
from .treedata import (
    ThetaTable,
    attracts,
    attracts_from_theta,
    forest_type_counts,
    leaf_edges_from_pairs,
    reconstruct_from_pairs,
    reconstruct_from_theta,
    singletons_from_pairs,
    theta,
    theta_tables,
)

__all__ = [
    "CsfkitError",
    "CycleStats",
    "DEFAULT_MAX_EDGES",
    "ExtractedReport",
    "Graph",
    "GraphCombination",
    "GraphParseError",
    "InconsistentDataError",
    "NotATreeError",
    "P1Check",
    "Partition",
    "PowerSumPolynomial",
    "ResourceLimitError",
    "RootedTree",
    "StructuralReport",
    "ThetaTable",
    "TwoCentroidError",
    "attracts",
    "attracts_from_theta",
    "build_pair",
    "canonical_tree_code",
    "centroid",
    "chromatic_symmetric_function",
    "combination_csf",
    "compare_balanced",
    "count_proper_colorings",
    "csf_equal",
    "cycle_stats",
    "enumerate_trees",
    "extract_invariants",
    "forest_type_counts",
    "glue_rooted_trees",
    "leaf_edges_from_pairs",
    "parse_graph",
    "parse_partition_key",
    "partition_key",
    "path_split",
    "pi_type",
    "rearrange",
    "reconstruct_from_pairs",
    "reconstruct_from_theta",
    "rooted_code",
    "singletons_from_pairs",
    "specialize",
    "structural_report",
    "theta",
    "theta_tables",
    "triangle_split",
    "verify_p1",
    "vertex_weights",
    "wedge_split",
]
