"""Packing triangles and other small patterns in structured graph classes.

Polynomial solvers for interval, permutation-derived, complete multipartite,
bipartite permutation, cobipartite, co-k-partite, distance-hereditary and
k-modular graphs, together with exact exponential oracles and a reduction
from 3-dimensional matching showing square packing is hard on bipartite
graphs.
"""

from .bipperm import c4_packing_bipperm, merged_order
from .cobipartite import CobipartiteModel, divergence, paper_characterization, triangle_partition_cobipartite
from .colored_perm import ColoredPermutation, colored_partition, colored_partition_bruteforce
from .copartite import CoPartiteModel, triangle_partition_co_kpartite
from .dh import DHLeaf, DHNode, build_dh_tree, dh_tree_from_construction, triangle_packing_dh, validate_dh_tree
from .errors import (
    FormatError,
    InstanceTooLarge,
    InvalidCertificate,
    InvalidMatching,
    InvalidModel,
    InvalidTree,
    MalformedPacking,
    MalformedSequence,
    NotAThresholdPacking,
    TripackError,
)
from .gen import GenConfig
from .graph import (
    KR,
    SQUARE,
    TRIANGLE,
    BipartiteStrongModel,
    CliqueArrangement,
    Graph,
    IntervalModel,
    Packing,
    PermutationModel,
    check_arrangement,
    check_strong_ordering,
    complement,
    consecutive_arrangement,
    graph_from_intervals,
    graph_from_permutation,
    is_partition,
    verify_packing,
)
from .interval import (
    max_disjoint_maximal_cliques,
    reduce_small_cliques,
    triangle_packing_interval_exp,
    triangle_partition_interval,
)
from .modular import (
    KModularCertificate,
    MLeaf,
    MNode,
    is_k_modular,
    modular_decomposition,
    triangle_packing_modular,
    validate_modular_tree,
)
from .multipartite import MultipartiteSpec, triangle_packing_multipartite, triangle_partition_multipartite
from .oracle import (
    OracleResult,
    count_partitionable_permutations,
    max_pattern_packing_exact,
    min_clique_transversal_exact,
    pattern_partition_exact,
)
from .reduction import GadgetGraph, ThreeDMInstance, extract_matching, lift_solution, reduce

__version__ = "0.1.0"

__all__ = [
    "BipartiteStrongModel",
    "CliqueArrangement",
    "CoPartiteModel",
    "CobipartiteModel",
    "ColoredPermutation",
    "DHLeaf",
    "DHNode",
    "FormatError",
    "GadgetGraph",
    "GenConfig",
    "Graph",
    "InstanceTooLarge",
    "IntervalModel",
    "InvalidCertificate",
    "InvalidMatching",
    "InvalidModel",
    "InvalidTree",
    "KModularCertificate",
    "KR",
    "MLeaf",
    "MNode",
    "MalformedPacking",
    "MalformedSequence",
    "MultipartiteSpec",
    "NotAThresholdPacking",
    "OracleResult",
    "Packing",
    "PermutationModel",
    "SQUARE",
    "TRIANGLE",
    "ThreeDMInstance",
    "TripackError",
    "build_dh_tree",
    "c4_packing_bipperm",
    "check_arrangement",
    "check_strong_ordering",
    "colored_partition",
    "colored_partition_bruteforce",
    "complement",
    "consecutive_arrangement",
    "count_partitionable_permutations",
    "dh_tree_from_construction",
    "divergence",
    "extract_matching",
    "graph_from_intervals",
    "graph_from_permutation",
    "is_k_modular",
    "is_partition",
    "lift_solution",
    "max_disjoint_maximal_cliques",
    "max_pattern_packing_exact",
    "merged_order",
    "min_clique_transversal_exact",
    "modular_decomposition",
    "paper_characterization",
    "pattern_partition_exact",
    "reduce",
    "reduce_small_cliques",
    "triangle_packing_dh",
    "triangle_packing_interval_exp",
    "triangle_packing_modular",
    "triangle_packing_multipartite",
    "triangle_partition_co_kpartite",
    "triangle_partition_cobipartite",
    "triangle_partition_interval",
    "triangle_partition_multipartite",
    "validate_dh_tree",
    "validate_modular_tree",
    "verify_packing",
]
