"""Anti-van der Waerden numbers of Cartesian products of trees and forests.

aw(G, 3) is the smallest palette size r such that every exact r-coloring
of G contains a rainbow 3-term arithmetic progression.  For products of
nontrivial trees the value is always 3 or 4 and is decided in closed form
from the factors' peripheral structure; this package computes it, builds
and verifies the extremal colorings, and cross-checks everything against
an independent exhaustive search.
"""

from .classify import (
    AwResult,
    ComponentAw,
    ForestAwResult,
    RULE_3PERIPHERAL,
    RULE_ODD,
    RULE_P2,
    RULE_STRONG,
    RULE_VALUES,
    RULE_WEAK,
    TrivialFactorError,
    aw_forest_product,
    aw_tree_product,
    explain,
    forest_components,
    rule_predicates,
)
from .coloring import (
    APTriple,
    BLUE,
    COLOR_NAMES,
    Coloring,
    DiametralReport,
    DiametralWitness,
    GREEN,
    RED,
    diametral_coloring,
    find_diametral_witness,
    find_rainbow_3ap,
    find_rainbow_in_graph,
    iter_3aps,
    iter_3aps_graph,
    shortest_trichromatic_path,
    verify_diametral_coloring,
)
from .crosscheck import (
    CrosscheckRecord,
    crosscheck_pair,
    crosscheck_sweep,
    sweep_pairs,
    tree_catalog,
    write_jsonl,
)
from .graphs import (
    DistanceMatrix,
    DomainError,
    Graph,
    GraphFormatError,
    UNREACHABLE,
    all_pairs_distances,
    bfs_distances,
    center_and_peripheral,
    connected_components,
    format_edge_list,
    induced_subgraph,
    is_forest,
    is_isometric_embedding,
    is_tree,
    load_edge_list,
    parse_edge_list,
    path_graph,
    star_graph,
    to_dot,
)
from .oracle import (
    BruteForceResult,
    EXHAUSTED,
    FOUND,
    INCONCLUSIVE,
    OracleOutcome,
    SearchBudget,
    brute_force_aw3,
    exists_rainbow_free_exact_coloring,
)
from .product import (
    ProductGraph,
    cartesian_product,
    copy_of_factor,
    product_distance,
    product_labels,
)
from .trees import (
    KIND_3PERIPHERAL,
    KIND_STRONG,
    KIND_TRIVIAL,
    KIND_WEAK,
    NotATreeError,
    PeripheralWitness,
    TreeClass,
    canonical_form,
    classify_tree,
    enumerate_trees,
    find_n_peripheral,
    is_n_peripheral,
    tree_minus,
    tree_plus,
)

__version__ = "0.1.0"
