"""subsym: subdivision graphs, exact permutation groups, and
(local) s-arc / s-distance transitivity checking."""

from .graphs import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    Metrics,
    SArc,
    UNREACHED,
    bfs_distances,
    distance_sphere,
    enumerate_s_arcs,
    girth,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_hoffman_singleton,
    make_petersen,
    metrics,
    random_connected_graph,
    s_arcs_from,
)
from .transforms import (
    Component,
    DeltaReport,
    MalformedSubdivisionError,
    SubdivisionGraph,
    delta2_witness,
    delta_of,
    distance_two_graph,
    line_graph,
    reconstruct,
    reconstruct_from_ambient,
    subdivide,
    subdivision_distance,
    subdivision_distance_matrix,
)
from .perms import Perm, PermError
from .groups import (
    Action,
    NotAnAutomorphismError,
    PermGroup,
    StabilizerChain,
    alternating_group,
    cycle_half_dihedral,
    cyclic_group,
    derived_subgroup,
    dihedral_group,
    from_generators,
    induced_edge_action,
    induced_subdivision_action,
    is_graph_automorphism,
    normal_closure,
    orbit,
    orbit_partition,
    orbit_transversal,
    pair_set_action,
    pgammal_2_8,
    pgl_2_8,
    point_action,
    random_subgroups,
    stabilizer_edge,
    stabilizer_point,
    symmetric_group,
    trivial_group,
    tuple_action,
    validate_automorphisms,
    wreath_s2,
)
from .autgrp import (
    BudgetExceededError,
    automorphism_group,
    find_isomorphism,
    is_isomorphic,
)
from .symmetry import (
    PropertyKind,
    TransitivityReport,
    Witness,
    is_arc_transitive,
    is_distance_transitive,
    is_locally_arc_transitive,
    is_locally_distance_transitive,
    is_locally_s_arc_transitive,
    is_locally_s_distance_transitive,
    is_s_arc_transitive,
    is_s_distance_transitive,
    is_vertex_transitive,
    neighborhood_two_transitive,
    verify_witness,
)
from .theorems import (
    CheckOutcome,
    CorpusConfig,
    check_bipartite_conditions,
    check_classification_row,
    check_distance_formula,
    check_edge_stabilizer_conditions,
    check_girth5_three_arc,
    check_girth_bound,
    check_known_exception,
    check_large_s_cycles,
    check_local_arc_equivalence,
    check_local_distance_equivalence,
    check_reconstruction,
    check_small_s_equivalences,
    is_k_transitive,
    run_corpus,
    summarize,
)
from .formats import (
    FormatError,
    read_generators,
    read_graph,
    read_graph_with_parts,
    read_subdivision,
    write_generators,
    write_graph,
    write_json_lines,
    write_subdivision,
)

__version__ = "0.1.0"
