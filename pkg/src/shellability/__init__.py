"""Exact toolkit for shellability, partitionability and sequential
Cohen-Macaulayness of small simplicial complexes, with obstruction search."""

from .complexes import (
    CanonicalForm,
    CapacityError,
    DimensionError,
    FacetAbsorbedWarning,
    InvalidFaceError,
    PurityError,
    SimplicialComplex,
    all_faces,
    brute_force_isomorphic,
    face,
    face_vertices,
    format_complex,
    from_facets,
    full_simplex,
    parse_complex,
    random_complex,
    two_disjoint_edges,
)
from .homology import (
    BoundaryMatrix,
    HomologyGroup,
    boundary_matrix,
    euler_characteristic,
    homology_groups,
    reduced_homology,
    smith_normal_form,
)
from .shelling import (
    ShellingCertificate,
    ShellingDecision,
    fast_paths_agree,
    is_shellable,
    shellable_by_search,
    verify_shelling,
)
from .partition import (
    PartitionCertificate,
    PartitionDecision,
    band_complex,
    is_partitionable,
    verify_partition,
)
from .cohen_macaulay import CMReport, CMWitness, is_cohen_macaulay, is_sequentially_cm
from .properties import IMPLIES, LINK_PRESERVING, PropertyKind, satisfies
from .obstruction import (
    ObstructionReport,
    hereditary_via_obstructions,
    hereditary_via_strong_obstructions,
    is_hereditary,
    is_obstruction,
    is_obstruction_via_deletions,
    is_strong_obstruction,
    minimal_failing_restriction,
    obstruction_report,
    strong_obstruction_by_definition,
)
from .graphs import (
    Graph,
    cycle_graph,
    flag_round_trip,
    graph_from_edges,
    independence_complex,
    independence_cycle_report,
    is_flag,
    maximal_independent_sets,
    minimal_nonfaces,
    non_edge_graph,
)
from .enumeration import (
    MAX_OBSTRUCTION_VERTICES,
    EnumerationTask,
    dim2_shellability_obstructions,
    edge_minimal,
    enumerate_complexes,
    enumerate_obstructions,
    generic_obstructions,
    triangle_cores,
    verify_coincidence,
    verify_edge_addition_closure,
)
from .catalog import (
    CATALOG_SCHEMA,
    CatalogEntry,
    build_entries,
    catalog_document,
    catalog_json,
    core_type,
    obstruction_atlas_entries,
    triangle_core,
    write_atlas,
)

__version__ = "0.1.0"
