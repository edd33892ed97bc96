"""Exact toolkit for edge ideals and Stanley-Reisner rings: homological
invariants (depth, dimension, projective dimension, height), Cohen-Macaulay
and almost-Cohen-Macaulay classification, connectivity in codimension k,
staircase-ideal closed forms, and bounded family verification of the
classification statements.
"""

from .errors import DomainError, FormatError, ResourceError
from .graphs import (
    BipartitePartition,
    FerrersPartition,
    Graph,
    PureOrder,
    bipartition,
    check_pure_order,
    closed_neighborhood,
    complete_bipartite,
    delete_closed_neighborhood,
    ferrers_graph,
    find_pure_order,
    graph_to_edgelist,
    is_unmixed,
    maximal_independent_sets,
    minimal_vertex_covers,
    parse_graph,
    parse_graph_document,
)
from .complexes import (
    FacetPath,
    SimplicialComplex,
    complex_to_text,
    connected_in_codim,
    dimension,
    facet_witness_path,
    independence_complex,
    is_pure,
    link,
    parse_complex,
    restrict,
)
from .homology import (
    GF2,
    RATIONALS,
    BettiVector,
    BoundaryMatrices,
    FieldSpec,
    boundary_matrices,
    field_spec,
    mv_check,
    reduced_betti,
)
from .invariants import (
    BettiTable,
    FerrersInvariants,
    IdealPresentation,
    PrimeSet,
    Report,
    classify,
    classify_graph,
    connected_in_codim_ideal,
    depth,
    ferrers_invariants,
    graph_is_acm,
    graph_is_cm,
    height,
    hochster_betti,
    krull_dim,
    minimal_primes,
    prime_witness_sequence,
    proj_dim,
    reisner_cm,
    stanley_reisner,
)
from .theorems import (
    CHECKS,
    VerificationResult,
    bipartite_family,
    enumerate_bipartite,
    enumerate_complexes,
    find_t12_labeling,
)

__version__ = "0.1.0"
