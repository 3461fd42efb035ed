"""Matrix partitions, full homomorphisms and point-determining digraphs."""

from .canon import are_isomorphic, canonical_digraph, canonical_form, canonical_labeling
from .digraph import (
    Digraph,
    DigraphError,
    FormatError,
    InvalidCharacterError,
    LoopError,
    MalformedHeaderError,
    NonzeroDiagonalError,
    RaggedRowsError,
    complement,
    delete_vertex,
    format_digraph,
    induced_subdigraph,
    is_completely_adjacent,
    is_completely_nonadjacent,
    is_independent_set,
    is_strong_clique,
    make_digraph,
    parse_digraph,
)
from .enumeration import (
    ObstructionCatalog,
    VerificationReport,
    enumerate_digraphs,
    enumerate_minimal_obstructions,
    extremal_census,
    verify_bound,
    verify_homogeneous_bounds,
    verify_point_determining_theorem,
    verify_triple_lemma,
)
from .mpartition import (
    Partition,
    PartitionError,
    PartitionVerdict,
    PatternMatrix,
    extend_partition_homogeneous,
    find_full_homomorphism,
    format_matrix,
    is_minimal_obstruction,
    parse_matrix,
    solve_mpartition,
    validate_partition,
)
from .triples import Triple, enumerate_triples, red_free_vertices, triple_intersection_violations
from .twins import (
    HomogeneousKind,
    InvariantViolation,
    NotPointDeterminingError,
    TwinClassification,
    TwinVerdict,
    distinguishes,
    is_homogeneous,
    is_point_determining,
    max_homogeneous,
    removable_vertex,
    twin_type,
)

__version__ = "0.1.0"
