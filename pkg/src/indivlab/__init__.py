"""Exact laboratory for sparse graph classes, hereditary recognizers,
and indivisibility witnesses.

Everything here is exact: rationals for sparsity, certificates that
replay, and searches that either finish or raise a capacity error.
The hot kernels run on a compiled backend when the extension is
importable and on a pure-Python twin otherwise; `backend_name()` says
which one is live.
"""

from ._backend import backend_name
from .errors import CapacityError, IncompleteSearchError
from .graphs import (
    Coloring,
    Embedding,
    Graph,
    complement,
    complete,
    complete_minus_edge,
    count_induced_copies,
    cycle,
    disjoint_union,
    find_induced_embedding,
    find_monochromatic_copy,
    is_induced_embedding,
    is_isomorphic,
    lex_product,
    make_graph,
    null_graph,
    path,
)
from .sparsity import (
    SparsityCertificate,
    delta_alpha,
    max_average_degree,
    member_K_alpha,
    parse_rational,
    windmill,
    windmill_membership_bound,
)
from .classes import (
    ClassCertificate,
    ForbiddenSet,
    NamedAmalgamation,
    SparseClass,
    StructuralClass,
    is_chordal,
    is_cograph,
    is_distance_hereditary,
    is_perfect,
    is_split,
    is_threshold,
)
from .indivisibility import (
    WitnessReport,
    chordal_witness,
    dh_adversary,
    lex_square_extract,
    lex_square_witness,
    sparse_adversary,
    split_adversary,
    threshold_adversary,
    verify_witness,
)
from .amalgamation import (
    Amalgam,
    AmalgamationProblem,
    amalgamation_catalog,
    find_amalgam,
    free_amalgam,
    problem,
)
from .fileio import (
    parse_coloring,
    parse_graph,
    read_graph,
    serialize_coloring,
    serialize_graph,
    write_graph,
)

__version__ = "0.1.0"

__all__ = [
    "Amalgam",
    "AmalgamationProblem",
    "CapacityError",
    "ClassCertificate",
    "Coloring",
    "Embedding",
    "ForbiddenSet",
    "Graph",
    "IncompleteSearchError",
    "NamedAmalgamation",
    "SparseClass",
    "SparsityCertificate",
    "StructuralClass",
    "WitnessReport",
    "amalgamation_catalog",
    "backend_name",
    "chordal_witness",
    "complement",
    "complete",
    "complete_minus_edge",
    "count_induced_copies",
    "cycle",
    "delta_alpha",
    "dh_adversary",
    "disjoint_union",
    "find_amalgam",
    "find_induced_embedding",
    "find_monochromatic_copy",
    "free_amalgam",
    "is_chordal",
    "is_cograph",
    "is_distance_hereditary",
    "is_induced_embedding",
    "is_isomorphic",
    "is_perfect",
    "is_split",
    "is_threshold",
    "lex_product",
    "lex_square_extract",
    "lex_square_witness",
    "make_graph",
    "max_average_degree",
    "member_K_alpha",
    "null_graph",
    "parse_coloring",
    "parse_graph",
    "parse_rational",
    "path",
    "problem",
    "read_graph",
    "serialize_coloring",
    "serialize_graph",
    "sparse_adversary",
    "split_adversary",
    "threshold_adversary",
    "verify_witness",
    "windmill",
    "windmill_membership_bound",
    "write_graph",
]
