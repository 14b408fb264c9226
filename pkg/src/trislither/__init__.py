"""Totally even edge subsets and Slitherlink signatures on triangular grids."""

from ._kernels import USING_NUMBA
from .cycles import (
    CensusResult,
    Cycle,
    PairReport,
    Signature,
    census,
    cycle_defect,
    enumerate_cycles,
    parity_obstruction,
    rewire_shared_side,
    shared_side_edges,
    signature,
    validate_cycle,
    verify_pair,
    zigzag_edges,
)
from .errors import (
    FileFormatError,
    InvalidEdgeError,
    InvalidInputError,
    InvalidParameterError,
    NotACycleError,
    RewireError,
    TrislitherError,
)
from .evenalg import (
    EdgeSet,
    SymmetryReport,
    basis_cardinality,
    basis_subset,
    bottom_pattern,
    check_symmetries,
    count_edges_closed_form,
    decompose,
    gap_profile_doubled,
    is_totally_even,
    max_basis_index,
    null_space_oracle,
    propagate_from_bottom,
    recompose,
    totally_even_subsets,
    totally_even_violation,
)
from .grid import Dir, Edge, Face, Side, TriGrid, Vertex, build_grid
from .transversal import (
    ComponentKind,
    TransversalComponent,
    TransversalDecomposition,
    TransversalGraph,
    alternation_check,
    build_transversal,
    check_mod4,
    decompose_transversals,
    transversal_alternates,
)

__version__ = "0.1.0"

__all__ = [
    "USING_NUMBA",
    "CensusResult",
    "Cycle",
    "PairReport",
    "Signature",
    "census",
    "cycle_defect",
    "enumerate_cycles",
    "parity_obstruction",
    "rewire_shared_side",
    "shared_side_edges",
    "signature",
    "validate_cycle",
    "verify_pair",
    "zigzag_edges",
    "FileFormatError",
    "InvalidEdgeError",
    "InvalidInputError",
    "InvalidParameterError",
    "NotACycleError",
    "RewireError",
    "TrislitherError",
    "EdgeSet",
    "SymmetryReport",
    "basis_cardinality",
    "basis_subset",
    "bottom_pattern",
    "check_symmetries",
    "count_edges_closed_form",
    "decompose",
    "gap_profile_doubled",
    "is_totally_even",
    "max_basis_index",
    "null_space_oracle",
    "propagate_from_bottom",
    "recompose",
    "totally_even_subsets",
    "totally_even_violation",
    "Dir",
    "Edge",
    "Face",
    "Side",
    "TriGrid",
    "Vertex",
    "build_grid",
    "ComponentKind",
    "TransversalComponent",
    "TransversalDecomposition",
    "TransversalGraph",
    "alternation_check",
    "build_transversal",
    "check_mod4",
    "decompose_transversals",
    "transversal_alternates",
]
