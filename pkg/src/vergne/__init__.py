"""Exact GF(2) toolkit for filiform Lie algebras of Vergne type.

Computes Chevalley-Eilenberg cohomology with trivial coefficients,
enumerates all Vergne-type algebras per dimension, decomposes them into
chains of central extensions over the two dimension-5 models, and pairs
every algebra with a non-isomorphic one sharing its Betti numbers.
"""

from .classify import (
    ExtensionTree,
    dimension_json_dict,
    enumerate_algebras,
    enumerate_by_extension,
    extension_tree,
    label,
    to_dot,
)
from .cohomology import (
    BettiTable,
    betti,
    cocycle_dim,
    cocycle_dim_full,
    graded_betti,
    verify_commuting_square,
)
from .core import (
    MIN_DIMENSION,
    JacobiViolation,
    RowVector,
    VergneAlgebra,
    differential,
    from_row,
    involution,
    jacobi_holds,
    lowering_operator,
    m0,
    m2,
    parse_row,
    row_of,
    tail_operator,
)
from .exterior import (
    MAX_AMBIENT,
    AmbientMismatch,
    Derivation,
    Form,
    ImageOutsideCodomain,
    Monomial,
    basis,
    basis_graded,
    derivation,
    matrix_of,
    parse_form,
    wedge,
)
from .extensions import (
    Decomposition,
    ExtensionStep,
    MissingLeadingTerm,
    NotACocycle,
    NotHomogeneousTopDegree,
    admissible_cocycles,
    central_extension,
    decompose,
    has_codim1_abelian_ideal,
    partner,
    reduce,
)
from .gf2 import BitMatrix, kernel_basis, nullity, rank, rank_naive

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "BettiTable",
    "BitMatrix",
    "Decomposition",
    "Derivation",
    "ExtensionStep",
    "ExtensionTree",
    "Form",
    "ImageOutsideCodomain",
    "JacobiViolation",
    "MAX_AMBIENT",
    "MIN_DIMENSION",
    "MissingLeadingTerm",
    "Monomial",
    "NotACocycle",
    "NotHomogeneousTopDegree",
    "RowVector",
    "VergneAlgebra",
    "admissible_cocycles",
    "basis",
    "basis_graded",
    "betti",
    "central_extension",
    "cocycle_dim",
    "cocycle_dim_full",
    "decompose",
    "derivation",
    "differential",
    "dimension_json_dict",
    "enumerate_algebras",
    "enumerate_by_extension",
    "extension_tree",
    "from_row",
    "graded_betti",
    "has_codim1_abelian_ideal",
    "involution",
    "jacobi_holds",
    "kernel_basis",
    "label",
    "lowering_operator",
    "m0",
    "m2",
    "matrix_of",
    "nullity",
    "parse_form",
    "parse_row",
    "partner",
    "rank",
    "rank_naive",
    "reduce",
    "row_of",
    "tail_operator",
    "to_dot",
    "verify_commuting_square",
    "wedge",
]
