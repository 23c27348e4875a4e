"""Exact modular certificates for sums-of-squares decompositions.

Thin re-export of the compiled core. All arithmetic is over Z/p for a
user-chosen odd prime p; every "Certified" answer is a one-sided proof
that lifts to characteristic zero, every failure is "Inconclusive".
"""

from ._core import (
    Error,
    Poly,
    ambient_dim,
    bdp_bound_check,
    binary_orbits,
    bop2_bound_check,
    catalecticant_matrix,
    containment_check,
    contact_locus_dim,
    contract,
    dimension_sample,
    expected_dim,
    generic_identifiability,
    generic_rank,
    hyperplane_count,
    middle_cat_rank,
    random_orthogonal,
    specific_identifiability,
    square_space_dim,
    terracini_rank,
)

__all__ = [
    "Error",
    "Poly",
    "ambient_dim",
    "bdp_bound_check",
    "binary_orbits",
    "bop2_bound_check",
    "catalecticant_matrix",
    "containment_check",
    "contact_locus_dim",
    "contract",
    "dimension_sample",
    "expected_dim",
    "generic_identifiability",
    "generic_rank",
    "hyperplane_count",
    "middle_cat_rank",
    "random_orthogonal",
    "specific_identifiability",
    "square_space_dim",
    "terracini_rank",
]
