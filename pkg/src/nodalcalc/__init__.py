"""Lattice and orbifold obstruction calculus for surfaces with many disjoint nodal curves."""

__version__ = "0.1.0"

from .lattice import (  # noqa: E402
    EMPTY,
    Gram,
    ade_gram,
    determinant,
    direct_sum,
    signature,
    smith_normal_form,
    square_discriminant_test,
)
from .f2 import doubly_even_subspace_search, min_kernel_dimension, nodal_embedding_obstruction  # noqa: E402
from .singularities import (  # noqa: E402
    OrbifoldSurface,
    bmy_check,
    hj_string,
    max_singular_points_filter,
    orbifold_euler,
    solve_discrepancies,
)
from .invariants import bmy_solution_enumerator, contract, noether  # noqa: E402
from .classifier import (  # noqa: E402
    classify_max_nodal,
    classify_near_max,
    elliptic_fibre_search,
    existence_status,
    mu_bound_after_blowdowns,
    nonminimal_decision_tree,
)

__all__ = [
    "EMPTY",
    "Gram",
    "ade_gram",
    "determinant",
    "direct_sum",
    "signature",
    "smith_normal_form",
    "square_discriminant_test",
    "doubly_even_subspace_search",
    "min_kernel_dimension",
    "nodal_embedding_obstruction",
    "OrbifoldSurface",
    "bmy_check",
    "hj_string",
    "max_singular_points_filter",
    "orbifold_euler",
    "solve_discrepancies",
    "bmy_solution_enumerator",
    "contract",
    "noether",
    "classify_max_nodal",
    "classify_near_max",
    "elliptic_fibre_search",
    "existence_status",
    "mu_bound_after_blowdowns",
    "nonminimal_decision_tree",
]
