"""Fibonacci-anyon one-time-pad toolkit.

Thin Python surface over the C++ core: fusion-space dimensions, the
one-parameter six-anyon state family and its simplex encodings, anyonic
entropies, capacity sweeps, and braid-word synthesis.
"""

from ._core import (
    BipartiteState,
    SweepRow,
    bell_capacity_bounds,
    bell_power_state,
    binet,
    build_simplex_vectors,
    compile_braid,
    d_tau,
    default_sweep_grid,
    enumerate_basis,
    evaluate_braid,
    f_matrix,
    fibonacci,
    fusion_dim,
    gp_state,
    gram_feasibility,
    holevo_chi,
    max_messages,
    mutual_information,
    r_matrix,
    reduced_entropy,
    required_inner_product,
    sector_superdense_set,
    simplex_gram,
    sweep,
)

__all__ = [
    "BipartiteState",
    "SweepRow",
    "bell_capacity_bounds",
    "bell_power_state",
    "binet",
    "build_simplex_vectors",
    "compile_braid",
    "d_tau",
    "default_sweep_grid",
    "enumerate_basis",
    "evaluate_braid",
    "f_matrix",
    "fibonacci",
    "fusion_dim",
    "gp_state",
    "gram_feasibility",
    "holevo_chi",
    "max_messages",
    "mutual_information",
    "r_matrix",
    "reduced_entropy",
    "required_inner_product",
    "sector_superdense_set",
    "simplex_gram",
    "sweep",
]

__version__ = "0.1.0"
