"""Branching of sl(2n) irreducibles to sp(2n): restricted-path enumeration,
Sundaram's skew-tableau rule, exact character arithmetic, the tableau
bijection with its Q-symbol machinery, and polytope descriptions."""

from .burge import array_to_even_tableau, even_tableau_to_array, iter_special_arrays
from .characters import (
    branch_by_character,
    restricted_character,
    schur_character,
    weyl_dim_sl,
    weyl_dim_sp,
)
from .core import SkewTableau, column_word, enumerate_ssyt, normalize_partition, row_word
from .lr import enumerate_lr, enumerate_lrs, lr_coefficient, sundaram_table
from .paths import domres_endpoints, enumerate_domres, path_of
from .updown import canonical_q, phi, phi_inverse, q_symbols, shape_sequence
from .verify import branching_tables, full_sweep

__all__ = [
    "SkewTableau",
    "array_to_even_tableau",
    "branch_by_character",
    "branching_tables",
    "canonical_q",
    "column_word",
    "domres_endpoints",
    "enumerate_domres",
    "enumerate_lr",
    "enumerate_lrs",
    "enumerate_ssyt",
    "even_tableau_to_array",
    "full_sweep",
    "iter_special_arrays",
    "lr_coefficient",
    "normalize_partition",
    "path_of",
    "phi",
    "phi_inverse",
    "q_symbols",
    "restricted_character",
    "row_word",
    "schur_character",
    "shape_sequence",
    "sundaram_table",
    "weyl_dim_sl",
    "weyl_dim_sp",
]

__version__ = "0.1.0"
