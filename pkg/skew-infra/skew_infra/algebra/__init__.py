from .group import GroupElement, group_sum
from .integer_matrix import IntegerMatrix
from .lattice import (
    SmithDecomposition,
    integer_kernel,
    invariant_factors,
    lattice_contains,
    smallest_positive_power,
    smith_decomposition,
    solve_integer,
    spans_full_lattice,
)
from .laurent import LaurentMatrix, LaurentPolynomial, laurent_eval, laurent_matrix_pow, laurent_mul, laurent_sum

__all__ = [
    "GroupElement",
    "group_sum",
    "IntegerMatrix",
    "SmithDecomposition",
    "integer_kernel",
    "invariant_factors",
    "lattice_contains",
    "smallest_positive_power",
    "smith_decomposition",
    "solve_integer",
    "spans_full_lattice",
    "LaurentMatrix",
    "LaurentPolynomial",
    "laurent_eval",
    "laurent_matrix_pow",
    "laurent_mul",
    "laurent_sum",
]
