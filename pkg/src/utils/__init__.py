"""
Dependency-free helpers: matrix source loading, exact integer linear algebra
and sparse integer polynomials.
"""

from .load_matrix import load_matrix_file, read_matrix_stream
from .polynomial import UnivariatePolynomial, BivariatePolynomial
from .integer_linalg import (gcd_all,
                             identity,
                             mat_mul,
                             bareiss_rank,
                             bareiss_determinant,
                             reduce_column,
                             integer_row_echelon,
                             smith_diagonalize)
