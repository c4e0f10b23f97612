"""Bivariate orthogonal polynomial systems from moment functionals.

Exact rational and float backends, reverse/centrosymmetric matrix tools,
moment models for classical and modified weights, and checks of the
symmetry structure that reflexive functionals impose on their OPS.
"""

from bops.errors import (
    BackendError,
    BopsError,
    ConvergenceError,
    NotPositiveDefiniteError,
    QuasiDefinitenessError,
    ShapeError,
    SingularMatrixError,
)
from bops.matrix import Matrix, adjugate, block_diag, determinant, inverse, minor_matrix, rank, solve
from bops.poly import BivarPoly, PolyVector, canonical_vector, is_reflexive_vector, swap_xy
from bops.scalar import DEFAULT_TOL, FLOAT, RATIONAL, Tolerance
from bops.structure import (
    VectorSymmetry,
    block_diag_pair,
    exchange_matrix,
    is_centrosymmetric,
    is_reverse_pair,
    reverse,
    vector_symmetry_class,
)

__version__ = "0.1.0"

__all__ = [
    "BackendError", "BivarPoly", "BopsError", "ConvergenceError", "DEFAULT_TOL", "FLOAT", "Matrix",
    "NotPositiveDefiniteError", "PolyVector", "QuasiDefinitenessError", "RATIONAL", "ShapeError",
    "SingularMatrixError", "Tolerance", "VectorSymmetry", "adjugate", "block_diag", "block_diag_pair",
    "canonical_vector", "determinant", "exchange_matrix", "inverse", "is_centrosymmetric",
    "is_reflexive_vector", "is_reverse_pair", "minor_matrix", "rank", "reverse", "solve", "swap_xy",
    "vector_symmetry_class",
]
