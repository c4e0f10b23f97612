"""Reflection, reverse pairs and centrosymmetry of matrices."""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from bops import scalar
from bops.errors import ShapeError
from bops.matrix import Matrix, block_diag
from bops.scalar import DEFAULT_TOL, RATIONAL, Tolerance


class VectorSymmetry(str, Enum):
    SYMMETRIC = "symmetric"
    SKEW = "skew"
    NEITHER = "neither"


def reverse(x: Matrix) -> Matrix:
    """Rotate the array by 180 degrees: ``result[i][j] = x[m-i][n-j]``."""
    data = tuple(tuple(reversed(r)) for r in reversed(tuple(x)))
    return Matrix._raw(data, x.rows, x.cols, x.backend)


def reverse_violation(x: Matrix, y: Matrix) -> float:
    """Largest ``|reverse(x) - y|`` entry; ``inf`` on shape mismatch."""
    if x.shape != y.shape:
        return float("inf")
    rx = reverse(x)
    return max((abs(float(a - b)) for a, b in zip(rx.entries(), y.entries())), default=0.0)


def is_reverse_pair(x: Matrix, y: Matrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    if x.shape != y.shape:
        return False
    return reverse(x).equals(y, tol)


def is_centrosymmetric(x: Matrix, tol: Tolerance = DEFAULT_TOL) -> bool:
    return is_reverse_pair(x, x, tol)


def exchange_matrix(n: int, backend: str = RATIONAL) -> Matrix:
    """``J_n``: ones on the anti-diagonal."""
    if n < 1:
        raise ValueError("exchange matrix needs n >= 1")
    z, o = scalar.zero(backend), scalar.one(backend)
    data = tuple(tuple(o if j == n - 1 - i else z for j in range(n)) for i in range(n))
    return Matrix._raw(data, n, n, backend)


def reverse_by_swaps(x: Matrix) -> tuple[Matrix, int]:
    """Reflect ``x`` using only row and column transpositions.

    Swaps row ``i`` with row ``m-1-i`` for ``i < m//2`` and likewise for
    columns. Returns the result and the number of swaps performed.
    """
    rows = [list(r) for r in x]
    swaps = 0
    for i in range(x.rows // 2):
        rows[i], rows[x.rows - 1 - i] = rows[x.rows - 1 - i], rows[i]
        swaps += 1
    for j in range(x.cols // 2):
        k = x.cols - 1 - j
        for r in rows:
            r[j], r[k] = r[k], r[j]
        swaps += 1
    return Matrix(rows, x.backend, cols=x.cols), swaps


def vector_symmetry_class(v: Sequence, tol: Tolerance = DEFAULT_TOL) -> VectorSymmetry:
    v = list(v)
    backend = scalar.infer_backend(v)
    if all(scalar.is_zero(a, backend, tol) for a in v):
        raise ValueError("symmetry class of the zero vector is undefined")
    n = len(v) - 1
    if all(scalar.equal(v[i], v[n - i], backend, tol) for i in range(n + 1)):
        return VectorSymmetry.SYMMETRIC
    if all(scalar.equal(v[i], -v[n - i], backend, tol) for i in range(n + 1)):
        return VectorSymmetry.SKEW
    return VectorSymmetry.NEITHER


def block_diag_pair(t1: Matrix, t2: Matrix) -> Matrix:
    """``[[t1, 0], [0, t2]]``; centrosymmetric exactly when ``t1`` and ``t2`` reverse-pair."""
    if t1.shape != t2.shape:
        raise ShapeError(f"block_diag_pair needs equal shapes, got {t1.shape} and {t2.shape}")
    return block_diag(t1, t2)
