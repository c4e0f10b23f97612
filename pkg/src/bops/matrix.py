"""Dense immutable matrices over one scalar backend.

Small sizes only (the largest objects are moment matrices of a few dozen
rows), so everything is plain Python over tuples of rows; the same code runs
on ``Fraction`` and ``float`` entries.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from bops import scalar
from bops.errors import BackendError, ShapeError, SingularMatrixError
from bops.scalar import DEFAULT_TOL, FLOAT, RATIONAL, Tolerance


class Matrix:
    """Immutable ``rows x cols`` matrix; entries all share ``backend``.

    Empty shapes (0 rows or 0 columns) are legal.
    """

    __slots__ = ("rows", "cols", "backend", "_data")

    def __init__(self, data: Iterable[Sequence], backend: str | None = None, cols: int | None = None):
        rows = [list(r) for r in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeError("ragged matrix rows")
        if backend is None:
            backend = scalar.infer_backend(v for r in rows for v in r)
        scalar.check_backend(backend)
        self.rows = len(rows)
        self.cols = cols
        self.backend = backend
        self._data = tuple(tuple(scalar.coerce(v, backend) for v in r) for r in rows)

    @classmethod
    def _raw(cls, data: tuple, rows: int, cols: int, backend: str) -> "Matrix":
        # trusted constructor: entries already coerced
        m = object.__new__(cls)
        m.rows, m.cols, m.backend, m._data = rows, cols, backend, data
        return m

    # -- constructors -----------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int, backend: str = RATIONAL) -> "Matrix":
        z = scalar.zero(backend)
        return cls._raw(tuple((z,) * cols for _ in range(rows)), rows, cols, backend)

    @classmethod
    def identity(cls, n: int, backend: str = RATIONAL) -> "Matrix":
        z, o = scalar.zero(backend), scalar.one(backend)
        data = tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))
        return cls._raw(data, n, n, backend)

    @classmethod
    def diag(cls, values: Sequence, backend: str | None = None) -> "Matrix":
        values = list(values)
        if backend is None:
            backend = scalar.infer_backend(values)
        z = scalar.zero(backend)
        n = len(values)
        return cls([[values[i] if i == j else z for j in range(n)] for i in range(n)], backend, cols=n)

    @classmethod
    def from_function(cls, rows: int, cols: int, fn, backend: str) -> "Matrix":
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)], backend, cols=cols)

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def entries(self):
        for r in self._data:
            yield from r

    def __iter__(self):
        return iter(self._data)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(scalar.format_scalar(v, 6) for v in r) for r in self._data)
        return f"Matrix<{self.rows}x{self.cols} {self.backend}>[{body}]"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and self.backend == other.backend
                and self._data == other._data)

    def __hash__(self) -> int:
        return hash((self.shape, self.backend, self._data))

    # -- arithmetic -------------------------------------------------------
    def _same_backend(self, other: "Matrix") -> None:
        if self.backend != other.backend:
            raise BackendError(f"{self.backend} and {other.backend} matrices cannot be combined")

    def _same_shape(self, other: "Matrix") -> None:
        self._same_backend(other)
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        data = tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(data, self.rows, self.cols, self.backend)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        data = tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix._raw(data, self.rows, self.cols, self.backend)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._data), self.rows, self.cols, self.backend)

    def scale(self, c) -> "Matrix":
        c = scalar.coerce(c, self.backend)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._data), self.rows, self.cols, self.backend)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._same_backend(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = list(zip(*other._data)) if other.rows else [()] * other.cols
        z = scalar.zero(self.backend)
        data = tuple(
            tuple(sum((a * b for a, b in zip(r, c)), z) for c in cols_b)
            for r in self._data
        )
        return Matrix._raw(data, self.rows, other.cols, self.backend)

    @property
    def T(self) -> "Matrix":
        data = tuple(zip(*self._data)) if self.rows else tuple(() for _ in range(self.cols))
        return Matrix._raw(tuple(tuple(r) for r in data), self.cols, self.rows, self.backend)

    def apply(self, vector: Sequence) -> list:
        if len(vector) != self.cols:
            raise ShapeError("vector length does not match column count")
        z = scalar.zero(self.backend)
        return [sum((a * b for a, b in zip(r, vector)), z) for r in self._data]

    def to_float(self) -> "Matrix":
        data = tuple(tuple(scalar.to_float(v) for v in r) for r in self._data)
        return Matrix._raw(data, self.rows, self.cols, FLOAT)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        data = tuple(tuple(self._data[i][j] for j in cols) for i in rows)
        return Matrix._raw(data, len(rows), len(cols), self.backend)

    # -- norms / comparisons -----------------------------------------------
    def max_abs(self) -> float:
        return max((abs(float(v)) for v in self.entries()), default=0.0)

    def frobenius(self) -> float:
        return math.sqrt(math.fsum(float(v) ** 2 for v in self.entries()))

    def is_zero(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return all(scalar.is_zero(v, self.backend, tol) for v in self.entries())

    def equals(self, other: "Matrix", tol: Tolerance = DEFAULT_TOL) -> bool:
        """Backend-aware equality: exact for rationals, tolerance for floats."""
        if self.shape != other.shape:
            return False
        self._same_backend(other)
        if self.backend == RATIONAL:
            return self._data == other._data
        return all(tol.close(a, b) for a, b in zip(self.entries(), other.entries()))

    def is_symmetric(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return self.is_square and self.equals(self.T, tol)


def block_diag(*blocks: Matrix) -> Matrix:
    if not blocks:
        raise ValueError("need at least one block")
    backend = blocks[0].backend
    for b in blocks:
        if b.backend != backend:
            raise BackendError("blocks use different backends")
    cols = sum(b.cols for b in blocks)
    z = scalar.zero(backend)
    data = []
    offset = 0
    for b in blocks:
        for r in b:
            data.append((z,) * offset + r + (z,) * (cols - offset - b.cols))
        offset += b.cols
    return Matrix._raw(tuple(data), len(data), cols, backend)


def hstack(*blocks: Matrix) -> Matrix:
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ShapeError("hstack needs equal row counts")
    data = tuple(sum((b.row(i) for b in blocks), ()) for i in range(rows))
    return Matrix(data, blocks[0].backend, cols=sum(b.cols for b in blocks))


def _require_square(x: Matrix, what: str) -> None:
    if not x.is_square:
        raise ShapeError(f"{what} needs a square matrix, got {x.shape}")


# -- determinants ---------------------------------------------------------------

def _integerize(rows: list[list]) -> tuple[list[list[int]], Fraction]:
    # scale each row by the lcm of its denominators so Bareiss runs on ints
    out, factor = [], Fraction(1)
    for r in rows:
        lcm = 1
        for v in r:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        out.append([int(v * lcm) for v in r])
        factor /= lcm
    return out, factor


def _bareiss_int(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for p in range(k + 1, n):
                if a[p][k] != 0:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _lu_det(rows: list[list[float]]) -> float:
    n = len(rows)
    a = [r[:] for r in rows]
    det = 1.0
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if a[p][k] == 0.0:
            return 0.0
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return det


def determinant(x: Matrix):
    """Exact (Bareiss) on rationals, partial-pivoting LU on floats. det of 0x0 is 1."""
    _require_square(x, "determinant")
    if x.rows == 0:
        return scalar.one(x.backend)
    if x.backend == RATIONAL:
        ints, factor = _integerize(x.tolist())
        return Fraction(_bareiss_int(ints)) * factor
    return _lu_det(x.tolist())


def cofactor_determinant(x: Matrix):
    """Laplace expansion along the first row; exponential cost, test oracle only."""
    _require_square(x, "determinant")
    n = x.rows
    if n == 0:
        return scalar.one(x.backend)
    if n == 1:
        return x[0, 0]
    total = scalar.zero(x.backend)
    for j in range(n):
        if x[0, j] == 0:
            continue
        sign = 1 if j % 2 == 0 else -1
        total += sign * x[0, j] * cofactor_determinant(minor_matrix(x, 0, j))
    return total


def minor_matrix(x: Matrix, i: int, j: int) -> Matrix:
    """``x`` with row ``i`` and column ``j`` deleted."""
    if not (0 <= i < x.rows and 0 <= j < x.cols):
        raise IndexError(f"minor index ({i}, {j}) out of range for {x.shape}")
    rows = [r for r in range(x.rows) if r != i]
    cols = [c for c in range(x.cols) if c != j]
    return x.submatrix(rows, cols)


def adjugate(x: Matrix) -> Matrix:
    """Transpose of the cofactor matrix; ``x @ adj(x) == det(x) I``."""
    _require_square(x, "adjugate")
    n = x.rows
    if n == 0:
        return x
    if n == 1:
        return Matrix.identity(1, x.backend)
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            d = determinant(minor_matrix(x, i, j))
            cof[i][j] = d if (i + j) % 2 == 0 else -d
    return Matrix(cof, x.backend).T


# -- elimination ------------------------------------------------------------------

def _eliminate(a: list[list], n: int, backend: str, tol: Tolerance):
    """Gauss-Jordan in place on an augmented array; returns pivot columns."""
    rows = len(a)
    width = len(a[0]) if rows else 0
    pivots = []
    r = 0
    scale = max((abs(float(v)) for row in a for v in row[:n]), default=0.0)
    for c in range(n):
        if r == rows:
            break
        if backend == RATIONAL:
            p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        else:
            p = max(range(r, rows), key=lambda i: abs(a[i][c]))
            if abs(a[p][c]) <= tol.atol + tol.rtol * scale:
                p = None
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        row_r = a[r]
        for j in range(c, width):
            row_r[j] = row_r[j] / piv
        for i in range(rows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    row_i = a[i]
                    for j in range(c, width):
                        row_i[j] -= f * row_r[j]
        pivots.append(c)
        r += 1
    return pivots


def rank(x: Matrix, tol: Tolerance = DEFAULT_TOL) -> int:
    if x.rows == 0 or x.cols == 0:
        return 0
    a = x.tolist()
    return len(_eliminate(a, x.cols, x.backend, tol))


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Solve ``a @ X = b`` for square nonsingular ``a``."""
    _require_square(a, "solve")
    a._same_backend(b)
    if a.rows != b.rows:
        raise ShapeError("right-hand side row count does not match")
    n = a.rows
    if n == 0:
        return Matrix.zeros(0, b.cols, a.backend)
    if a.backend == RATIONAL:
        aug = [list(ra) + list(rb) for ra, rb in zip(a, b)]
        piv = _eliminate(aug, n, RATIONAL, DEFAULT_TOL)
        if len(piv) < n:
            raise SingularMatrixError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in aug), n, b.cols, RATIONAL)
    return _solve_float(a, b)


def _solve_float(a: Matrix, b: Matrix) -> Matrix:
    # LU with partial pivoting; singularity is judged by the caller
    n = a.rows
    lu = a.tolist()
    rhs = b.tolist()
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(lu[i][k]))
        if lu[p][k] == 0.0:
            raise SingularMatrixError("matrix is singular")
        lu[k], lu[p] = lu[p], lu[k]
        rhs[k], rhs[p] = rhs[p], rhs[k]
        for i in range(k + 1, n):
            f = lu[i][k] / lu[k][k]
            if f:
                for j in range(k + 1, n):
                    lu[i][j] -= f * lu[k][j]
                for j in range(b.cols):
                    rhs[i][j] -= f * rhs[k][j]
    out = [[0.0] * b.cols for _ in range(n)]
    for j in range(b.cols):
        for i in range(n - 1, -1, -1):
            s = rhs[i][j] - math.fsum(lu[i][k] * out[k][j] for k in range(i + 1, n))
            out[i][j] = s / lu[i][i]
    return Matrix._raw(tuple(tuple(r) for r in out), n, b.cols, FLOAT)


def inverse(x: Matrix) -> Matrix:
    _require_square(x, "inverse")
    return solve(x, Matrix.identity(x.rows, x.backend))
