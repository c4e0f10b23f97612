"""Sparse bivariate polynomials and graded polynomial vectors.

Monomials are exponent pairs ``(i, j)`` for ``x**i * y**j``. Within a total
degree the layout is graded lexicographic with ``x`` first, so degree ``n``
runs ``x**n, x**(n-1) y, ..., y**n``; sorting by ``(i + j, j)`` reproduces it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from bops import scalar
from bops.errors import BackendError, ShapeError
from bops.matrix import Matrix, rank
from bops.scalar import DEFAULT_TOL, RATIONAL, Tolerance

ZERO_DEGREE = -1  # reported degree of the zero polynomial

X, Y = "x", "y"


def monomials(n: int) -> list[tuple[int, int]]:
    """Exponents of the degree-``n`` canonical vector, ``[(n,0), (n-1,1), ..., (0,n)]``."""
    return [(n - k, k) for k in range(n + 1)]


def monomials_upto(n: int) -> list[tuple[int, int]]:
    """All exponents of total degree ``<= n`` in graded order."""
    return [e for d in range(n + 1) for e in monomials(d)]


def _axis_exponent(axis: str) -> tuple[int, int]:
    if axis in (X, 1, "1"):
        return (1, 0)
    if axis in (Y, 2, "2"):
        return (0, 1)
    raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")


class BivarPoly:
    """Polynomial in ``x`` and ``y`` stored as ``{(i, j): coefficient}``.

    Zero coefficients are never stored. The backend is inferred from the
    coefficients (``rational`` if none are floats).
    """

    __slots__ = ("_terms", "backend")

    def __init__(self, terms: Mapping[tuple[int, int], object] | Iterable = (), backend: str | None = None):
        items = list(terms.items()) if isinstance(terms, Mapping) else list(terms)
        if backend is None:
            backend = scalar.infer_backend(c for _, c in items)
        clean: dict[tuple[int, int], object] = {}
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            key = (int(i), int(j))
            clean[key] = clean.get(key, scalar.zero(backend)) + scalar.coerce(c, backend)
        self._terms = {k: v for k, v in clean.items() if v != 0}
        self.backend = backend

    @classmethod
    def _raw(cls, terms: dict, backend: str) -> "BivarPoly":
        p = object.__new__(cls)
        p._terms = terms
        p.backend = backend
        return p

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1, backend: str = RATIONAL) -> "BivarPoly":
        return cls({(i, j): coeff}, backend)

    @classmethod
    def constant(cls, c, backend: str | None = None) -> "BivarPoly":
        return cls({(0, 0): c}, backend)

    @classmethod
    def zero(cls, backend: str = RATIONAL) -> "BivarPoly":
        return cls._raw({}, backend)

    # -- inspection -------------------------------------------------------
    def terms(self) -> list[tuple[tuple[int, int], object]]:
        """Terms in canonical graded order."""
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][1]))

    def coeff(self, i: int, j: int):
        return self._terms.get((i, j), scalar.zero(self.backend))

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=ZERO_DEGREE)

    def is_zero(self, tol: Tolerance | None = None) -> bool:
        if tol is None or self.backend == RATIONAL:
            return not self._terms
        return all(tol.close(c, 0.0) for c in self._terms.values())

    def leading_row(self, n: int) -> list:
        """Coefficients of the degree-``n`` monomials in canonical order."""
        return [self.coeff(i, j) for i, j in monomials(n)]

    def __len__(self) -> int:
        return len(self._terms)

    def __repr__(self) -> str:
        if not self._terms:
            return "BivarPoly(0)"
        parts = []
        for (i, j), c in self.terms():
            mono = "*".join(s for s in (
                "x" if i == 1 else f"x^{i}" if i else "",
                "y" if j == 1 else f"y^{j}" if j else "") if s)
            parts.append(f"{scalar.format_scalar(c, 8)}{'*' + mono if mono else ''}")
        return "BivarPoly(" + " + ".join(parts) + ")"

    # -- arithmetic -------------------------------------------------------
    def _backend_with(self, other: "BivarPoly") -> str:
        if self.backend == other.backend:
            return self.backend
        # a zero polynomial carries no information about its backend
        if not self._terms:
            return other.backend
        if not other._terms:
            return self.backend
        raise BackendError(f"cannot combine {self.backend} and {other.backend} polynomials")

    def _lift(self, other) -> "BivarPoly":
        if isinstance(other, BivarPoly):
            return other
        return BivarPoly.constant(scalar.coerce(other, self.backend), self.backend)

    def __add__(self, other) -> "BivarPoly":
        other = self._lift(other)
        backend = self._backend_with(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return BivarPoly._raw(out, backend)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly._raw({k: -c for k, c in self._terms.items()}, self.backend)

    def __sub__(self, other) -> "BivarPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "BivarPoly":
        return self._lift(other) - self

    def scale(self, c) -> "BivarPoly":
        c = scalar.coerce(c, self.backend)
        if c == 0:
            return BivarPoly.zero(self.backend)
        return BivarPoly._raw({k: c * v for k, v in self._terms.items()}, self.backend)

    def __mul__(self, other) -> "BivarPoly":
        if not isinstance(other, BivarPoly):
            return self.scale(other)
        backend = self._backend_with(other)
        out: dict[tuple[int, int], object] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly._raw({k: v for k, v in out.items() if v != 0}, backend)

    __rmul__ = __mul__

    def shift(self, di: int, dj: int) -> "BivarPoly":
        """Multiply by the monomial ``x**di * y**dj``."""
        return BivarPoly._raw({(i + di, j + dj): c for (i, j), c in self._terms.items()}, self.backend)

    def __eq__(self, other) -> bool:
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def equals(self, other: "BivarPoly", tol: Tolerance = DEFAULT_TOL) -> bool:
        if self.backend == RATIONAL and other.backend == RATIONAL:
            return self._terms == other._terms
        return (self - other).is_zero(tol)

    def to_float(self) -> "BivarPoly":
        return BivarPoly._raw({k: scalar.to_float(v) for k, v in self._terms.items()}, scalar.FLOAT)


def swap_xy(p: BivarPoly) -> BivarPoly:
    return BivarPoly._raw({(j, i): c for (i, j), c in p._terms.items()}, p.backend)


def evaluate(p: BivarPoly, x0, y0):
    """Evaluate ``p(x0, y0)``: Horner in ``y`` for each power of ``x``, then Horner in ``x``."""
    x0 = scalar.coerce(x0, p.backend)
    y0 = scalar.coerce(y0, p.backend)
    by_x: dict[int, dict[int, object]] = {}
    for (i, j), c in p._terms.items():
        by_x.setdefault(i, {})[j] = c
    z = scalar.zero(p.backend)
    if not by_x:
        return z

    def horner(coeffs: dict[int, object], t):
        acc = z
        for k in range(max(coeffs), -1, -1):
            acc = acc * t + coeffs.get(k, z)
        return acc

    inner = {i: horner(row, y0) for i, row in by_x.items()}
    return horner(inner, x0)


class PolyVector:
    """Column of ``n + 1`` polynomials; slot ``k`` plays the role of ``P^n_{n-k,k}``."""

    __slots__ = ("entries", "degree")

    def __init__(self, entries: Sequence[BivarPoly], degree: int | None = None):
        self.entries = tuple(entries)
        if degree is None:
            degree = len(self.entries) - 1
        if len(self.entries) != degree + 1:
            raise ShapeError(f"a degree-{degree} vector needs {degree + 1} entries, got {len(self.entries)}")
        self.degree = degree

    @property
    def backend(self) -> str:
        for p in self.entries:
            if len(p):
                return p.backend
        return self.entries[0].backend if self.entries else RATIONAL

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[BivarPoly]:
        return iter(self.entries)

    def __getitem__(self, k: int) -> BivarPoly:
        return self.entries[k]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyVector):
            return NotImplemented
        return self.degree == other.degree and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"PolyVector(degree={self.degree}, {list(self.entries)!r})"

    def equals(self, other: "PolyVector", tol: Tolerance = DEFAULT_TOL) -> bool:
        return self.degree == other.degree and all(a.equals(b, tol) for a, b in zip(self, other))

    def to_float(self) -> "PolyVector":
        return PolyVector([p.to_float() for p in self.entries], self.degree)

    def leading_matrix(self) -> Matrix:
        """Coefficients of the degree-``n`` monomials, one row per entry."""
        return Matrix([p.leading_row(self.degree) for p in self.entries], self.backend, cols=self.degree + 1)

    def is_monic(self) -> bool:
        n = self.degree
        if any(p.degree != n for p in self.entries):
            return False
        return self.leading_matrix() == Matrix.identity(n + 1, self.backend)

    def has_independent_entries(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        """Opt-in check: the leading-coefficient matrix has full rank."""
        return rank(self.leading_matrix(), tol) == self.degree + 1


def canonical_vector(n: int, backend: str = RATIONAL) -> PolyVector:
    if n < 0:
        raise ValueError("degree must be non-negative")
    return PolyVector([BivarPoly.monomial(i, j, 1, backend) for i, j in monomials(n)], n)


def is_reflexive_vector(v: PolyVector, tol: Tolerance = DEFAULT_TOL) -> bool:
    n = len(v) - 1
    return all(v[k].equals(swap_xy(v[n - k]), tol) for k in range(n + 1))


def reflexive_violation(v: PolyVector) -> float:
    n = len(v) - 1
    worst = 0.0
    for k in range(n + 1):
        d = v[k] - swap_xy(v[n - k])
        worst = max([worst] + [abs(float(c)) for _, c in d.terms()])
    return worst


def shift_matrix(n: int, axis: str, backend: str = RATIONAL) -> Matrix:
    """``L_{n,i}`` with ``axis * X_n == L @ X_{n+1}``: ``[I | 0]`` for x, ``[0 | I]`` for y."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    off = 0 if _axis_exponent(axis) == (1, 0) else 1
    z, o = scalar.zero(backend), scalar.one(backend)
    return Matrix([[o if j == i + off else z for j in range(n + 2)] for i in range(n + 1)], backend, cols=n + 2)


def combine(t: Matrix, polys: Sequence[BivarPoly]) -> list[BivarPoly]:
    """Rows of ``t`` applied to the column of polynomials ``polys``."""
    if t.cols != len(polys):
        raise ShapeError(f"matrix with {t.cols} columns applied to {len(polys)} polynomials")
    out = []
    for r in t:
        acc = BivarPoly.zero(t.backend)
        for c, p in zip(r, polys):
            if c != 0:
                acc = acc + p.scale(c)
        out.append(acc)
    return out


def apply_change_of_basis(t: Matrix, v: PolyVector) -> PolyVector:
    if t.shape != (len(v), len(v)):
        raise ShapeError(f"change of basis for degree {v.degree} needs a {len(v)}x{len(v)} matrix, got {t.shape}")
    return PolyVector(combine(t, v.entries), v.degree)


def multiply_by_axis(v: PolyVector | Sequence[BivarPoly], axis: str) -> list[BivarPoly]:
    di, dj = _axis_exponent(axis)
    return [p.shift(di, dj) for p in v]


def expansion_in_canonical(v: PolyVector) -> list[Matrix]:
    """Matrices ``[G_n, G^n_{n-1}, ..., G^n_0]`` with ``v = sum_k G^n_k X_k``."""
    n = v.degree
    backend = v.backend
    out = []
    for k in range(n, -1, -1):
        out.append(Matrix([p.leading_row(k) for p in v], backend, cols=k + 1))
    return out


def reconstruct_from_canonical(blocks: Sequence[Matrix]) -> PolyVector:
    """Inverse of :func:`expansion_in_canonical`."""
    n = len(blocks) - 1
    backend = blocks[0].backend
    entries = [BivarPoly.zero(backend) for _ in range(blocks[0].rows)]
    for idx, g in enumerate(blocks):
        k = n - idx
        canon = canonical_vector(k, backend).entries
        entries = [a + b for a, b in zip(entries, combine(g, canon))]
    return PolyVector(entries, n)
