from __future__ import annotations

import threading
from typing import Sequence

from bops import scalar
from bops.errors import BackendError
from bops.matrix import Matrix
from bops.poly import BivarPoly, monomials_upto
from bops.scalar import DEFAULT_TOL, RATIONAL, Tolerance

MOMENT_TABLE = "moment-table"
BILINEAR_FORM = "bilinear-form"

# normalization modes
RAW = "raw"
NORMALIZED = "mu00"  # every moment divided by mu_{0,0}


class MomentModel:
    """A symmetric bilinear form on bivariate polynomials.

    Subclasses implement :meth:`inner` on monomial exponents. Moment-table
    models derive it from a moment sequence; bilinear-form models (Uvarov
    with non-diagonal masses) only expose the pairing.
    """

    kind = BILINEAR_FORM
    family = "abstract"

    def __init__(self, backend: str, normalization: str = RAW):
        self.backend = scalar.check_backend(backend)
        self.normalization = normalization

    def inner(self, a: tuple[int, int], b: tuple[int, int]):
        raise NotImplementedError

    def moment(self, m: int, n: int):
        raise TypeError(f"{self.family} model is a general bilinear form; use pairing() instead of moment()")

    def pairing(self, f: BivarPoly, g: BivarPoly):
        for p in (f, g):
            if len(p) and p.backend != self.backend:
                raise BackendError(f"{p.backend} polynomial paired with a {self.backend} model")
        acc = scalar.zero(self.backend)
        for a, c in f.terms():
            for b, d in g.terms():
                acc += c * d * self.inner(a, b)
        return acc

    def gram(self, left: Sequence[BivarPoly], right: Sequence[BivarPoly] | None = None) -> Matrix:
        """Matrix of pairings ``[(left_i, right_j)]``."""
        right = left if right is None else right
        return Matrix([[self.pairing(f, g) for g in right] for f in left], self.backend, cols=len(right))

    def monomial_gram(self, left: Sequence[tuple[int, int]], right: Sequence[tuple[int, int]] | None = None) -> Matrix:
        right = left if right is None else right
        return Matrix([[self.inner(a, b) for b in right] for a in left], self.backend, cols=len(right))

    def params(self) -> dict:
        return {}

    def to_spec(self) -> dict:
        """Weight-spec JSON object describing this model."""
        spec = {"family": self.family, "params": self.params(), "backend": self.backend}
        base = getattr(self, "base", None)
        if base is not None:
            spec["base"] = base.to_spec()
        return spec

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.params()}, backend={self.backend!r})"


class MomentTable(MomentModel):
    """Model determined by moments ``mu(m, n) = <u, x^m y^n>``; results are memoized."""

    kind = MOMENT_TABLE

    def __init__(self, backend: str, normalization: str = RAW):
        super().__init__(backend, normalization)
        self._cache: dict[tuple[int, int], object] = {}
        self._lock = threading.Lock()

    def _compute(self, m: int, n: int):
        raise NotImplementedError

    def moment(self, m: int, n: int):
        key = (m, n)
        try:
            return self._cache[key]
        except KeyError:
            pass
        if m < 0 or n < 0:
            raise ValueError(f"moment indices must be non-negative, got ({m}, {n})")
        value = scalar.coerce(self._compute(m, n), self.backend)
        with self._lock:
            return self._cache.setdefault(key, value)

    def inner(self, a, b):
        return self.moment(a[0] + b[0], a[1] + b[1])

    def pairing(self, f: BivarPoly, g: BivarPoly):
        for p in (f, g):
            if len(p) and p.backend != self.backend:
                raise BackendError(f"{p.backend} polynomial paired with a {self.backend} model")
        # collapse f*g onto monomials first: one moment lookup per product exponent
        return self.apply(f * g) if len(f) and len(g) else scalar.zero(self.backend)

    def apply(self, p: BivarPoly):
        """``<u, p>`` for a single polynomial."""
        acc = scalar.zero(self.backend)
        for (i, j), c in p.terms():
            acc += c * self.moment(i, j)
        return acc


def moment(u: MomentModel, m: int, n: int):
    return u.moment(m, n)


def pairing(u: MomentModel, f: BivarPoly, g: BivarPoly):
    return u.pairing(f, g)


def is_reflexive(u: MomentModel, max_degree: int, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Swap symmetry ``x <-> y`` of the functional for total degree ``<= max_degree``."""
    return reflexive_violation(u, max_degree, tol) is None


def reflexive_violation(u: MomentModel, max_degree: int, tol: Tolerance = DEFAULT_TOL):
    """First ``(a, b)`` witness breaking swap symmetry, or ``None``."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    eq = (lambda p, q: p == q) if u.backend == RATIONAL else tol.close
    if u.kind == MOMENT_TABLE:
        for d in range(max_degree + 1):
            for m in range(d + 1):
                if not eq(u.moment(m, d - m), u.moment(d - m, m)):
                    return ((m, d - m), (d - m, m))
        return None
    basis = monomials_upto(max_degree)
    for a in basis:
        for b in basis:
            if sum(a) + sum(b) > max_degree:
                continue
            if not eq(u.inner(a, b), u.inner(a[::-1], b[::-1])):
                return (a, b)
    return None


def moment_matrix(u: MomentModel, n: int) -> Matrix:
    """``M_n``: pairings of all monomials of degree ``<= n`` in graded order."""
    if u.kind != MOMENT_TABLE:
        raise TypeError("moment_matrix needs a moment-table model")
    if n < 0:
        raise ValueError("degree must be non-negative")
    return u.monomial_gram(monomials_upto(n))
