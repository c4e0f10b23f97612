"""Monic orthogonal polynomial systems (MOPS) and their three-term relations.

Production path: for each degree ``n`` solve the Gram system of the form
against the monomials of degree ``< n``. The bordered-determinant formula is
kept as an independent oracle (:func:`mops_determinant_oracle`).
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field

import numpy as np

from bops import scalar
from bops.errors import QuasiDefinitenessError, SingularMatrixError
from bops.matrix import Matrix, determinant, minor_matrix, solve
from bops.moments.base import MomentModel
from bops.moments.floatview import as_float_model
from bops.poly import BivarPoly, PolyVector, combine, monomials, monomials_upto, multiply_by_axis, shift_matrix
from bops.scalar import FLOAT, RATIONAL

log = logging.getLogger(__name__)

SINGULAR_RTOL = 1e-10


@dataclass
class MopsCache:
    """MOPS ``Q_0..Q_N`` of a model with Gram blocks ``H_n = <u, Q_n Q_n^T>``."""

    model: MomentModel
    Q: list[PolyVector]
    H: list[Matrix]
    _coeffs: dict = field(default_factory=dict, repr=False)

    @property
    def backend(self) -> str:
        return self.model.backend

    @property
    def max_degree(self) -> int:
        return len(self.Q) - 1

    def three_term(self, n: int, axis: str) -> tuple[Matrix, Matrix]:
        return three_term_monic(self, n, axis)

    def to_float(self) -> "MopsCache":
        """Float copy; rational coefficients computed so far are rounded, not recomputed."""
        if self.backend == FLOAT:
            return self
        out = MopsCache(as_float_model(self.model), [q.to_float() for q in self.Q],
                        [h.to_float() for h in self.H])
        for key, (c, d) in self._coeffs.items():
            out._coeffs[key] = (c.to_float(), d.to_float())
        return out


def _check_gram_block(h: Matrix, n: int) -> None:
    if h.backend == RATIONAL:
        if determinant(h) == 0:
            raise QuasiDefinitenessError(n, "H_n is singular")
        return
    sv = np.linalg.svd(np.array(h.tolist(), dtype=float).reshape(h.rows, h.cols), compute_uv=False)
    if sv[-1] <= SINGULAR_RTOL * sv[0]:
        raise QuasiDefinitenessError(n, f"smallest singular value of H_n is {sv[-1]:.3g} (largest {sv[0]:.3g})")


def _monic_vector(u: MomentModel, n: int, rng: random.Random | None) -> PolyVector:
    lead = monomials(n)
    if n == 0:
        return PolyVector([BivarPoly.constant(scalar.one(u.backend), u.backend)], 0)
    low = monomials_upto(n - 1)
    if rng is not None:
        low = low[:]
        rng.shuffle(low)
    gram = u.monomial_gram(low)
    rhs = u.monomial_gram(low, lead)
    try:
        coef = solve(gram, rhs)
    except SingularMatrixError:
        raise QuasiDefinitenessError(n - 1, "moment matrix M_{n-1} is singular") from None
    entries = []
    for k, alpha in enumerate(lead):
        terms = {alpha: scalar.one(u.backend)}
        for r, beta in enumerate(low):
            terms[beta] = -coef[r, k]
        entries.append(BivarPoly(terms, u.backend))
    return PolyVector(entries, n)


def build_mops(u: MomentModel, max_degree: int, rng: random.Random | None = None) -> MopsCache:
    """Monic OPS up to ``max_degree``.

    ``rng`` shuffles the order in which Gram columns are assembled; the result
    must not depend on it.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    qs, hs = [], []
    for n in range(max_degree + 1):
        q = _monic_vector(u, n, rng)
        h = u.gram(q.entries)
        _check_gram_block(h, n)
        log.debug("built degree %d (%s)", n, u.family)
        qs.append(q)
        hs.append(h)
    return MopsCache(u, qs, hs)


def extend(cache: MopsCache, max_degree: int) -> MopsCache:
    """Cache covering at least ``max_degree`` (rebuilds only the missing degrees)."""
    u = cache.model
    for n in range(cache.max_degree + 1, max_degree + 1):
        q = _monic_vector(u, n, None)
        h = u.gram(q.entries)
        _check_gram_block(h, n)
        cache.Q.append(q)
        cache.H.append(h)
    return cache


def _right_divide(x: Matrix, h: Matrix) -> Matrix:
    # x @ h^{-1} for symmetric h
    return solve(h, x.T).T


def three_term_monic(cache: MopsCache, n: int, axis: str) -> tuple[Matrix, Matrix]:
    """``(C_{n,i}, D_{n,i})`` of ``x_i Q_n = L_{n,i} Q_{n+1} + C Q_n + D Q_{n-1}``."""
    if not 0 <= n <= cache.max_degree:
        raise ValueError(f"degree {n} not built (max {cache.max_degree})")
    key = (n, "x" if axis in ("x", 1) else "y")
    if key in cache._coeffs:
        return cache._coeffs[key]
    u = cache.model
    xq = multiply_by_axis(cache.Q[n], key[1])
    c = _right_divide(u.gram(xq, cache.Q[n].entries), cache.H[n])
    if n == 0:
        d = Matrix.zeros(1, 0, u.backend)
    else:
        d = _right_divide(u.gram(xq, cache.Q[n - 1].entries), cache.H[n - 1])
    cache._coeffs[key] = (c, d)
    return c, d


def m3tr_residual(cache: MopsCache, n: int, axis: str) -> list[BivarPoly]:
    """``x_i Q_n - L Q_{n+1} - C Q_n - D Q_{n-1}`` entry by entry."""
    if n + 1 > cache.max_degree:
        raise ValueError(f"residual at degree {n} needs Q_{n + 1}")
    c, d = three_term_monic(cache, n, axis)
    lhs = multiply_by_axis(cache.Q[n], axis)
    parts = [combine(shift_matrix(n, axis, cache.backend), cache.Q[n + 1].entries),
             combine(c, cache.Q[n].entries)]
    if n > 0:
        parts.append(combine(d, cache.Q[n - 1].entries))
    out = []
    for k, p in enumerate(lhs):
        for part in parts:
            p = p - part[k]
        out.append(p)
    return out


def orthogonality_defect(cache: MopsCache, n: int, m: int) -> Matrix:
    """``<u, Q_n Q_m^T>``; zero for ``m != n``."""
    return cache.model.gram(cache.Q[n].entries, cache.Q[m].entries)


def mops_determinant_oracle(u: MomentModel, n: int, k: int) -> BivarPoly:
    """``Q^n_{n-k,k} = det M_{(n-k,k)}(x, y) / det M_{n-1}``, expanding the border row by cofactors."""
    if not 0 <= k <= n:
        raise ValueError(f"entry index {k} out of range for degree {n}")
    if n == 0:
        return BivarPoly.constant(scalar.one(u.backend), u.backend)
    alpha = (n - k, k)
    low = monomials_upto(n - 1)
    s = len(low)
    m_prev = u.monomial_gram(low)
    denom = determinant(m_prev)
    if denom == 0 or (u.backend == FLOAT and abs(denom) == 0.0):
        raise SingularMatrixError(f"M_{n - 1} is singular")
    border = u.monomial_gram(low, [alpha])
    top = Matrix([list(m_prev.row(i)) + [border[i, 0]] for i in range(s)], u.backend, cols=s + 1)
    # last row of M_alpha holds the monomials low[0..s-1], then x^alpha
    last_row = low + [alpha]
    terms = {}
    for j, mono in enumerate(last_row):
        # delete the last row and column j: what remains is `top` without column j
        cof = determinant(minor_matrix(_append_dummy_row(top), s, j))
        sign = 1 if (s + j) % 2 == 0 else -1
        terms[mono] = terms.get(mono, scalar.zero(u.backend)) + sign * cof / denom
    return BivarPoly(terms, u.backend)


def _append_dummy_row(top: Matrix) -> Matrix:
    z = scalar.zero(top.backend)
    return Matrix(top.tolist() + [[z] * top.cols], top.backend, cols=top.cols)


def rebuild_from_recurrences(q0: PolyVector, coeffs: dict, max_degree: int) -> list[PolyVector]:
    """Regenerate ``Q_0..Q_N`` from ``Q_0`` and the ``(C, D)`` pairs alone.

    ``coeffs[(n, axis)]`` holds ``(C_{n,i}, D_{n,i})``. Entries ``0..n`` of
    ``Q_{n+1}`` come from the x relation, the last one from the y relation.
    """
    qs = [q0]
    for n in range(max_degree):
        rows = {}
        for axis in ("x", "y"):
            c, d = coeffs[(n, axis)]
            cur = multiply_by_axis(qs[n], axis)
            sub = combine(c, qs[n].entries)
            if n > 0:
                sub = [a + b for a, b in zip(sub, combine(d, qs[n - 1].entries))]
            rows[axis] = [a - b for a, b in zip(cur, sub)]
        qs.append(PolyVector(rows["x"] + [rows["y"][n]], n + 1))
    return qs
