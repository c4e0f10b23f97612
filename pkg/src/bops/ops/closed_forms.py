"""Known closed forms for three-term coefficient matrices of two weight families."""

from __future__ import annotations

from bops import scalar
from bops.matrix import Matrix
from bops.moments.univariate import UnivariateRecurrence
from bops.poly import _axis_exponent
from bops.scalar import RATIONAL
from bops.structure import reverse


def _is_x(axis) -> bool:
    return _axis_exponent(axis) == (1, 0)


def closed_form_simplex_C(n: int, alpha, gamma, axis="x") -> Matrix:
    """Monic ``C_{n,i}`` for the simplex weight ``(x y)^alpha (1 - x - y)^gamma``.

    Lower bidiagonal for ``x``; the ``y`` matrix is its 180-degree rotation.
    Float inputs give a float matrix, anything else is treated exactly.
    """
    backend = scalar.FLOAT if isinstance(alpha, float) or isinstance(gamma, float) else RATIONAL
    a = scalar.coerce(alpha if backend == scalar.FLOAT else scalar.parse_rational(alpha), backend)
    g = scalar.coerce(gamma if backend == scalar.FLOAT else scalar.parse_rational(gamma), backend)
    if a <= -1 or g <= -1:
        raise ValueError("simplex parameters must exceed -1")
    lo = 2 * a + g + 2 * n + 1
    hi = lo + 2

    def entry(i, j):
        if i == j:
            m = n - i
            return (m + 1) * (a + m + 1) / hi - m * (a + m) / lo
        if i == j + 1:
            return -2 * (j + 1) * (a + j + 1) / (lo * hi)
        return scalar.zero(backend)

    c1 = Matrix.from_function(n + 1, n + 1, entry, backend)
    return c1 if _is_x(axis) else reverse(c1)


def closed_form_product_matrices(r: UnivariateRecurrence, n: int, axis="x") -> tuple[Matrix, Matrix, Matrix]:
    """``(Lambda_{n,i}, Gamma_{n,i}, Upsilon_{n,i})`` for ``w(x) w(y)`` built from one 1-D recurrence.

    Entry ``k`` of the degree-``n`` vector is ``p_{n-k}(x) p_k(y)``.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    if r.max_index < n:
        raise ValueError(f"recurrence known up to index {r.max_index}, need {n}")
    backend = scalar.infer_backend(list(r.lam) + list(r.gamma) + list(r.upsilon))
    z = scalar.zero(backend)
    lam = Matrix.from_function(n + 1, n + 2, lambda k, j: r.lam[n - k] if j == k else z, backend)
    gam = Matrix.diag([r.gamma[n - k] for k in range(n + 1)], backend)
    ups = Matrix.from_function(n + 1, n, lambda k, j: r.upsilon[n - k] if j == k else z, backend)
    if _is_x(axis):
        return lam, gam, ups
    return reverse(lam), reverse(gam), reverse(ups)
