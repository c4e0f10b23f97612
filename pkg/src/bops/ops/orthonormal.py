"""Orthonormal systems ``P_n = H_n^{-1/2} Q_n`` and their three-term matrices."""

from __future__ import annotations

from dataclasses import dataclass, field

from bops.eigen import spd_sqrt
from bops.matrix import Matrix
from bops.ops.mops import MopsCache, extend, three_term_monic
from bops.poly import BivarPoly, PolyVector, apply_change_of_basis, combine, multiply_by_axis
from bops.scalar import DEFAULT_TOL, Tolerance

AXES = ("x", "y")


@dataclass
class OrthonormalSystem:
    """``P[n]`` for ``n <= N + 1`` and ``A[(n, axis)]``, ``B[(n, axis)]`` for ``n <= N``."""

    cache: MopsCache
    max_degree: int
    P: list[PolyVector]
    H_sqrt: list[Matrix]
    H_isqrt: list[Matrix]
    A: dict = field(default_factory=dict)
    B: dict = field(default_factory=dict)

    @property
    def model(self):
        return self.cache.model


def build_orthonormal(cache: MopsCache, max_degree: int, tol: Tolerance = DEFAULT_TOL) -> OrthonormalSystem:
    """Orthonormalize a MOPS up to ``max_degree``.

    Needs ``Q_{N+1}`` for ``A_N``; the cache is extended if necessary. A
    rational cache is rounded to float first (exact Q, H, C, D, then one
    rounding), which is both faster and more accurate than a float rebuild.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    extend(cache, max_degree + 1)
    for n in range(max_degree + 1):
        for ax in AXES:
            three_term_monic(cache, n, ax)
    three_term_monic(cache, max_degree + 1, "x")
    three_term_monic(cache, max_degree + 1, "y")
    fc = cache.to_float()
    sq = [spd_sqrt(h, tol) for h in fc.H[: max_degree + 2]]
    isq = [spd_sqrt(h, tol, inverse=True) for h in fc.H[: max_degree + 2]]
    ps = [apply_change_of_basis(isq[n], fc.Q[n]) for n in range(max_degree + 2)]
    system = OrthonormalSystem(fc, max_degree, ps, sq, isq)
    for n in range(max_degree + 1):
        for ax in AXES:
            c, _ = three_term_monic(fc, n, ax)
            _, d_next = three_term_monic(fc, n + 1, ax)
            system.A[(n, ax)] = sq[n] @ d_next.T @ isq[n + 1]
            system.B[(n, ax)] = isq[n] @ c @ sq[n]
    return system


def o3tr_residual(system: OrthonormalSystem, n: int, axis: str) -> list[BivarPoly]:
    """``x_i P_n - A_n P_{n+1} - B_n P_n - A_{n-1}^T P_{n-1}`` entry by entry."""
    ax = "x" if axis in ("x", 1) else "y"
    if not 0 <= n <= system.max_degree:
        raise ValueError(f"degree {n} outside 0..{system.max_degree}")
    parts = [combine(system.A[(n, ax)], system.P[n + 1].entries),
             combine(system.B[(n, ax)], system.P[n].entries)]
    if n > 0:
        parts.append(combine(system.A[(n - 1, ax)].T, system.P[n - 1].entries))
    out = []
    for k, p in enumerate(multiply_by_axis(system.P[n], ax)):
        for part in parts:
            p = p - part[k]
        out.append(p)
    return out


def orthonormality_defect(system: OrthonormalSystem, n: int) -> float:
    """Frobenius norm of ``<u, P_n P_n^T> - I``."""
    g = system.model.gram(system.P[n].entries)
    return (g - Matrix.identity(g.rows, g.backend)).frobenius()

