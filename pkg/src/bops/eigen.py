"""Symmetric eigendecomposition by cyclic Jacobi rotations, and the SPD square root."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from bops.errors import BackendError, ConvergenceError, NotPositiveDefiniteError, ShapeError
from bops.matrix import Matrix
from bops.scalar import DEFAULT_TOL, FLOAT, Tolerance

MAX_SWEEPS = 100
OFF_DIAGONAL_RTOL = 1e-12
# eigenvalues below this fraction of the spectral radius count as non-positive
SPD_RTOL = 1e-13


@dataclass(frozen=True)
class EigenDecomposition:
    """``x = rotation @ diag(eigenvalues) @ rotation.T``, eigenvalues descending."""

    rotation: Matrix
    eigenvalues: tuple[float, ...]

    def reconstruct(self) -> Matrix:
        r = np.array(self.rotation.tolist(), dtype=float)
        return Matrix((r * np.array(self.eigenvalues)) @ r.T, FLOAT)


def _off_norm(a: np.ndarray) -> float:
    # direct sum: subtracting the diagonal from ||a||_F^2 cancels catastrophically
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _sweep(a: np.ndarray, v: np.ndarray) -> None:
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            # rotation angle chosen to annihilate a[p, q] (Golub & Van Loan 8.5.2)
            diff = a[q, q] - a[p, p]
            if abs(diff) > 1e150 * abs(apq):
                t = apq / diff  # tau * tau would overflow; t ~ 1 / (2 tau)
            else:
                tau = diff / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            ap = a[:, p].copy()
            aq = a[:, q].copy()
            a[:, p] = c * ap - s * aq
            a[:, q] = s * ap + c * aq
            rp = a[p, :].copy()
            rq = a[q, :].copy()
            a[p, :] = c * rp - s * rq
            a[q, :] = s * rp + c * rq
            a[p, q] = a[q, p] = 0.0
            vp = v[:, p].copy()
            v[:, p] = c * vp - s * v[:, q]
            v[:, q] = s * vp + c * v[:, q]


def jacobi_eigh(a: np.ndarray, max_sweeps: int = MAX_SWEEPS, polish: bool = True) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi on a symmetric ndarray; returns (eigenvalues, rotation) unsorted.

    Sweeps until the off-diagonal norm is at most ``1e-12 * ||a||_F``. With
    ``polish`` one more sweep follows: the threshold is absolute in scale, so
    eigenvalues far below ``||a||`` would otherwise keep only
    ``1e-12 * cond(a)`` relative accuracy.
    """
    a = np.array(a, dtype=float, copy=True)
    v = np.eye(a.shape[0])
    target = OFF_DIAGONAL_RTOL * float(np.linalg.norm(a))
    for _ in range(max_sweeps):
        if _off_norm(a) <= target:
            if polish:
                _sweep(a, v)
            return np.diag(a).copy(), v
        _sweep(a, v)
    if _off_norm(a) <= target:
        return np.diag(a).copy(), v
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", estimate=_off_norm(a))


def _require_float_symmetric(x: Matrix, tol: Tolerance) -> np.ndarray:
    if x.backend != FLOAT:
        raise BackendError("eigendecomposition needs the float backend; use to_float() first")
    if not x.is_square:
        raise ShapeError(f"eigendecomposition needs a square matrix, got {x.shape}")
    if not x.is_symmetric(tol):
        raise ValueError("matrix is not symmetric within tolerance")
    a = np.array(x.tolist(), dtype=float).reshape(x.rows, x.cols)
    return 0.5 * (a + a.T)


def symmetric_eigen(x: Matrix, tol: Tolerance = DEFAULT_TOL) -> EigenDecomposition:
    a = _require_float_symmetric(x, tol)
    w, v = jacobi_eigh(a)
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(Matrix(v[:, order], FLOAT), tuple(float(e) for e in w[order]))


def spd_sqrt(x: Matrix, tol: Tolerance = DEFAULT_TOL, inverse: bool = False) -> Matrix:
    """Unique SPD square root ``R D^(1/2) R^T`` (or its inverse when ``inverse``)."""
    a = _require_float_symmetric(x, tol)
    w, v = jacobi_eigh(a)
    # relative floor: Gram blocks of unnormalized weights can be tiny yet well conditioned
    floor = SPD_RTOL * (float(np.max(np.abs(w))) if w.size else 0.0)
    for e in w:
        if e <= floor:
            raise NotPositiveDefiniteError(float(e), f"matrix is not positive definite: eigenvalue {e:.6g}")
    d = 1.0 / np.sqrt(w) if inverse else np.sqrt(w)
    s = (v * d) @ v.T
    return Matrix(0.5 * (s + s.T), FLOAT)
