"""Structural checks for OPS of reflexive functionals, collected into one report."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from bops.errors import NotPositiveDefiniteError
from bops.matrix import Matrix, rank
from bops.moments.base import MomentModel, reflexive_violation as model_reflexive_violation
from bops.ops.mops import MopsCache, build_mops, m3tr_residual, rebuild_from_recurrences, three_term_monic
from bops.ops.orthonormal import build_orthonormal
from bops.poly import is_reflexive_vector, reflexive_violation
from bops.scalar import FLOAT, RATIONAL, DEFAULT_TOL, Tolerance
from bops.structure import block_diag_pair, is_centrosymmetric, is_reverse_pair, reverse_violation

log = logging.getLogger(__name__)

CHECK_KEYS = ("reflexive_Q", "H_centrosymmetric", "C_reverse_pair", "D_reverse_pair",
              "blockdiag_centrosymmetric", "A_reverse_pair", "B_reverse_pair", "P_reflexive")
# checks whose failure falsifies the reflexive hypotheses
CONVERSE_KEYS = ("reflexive_Q", "H_centrosymmetric", "C_reverse_pair", "D_reverse_pair")


@dataclass
class DegreeChecks:
    n: int
    checks: dict
    max_violation: float | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if v is False]

    def to_json(self) -> dict:
        checks = dict(self.checks)
        checks["max_violation"] = self.max_violation
        out = {"n": self.n, "checks": checks}
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


@dataclass
class CheckReport:
    weight: dict
    backend: str
    degrees: list[DegreeChecks]
    model_reflexive: bool
    recurrences_reflexive: bool
    warnings: list[str] = field(default_factory=list)

    @property
    def converse_consistent(self) -> bool:
        """A non-reflexive model must trip at least one of the reflexivity checks."""
        if self.model_reflexive:
            return True
        return any(d.checks.get(k) is False for d in self.degrees for k in CONVERSE_KEYS)

    @property
    def passed(self) -> bool:
        return all(d.passed for d in self.degrees) and self.converse_consistent

    def failures(self) -> list[tuple[int, str]]:
        return [(d.n, k) for d in self.degrees for k in d.failed()]

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "backend": self.backend,
            "degrees": [d.to_json() for d in self.degrees],
            "model_reflexive": self.model_reflexive,
            "recurrences_reflexive": self.recurrences_reflexive,
            "converse_consistent": self.converse_consistent,
            "passed": self.passed,
            "warnings": list(self.warnings),
        }


def _pair(x: Matrix, y: Matrix, tol: Tolerance) -> tuple[bool, float]:
    return is_reverse_pair(x, y, tol), reverse_violation(x, y)


def theorem_check_suite(u: MomentModel, max_degree: int, tol: Tolerance = DEFAULT_TOL,
                        cache: MopsCache | None = None) -> CheckReport:
    """Run every structural check for degrees ``0..max_degree``.

    The MOPS is built to ``max_degree + 1`` (the orthonormal ``A_N`` needs
    ``D_{N+1}``). Orthonormal checks run only on the float backend and are
    ``None`` otherwise.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if cache is None:
        cache = build_mops(u, max_degree + 1)
    model_ok = model_reflexive_violation(u, 2 * max_degree + 2, tol) is None

    ortho = None
    warnings = []
    if u.backend == FLOAT:
        try:
            ortho = build_orthonormal(cache, max_degree, tol)
        except NotPositiveDefiniteError as exc:
            warnings.append(f"orthonormal layer skipped: {exc}")

    degrees = []
    for n in range(max_degree + 1):
        q, h = cache.Q[n], cache.H[n]
        c1, d1 = three_term_monic(cache, n, "x")
        c2, d2 = three_term_monic(cache, n, "y")
        viol = [reflexive_violation(q), reverse_violation(h, h)]
        checks = {"reflexive_Q": is_reflexive_vector(q, tol), "H_centrosymmetric": is_centrosymmetric(h, tol)}
        checks["C_reverse_pair"], v = _pair(c1, c2, tol)
        viol.append(v)
        checks["D_reverse_pair"], v = _pair(d1, d2, tol)
        viol.append(v)
        checks["blockdiag_centrosymmetric"] = (is_centrosymmetric(block_diag_pair(c1, c2), tol)
                                               and is_centrosymmetric(block_diag_pair(d1, d2), tol))
        if ortho is not None:
            checks["A_reverse_pair"], v = _pair(ortho.A[(n, "x")], ortho.A[(n, "y")], tol)
            viol.append(v)
            checks["B_reverse_pair"], v = _pair(ortho.B[(n, "x")], ortho.B[(n, "y")], tol)
            viol.append(v)
            checks["P_reflexive"] = is_reflexive_vector(ortho.P[n], tol)
            viol.append(reflexive_violation(ortho.P[n]))
        else:
            checks["A_reverse_pair"] = checks["B_reverse_pair"] = checks["P_reflexive"] = None
        deg = DegreeChecks(n, checks, max(viol))
        for ax in ("x", "y"):
            if not all(p.is_zero(tol) for p in m3tr_residual(cache, n, ax)):
                # happens when multiplication by x_i is not symmetric for the form (non-diagonal masses)
                deg.warnings.append(f"three-term relation in {ax} leaves a nonzero residual")
        if n >= 1:
            for ax, d in (("x", d1), ("y", d2)):
                if rank(d, tol) != n:
                    deg.warnings.append(f"D_{{{n},{ax}}} is not of full rank {n}")
        degrees.append(deg)
        log.info("degree %d: %s", n, "pass" if deg.passed else f"fail {deg.failed()}")

    coeffs = {(n, ax): three_term_monic(cache, n, ax) for n in range(max_degree + 1) for ax in ("x", "y")}
    rebuilt = rebuild_from_recurrences(cache.Q[0], coeffs, max_degree + 1)
    rec_ok = all(is_reflexive_vector(v, tol) for v in rebuilt)
    return CheckReport(u.to_spec(), u.backend, degrees, model_ok, rec_ok, warnings)


def recurrences_imply_reflexive(cache: MopsCache, max_degree: int, tol: Tolerance = DEFAULT_TOL) -> bool | None:
    """Converse direction: if every ``C``/``D`` pair reverses, the rebuilt ``Q_n`` must be reflexive.

    Returns ``None`` when the hypothesis does not hold.
    """
    coeffs = {}
    for n in range(max_degree):
        for ax in ("x", "y"):
            coeffs[(n, ax)] = three_term_monic(cache, n, ax)
        if not (is_reverse_pair(coeffs[(n, "x")][0], coeffs[(n, "y")][0], tol)
                and is_reverse_pair(coeffs[(n, "x")][1], coeffs[(n, "y")][1], tol)):
            return None
    return all(is_reflexive_vector(v, tol) for v in rebuild_from_recurrences(cache.Q[0], coeffs, max_degree))
