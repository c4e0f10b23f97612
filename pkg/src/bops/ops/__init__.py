"""Monic and orthonormal OPS, three-term matrices, oracles and structural checks."""

from bops.ops.checks import CheckReport, DegreeChecks, recurrences_imply_reflexive, theorem_check_suite
from bops.ops.christoffel import christoffel_connection, connection_residual
from bops.ops.closed_forms import closed_form_product_matrices, closed_form_simplex_C
from bops.ops.mops import (
    MopsCache,
    build_mops,
    extend,
    m3tr_residual,
    mops_determinant_oracle,
    orthogonality_defect,
    rebuild_from_recurrences,
    three_term_monic,
)
from bops.ops.orthonormal import OrthonormalSystem, build_orthonormal, o3tr_residual, orthonormality_defect

__all__ = [
    "CheckReport", "DegreeChecks", "MopsCache", "OrthonormalSystem",
    "build_mops", "build_orthonormal", "christoffel_connection", "closed_form_product_matrices",
    "closed_form_simplex_C", "connection_residual", "extend", "m3tr_residual", "mops_determinant_oracle",
    "o3tr_residual", "orthogonality_defect", "orthonormality_defect", "rebuild_from_recurrences",
    "recurrences_imply_reflexive", "theorem_check_suite", "three_term_monic",
]
