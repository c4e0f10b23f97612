from fractions import Fraction as F

import numpy as np
import pytest

from bops.errors import NotPositiveDefiniteError
from bops.matrix import Matrix, rank
from bops.moments import freud_weight, product_weight, simplex_jacobi, uvarov
from bops.ops import build_mops, build_orthonormal, o3tr_residual, orthonormality_defect, three_term_monic
from bops.poly import is_reflexive_vector
from bops.scalar import Tolerance
from bops.structure import is_reverse_pair


def _relative_o3tr(system, n, axis):
    res = max((abs(c) for p in o3tr_residual(system, n, axis) for _, c in p.terms()), default=0.0)
    scale = max(abs(c) for p in system.P[n + 1] for _, c in p.terms())
    return res / scale


def test_first_orthonormal_vector_of_product_legendre():
    s = build_orthonormal(build_mops(product_weight("legendre"), 1), 0)
    assert s.P[0][0].coeff(0, 0) == pytest.approx(0.5)


@pytest.mark.parametrize("model", [simplex_jacobi(1, 2), simplex_jacobi(1.0, 2.0, "float")], ids=["exact", "float"])
def test_orthonormality_and_three_term_residual(model):
    s = build_orthonormal(build_mops(model, 5), 4)
    for n in range(5):
        assert orthonormality_defect(s, n) < 1e-9
        for ax in ("x", "y"):
            assert _relative_o3tr(s, n, ax) < 1e-10


def test_reflexive_structure_of_orthonormal_layer():
    s = build_orthonormal(build_mops(simplex_jacobi(1, F(1, 2)), 5), 4)
    tol = Tolerance(1e-9, 1e-9)
    for n in range(5):
        assert is_reflexive_vector(s.P[n], tol)
        assert is_reverse_pair(s.A[(n, "x")], s.A[(n, "y")], tol)
        assert is_reverse_pair(s.B[(n, "x")], s.B[(n, "y")], tol)
        assert rank(s.A[(n, "x")]) == n + 1
        assert s.A[(n, "x")].shape == (n + 1, n + 2)


def test_b_is_similar_to_c():
    c = build_mops(simplex_jacobi(1, 2), 4)
    s = build_orthonormal(c, 3)
    for n in range(4):
        cm = three_term_monic(c, n, "x")[0].to_float()
        ev_c = np.sort(np.linalg.eigvals(np.array(cm.tolist())).real)
        ev_b = np.sort(np.linalg.eigvals(np.array(s.B[(n, "x")].tolist())).real)
        assert np.allclose(ev_b, ev_c, atol=1e-12)


def test_b_is_symmetric_for_positive_weights():
    s = build_orthonormal(build_mops(freud_weight(1, 1, 1), 4), 3)
    for n in range(4):
        b = s.B[(n, "x")]
        assert b.equals(b.T, Tolerance(1e-9, 1e-9))


def test_indefinite_gram_block_is_rejected():
    # a negative point mass makes the form indefinite but still quasi-definite
    u = uvarov(simplex_jacobi(1, 2), [(0, 0)], Matrix([[-1]]))
    with pytest.raises(NotPositiveDefiniteError):
        build_orthonormal(build_mops(u, 2), 1)
