import random
from fractions import Fraction as F

import pytest
import sympy as sp

from bops.errors import QuasiDefinitenessError, SingularMatrixError
from bops.matrix import Matrix
from bops.moments import freud_weight, product_weight, simplex_jacobi, uvarov
from bops.moments.base import MomentTable
from bops.ops import (
    build_mops, extend, m3tr_residual, mops_determinant_oracle, orthogonality_defect, rebuild_from_recurrences,
    recurrences_imply_reflexive, three_term_monic,
)
from bops.poly import BivarPoly, is_reflexive_vector
from bops.scalar import FLOAT, RATIONAL, Tolerance

X, Y = sp.symbols("x y")


def _sympy_mops(moment, n):
    """Independent oracle: solve the orthogonality conditions symbolically."""
    low = [(d - j, j) for d in range(n) for j in range(d + 1)]
    if n == 0:
        return [sp.Integer(1)]
    out = []
    for k in range(n + 1):
        a = (n - k, k)
        cs = sp.symbols(f"c0:{len(low)}")
        eqs = [moment(a[0] + b[0], a[1] + b[1]) + sum(c * moment(e[0] + b[0], e[1] + b[1]) for c, e in zip(cs, low))
               for b in low]
        sol = sp.solve(eqs, cs, dict=True)[0]
        out.append(sp.expand(X**a[0] * Y**a[1] + sum(sol[c] * X**e[0] * Y**e[1] for c, e in zip(cs, low))))
    return out


def _to_sympy(p: BivarPoly):
    return sum(sp.Rational(c.numerator, c.denominator) * X**i * Y**j for (i, j), c in p.terms())


def test_product_legendre_first_degree_is_canonical():
    c = build_mops(product_weight("legendre"), 2)
    assert c.Q[1][0] == BivarPoly({(1, 0): 1}) and c.Q[1][1] == BivarPoly({(0, 1): 1})
    assert c.Q[0][0] == BivarPoly({(0, 0): 1})


@pytest.mark.parametrize("alpha,gamma", [(1, 2), (F(1, 2), 3), (2, F(3, 2))])
def test_simplex_first_degree(alpha, gamma):
    c = build_mops(simplex_jacobi(alpha, gamma), 1)
    shift = (F(alpha) + 1) / (2 * F(alpha) + F(gamma) + 3)  # mean of x under the Dirichlet law
    assert c.Q[1][0] == BivarPoly({(1, 0): 1, (0, 0): -shift})
    assert c.Q[1][1] == BivarPoly({(0, 1): 1, (0, 0): -shift})


def test_gram_construction_matches_symbolic_oracle():
    u = simplex_jacobi(1, 2)
    c = build_mops(u, 3)
    mom = lambda m, n: sp.Rational(u.moment(m, n).numerator, u.moment(m, n).denominator)
    for n in range(4):
        ref = _sympy_mops(mom, n)
        assert [sp.expand(_to_sympy(p) - r) for p, r in zip(c.Q[n], ref)] == [0] * (n + 1)


def test_uvarov_example_against_symbolic_oracle():
    base = simplex_jacobi(1, F(1, 2))
    u = uvarov(base, [(1, 0), (0, 0), (0, 1)], Matrix.identity(3) * F(1, 2))
    c = build_mops(u, 2)
    mom = lambda m, n: sp.Rational(u.moment(m, n).numerator, u.moment(m, n).denominator)
    for n in (1, 2):
        ref = _sympy_mops(mom, n)
        assert all(sp.expand(_to_sympy(p) - r) == 0 for p, r in zip(c.Q[n], ref))


def test_uvarov_unit_masses_give_the_target_first_degree_shift():
    u = uvarov(simplex_jacobi(1, F(1, 2)), [(1, 0), (0, 0), (0, 1)], Matrix.identity(3))
    q1 = build_mops(u, 1).Q[1]
    assert q1[0].coeff(0, 0) == q1[1].coeff(0, 0) == F(-10459, 31361)


UVAROV_FORM = uvarov(simplex_jacobi(1, 2), [(F(1, 3), F(1, 3)), (1, 0)], Matrix([[1, F(1, 2)], [F(1, 2), 1]]))
UVAROV_DIAG = uvarov(simplex_jacobi(1, 2), [(F(1, 3), F(1, 3)), (1, 0)], Matrix([[1, 0], [0, 2]]))


@pytest.mark.parametrize("model", [
    simplex_jacobi(1, 2), product_weight("legendre", "chebyshev1"), product_weight("laguerre", "legendre"), UVAROV_DIAG,
], ids=["simplex", "legendre-cheb1", "laguerre-legendre", "uvarov-diagonal"])
def test_invariants_exact(model):
    c = build_mops(model, 4)
    for n in range(5):
        assert c.Q[n].is_monic()
        assert c.H[n] == c.H[n].T
        for m in range(n):
            assert orthogonality_defect(c, n, m).is_zero()
        if n < 4:
            for axis in ("x", "y"):
                assert all(p.is_zero() for p in m3tr_residual(c, n, axis))


def test_non_diagonal_masses_break_the_three_term_relation():
    # (x f, g) != (f, x g) once masses couple distinct nodes, so x Q_n leaks below degree n - 1
    c = build_mops(UVAROV_FORM, 3)
    for n in range(4):
        for m in range(n):
            assert orthogonality_defect(c, n, m).is_zero()
    assert all(p.is_zero() for p in m3tr_residual(c, 1, "x"))
    assert not all(p.is_zero() for p in m3tr_residual(c, 2, "x"))


def test_float_invariants():
    c = build_mops(freud_weight(1, 1, 1), 5)
    for n in range(6):
        for m in range(n):
            assert orthogonality_defect(c, n, m).frobenius() < 1e-9
        if n < 5:
            assert all(p.is_zero(Tolerance(1e-9, 1e-9)) for p in m3tr_residual(c, n, "x"))
            c_mat, _ = three_term_monic(c, n, "y")
            assert c_mat.max_abs() < 1e-12  # odd moments vanish


def test_result_does_not_depend_on_gram_column_order():
    u = simplex_jacobi(1, F(1, 2))
    ref = build_mops(u, 4)
    for seed in range(3):
        other = build_mops(u, 4, rng=random.Random(seed))
        assert other.Q == ref.Q and other.H == ref.H


def test_extend_matches_direct_build():
    u = simplex_jacobi(1, 2)
    assert extend(build_mops(u, 1), 3).Q == build_mops(u, 3).Q


@pytest.mark.parametrize("n", range(4))
def test_determinant_oracle_agrees(n):
    for u in (simplex_jacobi(1, 2), product_weight("legendre")):
        c = build_mops(u, n)
        for k in range(n + 1):
            assert mops_determinant_oracle(u, n, k) == c.Q[n][k]


def test_determinant_oracle_examples():
    u = product_weight("legendre")
    assert mops_determinant_oracle(u, 0, 0) == BivarPoly({(0, 0): 1})
    assert mops_determinant_oracle(u, 2, 1) == BivarPoly({(1, 1): 1})
    with pytest.raises(ValueError):
        mops_determinant_oracle(u, 2, 3)


class _Degenerate(MomentTable):
    """Point mass at the origin: every moment except mu_00 vanishes."""

    family = "point"

    def _compute(self, m, n):
        return F(1) if m == n == 0 else F(0)


def test_quasi_definiteness_failure_names_degree():
    with pytest.raises(QuasiDefinitenessError) as info:
        build_mops(_Degenerate(RATIONAL), 3)
    assert info.value.degree == 1
    assert "degree 1" in str(info.value)
    with pytest.raises(SingularMatrixError):
        mops_determinant_oracle(_Degenerate(RATIONAL), 2, 0)


def test_three_term_requires_built_degree():
    c = build_mops(simplex_jacobi(1, 2), 2)
    with pytest.raises(ValueError):
        three_term_monic(c, 3, "x")
    with pytest.raises(ValueError):
        m3tr_residual(c, 2, "x")


def test_recurrences_rebuild_the_mops():
    c = build_mops(simplex_jacobi(1, 2), 4)
    coeffs = {(n, ax): three_term_monic(c, n, ax) for n in range(4) for ax in ("x", "y")}
    assert rebuild_from_recurrences(c.Q[0], coeffs, 4) == c.Q


def test_reverse_pairs_in_recurrences_imply_reflexive_vectors():
    c = build_mops(simplex_jacobi(2, F(3, 2)), 4)
    assert recurrences_imply_reflexive(c, 4) is True
    assert all(is_reflexive_vector(q) for q in c.Q)
    # hypothesis fails for a non-reflexive functional, so nothing is claimed
    assert recurrences_imply_reflexive(build_mops(product_weight("legendre", "chebyshev1"), 3), 3) is None
