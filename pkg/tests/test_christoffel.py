from fractions import Fraction as F

import pytest

from bops.moments import christoffel, product_weight, simplex_jacobi
from bops.ops import build_mops, christoffel_connection, connection_residual
from bops.structure import is_centrosymmetric


@pytest.fixture(scope="module")
def caches():
    base = simplex_jacobi(1, 2)
    mod = christoffel(base, 1, 1, 1, 1)
    return build_mops(base, 4), build_mops(mod, 4)


def test_first_degree_has_no_second_connection_matrix(caches):
    base, mod = caches
    r, s = christoffel_connection(base, mod, 1)
    assert s is None
    assert r.shape == (2, 1)
    assert all(p.is_zero() for p in connection_residual(base, mod, 1))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_connection_is_exact_and_centrosymmetric(caches, n):
    base, mod = caches
    r, s = christoffel_connection(base, mod, n)
    assert r.shape == (n + 1, n) and s.shape == (n + 1, n - 1)
    assert is_centrosymmetric(r) and is_centrosymmetric(s)
    assert all(p.is_zero() for p in connection_residual(base, mod, n))


def test_connection_for_asymmetric_multiplier_on_product_weight():
    base = product_weight("legendre")
    mod = christoffel(base, F(1, 2), 3, -1, 5)
    cb, cm = build_mops(base, 3), build_mops(mod, 3)
    for n in range(1, 4):
        assert all(p.is_zero() for p in connection_residual(cb, cm, n))


def test_mismatched_models_are_rejected(caches):
    base, _ = caches
    other = build_mops(christoffel(simplex_jacobi(2, 2), 1, 1, 1, 1), 2)
    with pytest.raises(ValueError):
        christoffel_connection(base, other, 1)
    with pytest.raises(ValueError):
        christoffel_connection(base, base, 1)
    with pytest.raises(ValueError):
        christoffel_connection(base, caches[1], 0)
