import json
from fractions import Fraction as F

import pytest

from bops.io import (
    matrix_from_json, matrix_to_json, poly_from_json, poly_to_json, polyvector_from_json, polyvector_to_json,
    scalar_from_json, scalar_to_json,
)
from bops.matrix import Matrix
from bops.poly import BivarPoly, canonical_vector
from bops.scalar import FLOAT


def test_scalars():
    assert scalar_to_json(F(-3, 6)) == "-1/2"
    assert scalar_from_json("-1/2") == F(-1, 2)
    assert scalar_from_json(0.25) == 0.25
    with pytest.raises(ValueError):
        scalar_from_json(0.25, "rational")


def test_matrix_roundtrip_through_text():
    m = Matrix([[F(1, 3), 2], [0, F(-7, 5)]])
    again = matrix_from_json(json.loads(json.dumps(matrix_to_json(m))))
    assert again == m
    f = Matrix([[0.1, 2.0]], FLOAT)
    assert matrix_from_json(json.loads(json.dumps(matrix_to_json(f)))) == f


def test_matrix_row_count_is_validated():
    with pytest.raises(ValueError):
        matrix_from_json({"rows": 3, "cols": 1, "data": [["1"]]})


def test_poly_and_vector_roundtrip():
    p = BivarPoly({(2, 0): F(1, 2), (0, 1): -3})
    assert poly_from_json(json.loads(json.dumps(poly_to_json(p)))) == p
    v = canonical_vector(3)
    assert polyvector_from_json(json.loads(json.dumps(polyvector_to_json(v)))) == v
