"""JSON encodings of matrices, polynomials and polynomial vectors.

Rational scalars serialize as ``"p/q"`` strings (lowest terms, ``q > 0``;
integers as ``"p"``); float scalars as JSON numbers.
"""

from __future__ import annotations

from fractions import Fraction

from bops import scalar
from bops.matrix import Matrix
from bops.poly import BivarPoly, PolyVector
from bops.scalar import FLOAT, RATIONAL


def scalar_to_json(v):
    if isinstance(v, Fraction):
        return scalar.format_scalar(v)
    return float(v)


def scalar_from_json(v, backend: str | None = None):
    """Strings decode as rationals, numbers as floats unless ``backend`` says otherwise."""
    if backend is None:
        backend = RATIONAL if isinstance(v, str) else FLOAT
    if backend == RATIONAL:
        if isinstance(v, float):
            raise ValueError(f"float {v!r} in a rational context; encode rationals as 'p/q' strings")
        return scalar.parse_rational(v)
    if isinstance(v, str):
        return scalar.to_float(scalar.parse_rational(v))
    return scalar.to_float(v)


def matrix_to_json(m: Matrix) -> dict:
    return {"rows": m.rows, "cols": m.cols, "data": [[scalar_to_json(v) for v in r] for r in m]}


def matrix_from_json(obj, backend: str | None = None) -> Matrix:
    if isinstance(obj, list):
        obj = {"rows": len(obj), "cols": len(obj[0]) if obj else 0, "data": obj}
    data = obj["data"]
    if backend is None:
        flat = [v for r in data for v in r]
        backend = FLOAT if any(not isinstance(v, str) and not isinstance(v, int) for v in flat) else RATIONAL
    m = Matrix([[scalar_from_json(v, backend) for v in r] for r in data], backend, cols=obj["cols"])
    if m.rows != obj["rows"]:
        raise ValueError("row count does not match data")
    return m


def poly_to_json(p: BivarPoly) -> dict:
    return {"terms": [{"i": i, "j": j, "c": scalar_to_json(c)} for (i, j), c in p.terms()]}


def poly_from_json(obj, backend: str | None = None) -> BivarPoly:
    terms = obj["terms"]
    if backend is None:
        backend = FLOAT if any(not isinstance(t["c"], (str, int)) for t in terms) else RATIONAL
    return BivarPoly({(t["i"], t["j"]): scalar_from_json(t["c"], backend) for t in terms}, backend)


def polyvector_to_json(v: PolyVector) -> dict:
    return {"degree": v.degree, "entries": [poly_to_json(p) for p in v]}


def polyvector_from_json(obj, backend: str | None = None) -> PolyVector:
    return PolyVector([poly_from_json(e, backend) for e in obj["entries"]], obj["degree"])
