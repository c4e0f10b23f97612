"""Weight-spec JSON objects <-> moment models.

``{"family": "product|simplex|freud|uvarov|christoffel", "params": {...},
"base": <nested spec>, "backend": "rational|float"}``
"""

from __future__ import annotations

from bops import scalar
from bops.io import matrix_from_json
from bops.moments.base import MomentModel
from bops.moments.families import FreudWeight, ProductWeight, SimplexJacobi
from bops.moments.modifications import ChristoffelSpec, UvarovSpec, christoffel_modify, uvarov_modify
from bops.scalar import FLOAT, RATIONAL

FAMILIES = ("product", "simplex", "freud", "uvarov", "christoffel")


class SpecError(ValueError):
    """Malformed or inconsistent weight spec."""


def default_backend(family: str) -> str:
    return FLOAT if family == "freud" else RATIONAL


def model_from_spec(spec: dict, backend: str | None = None) -> MomentModel:
    try:
        return _build(spec, backend)
    except SpecError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise SpecError(f"invalid weight spec: {exc}") from exc


def _build(spec: dict, backend: str | None) -> MomentModel:
    if not isinstance(spec, dict):
        raise SpecError("weight spec must be a JSON object")
    family = spec.get("family")
    if family not in FAMILIES:
        raise SpecError(f"unknown family {family!r}; expected one of {FAMILIES}")
    backend = spec.get("backend") or backend or None
    params = spec.get("params", {}) or {}

    if family in ("uvarov", "christoffel"):
        if "base" not in spec:
            raise SpecError(f"{family} spec needs a nested 'base' spec")
        base = _build(spec["base"], backend)
        if backend is not None and base.backend != backend:
            raise SpecError("modification backend differs from its base")
        backend = base.backend
        if family == "uvarov":
            nodes = matrix_from_json(params["nodes"], backend)
            if nodes.cols != 2:
                raise SpecError("Uvarov nodes must be an N x 2 array")
            lam = matrix_from_json(params["lambda"], backend)
            return uvarov_modify(UvarovSpec(base, tuple(tuple(r) for r in nodes), lam))
        vals = [scalar.parse_scalar(params.get(k, 0), backend) for k in "abcd"]
        return christoffel_modify(ChristoffelSpec(base, *vals))

    backend = backend or default_backend(family)
    scalar.check_backend(backend)
    if family == "freud":
        if backend != FLOAT:
            raise SpecError("the Freud family requires the float backend")
        return FreudWeight(*(float(scalar.parse_scalar(params.get(k, 0), FLOAT)) for k in "abc"))
    if family == "simplex":
        return SimplexJacobi(scalar.parse_scalar(params["alpha"], backend),
                             scalar.parse_scalar(params["gamma"], backend), backend)
    w1 = params.get("w1", "legendre")
    return ProductWeight(w1, params.get("w2", w1), backend)
