"""Uvarov (point-mass) and Christoffel (polynomial multiple) modifications."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from bops import scalar
from bops.errors import BackendError, ShapeError
from bops.matrix import Matrix
from bops.moments.base import MOMENT_TABLE, NORMALIZED, RAW, MomentModel, MomentTable
from bops.scalar import DEFAULT_TOL


@dataclass(frozen=True)
class UvarovSpec:
    base: MomentModel
    nodes: tuple[tuple, ...]
    masses: Matrix  # the symmetric PSD matrix Lambda

    def __post_init__(self):
        nodes = tuple((scalar.coerce(x, self.base.backend), scalar.coerce(y, self.base.backend))
                      for x, y in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if self.masses.backend != self.base.backend:
            raise BackendError("mass matrix and base model use different backends")
        if self.masses.shape != (len(nodes), len(nodes)):
            raise ShapeError(f"{len(nodes)} nodes need a {len(nodes)}x{len(nodes)} mass matrix, "
                             f"got {self.masses.shape}")
        if not self.masses.is_symmetric(DEFAULT_TOL):
            raise ValueError("Uvarov mass matrix must be symmetric")


@dataclass(frozen=True)
class ChristoffelSpec:
    """Multiplier ``a (x^2 + y^2) + b x y + c (x + y) + d`` with ``|a| + |b| > 0``."""

    base: MomentModel
    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, scalar.coerce(getattr(self, name), self.base.backend))
        if self.a == 0 and self.b == 0:
            raise ValueError("Christoffel multiplier must have degree 2 (|a| + |b| > 0)")


def _check_raw(base: MomentModel, what: str) -> None:
    if base.normalization == NORMALIZED:
        # adding absolute masses to mu/mu00 would silently describe another functional
        raise ValueError(f"{what} needs a raw (unnormalized) base model")


def _powers(nodes, e):
    i, j = e
    return [x ** i * y ** j for x, y in nodes]  # 0**0 == 1


class UvarovDiagonal(MomentTable):
    """Uvarov modification with diagonal masses: still a moment functional."""

    family = "uvarov"

    def __init__(self, spec: UvarovSpec):
        self.spec = spec
        self.base = spec.base
        super().__init__(spec.base.backend, RAW)
        self._weights = [spec.masses[i, i] for i in range(spec.masses.rows)]

    def _compute(self, m, n):
        extra = sum((w * p for w, p in zip(self._weights, _powers(self.spec.nodes, (m, n)))),
                    scalar.zero(self.backend))
        return self.base.moment(m, n) + extra

    def params(self):
        return _uvarov_params(self.spec)


class UvarovForm(MomentModel):
    """``(f, g)_U = (f, g) + f(nodes) Lambda g(nodes)^T`` for a general symmetric ``Lambda``."""

    family = "uvarov"

    def __init__(self, spec: UvarovSpec):
        self.spec = spec
        self.base = spec.base
        super().__init__(spec.base.backend, RAW)
        self._cache: dict = {}

    def inner(self, a, b):
        key = (a, b) if a <= b else (b, a)
        if key not in self._cache:
            fa = _powers(self.spec.nodes, a)
            gb = _powers(self.spec.nodes, b)
            extra = sum((fa[i] * v for i, v in enumerate(self.spec.masses.apply(gb))),
                        scalar.zero(self.backend))
            self._cache[key] = self.base.inner(a, b) + extra
        return self._cache[key]

    def params(self):
        return _uvarov_params(self.spec)


def _uvarov_params(spec: UvarovSpec) -> dict:
    from bops.io import matrix_to_json

    nodes = Matrix([list(p) for p in spec.nodes], spec.base.backend, cols=2)
    return {"nodes": matrix_to_json(nodes), "lambda": matrix_to_json(spec.masses)}


def uvarov_modify(spec: UvarovSpec) -> MomentModel:
    """Moment-table model when ``Lambda`` is diagonal, general bilinear form otherwise."""
    _check_raw(spec.base, "Uvarov modification")
    lam = spec.masses
    if lam.is_zero() and spec.base.kind == MOMENT_TABLE:
        return spec.base
    diagonal = all(lam[i, j] == 0 for i in range(lam.rows) for j in range(lam.cols) if i != j)
    if diagonal and spec.base.kind == MOMENT_TABLE:
        return UvarovDiagonal(spec)
    return UvarovForm(spec)


def uvarov(base: MomentModel, nodes: Sequence, masses: Matrix) -> MomentModel:
    return uvarov_modify(UvarovSpec(base, tuple(tuple(p) for p in nodes), masses))


class ChristoffelModel(MomentTable):
    family = "christoffel"

    def __init__(self, spec: ChristoffelSpec):
        if spec.base.kind != MOMENT_TABLE:
            raise TypeError("Christoffel modification needs a moment-table base model")
        self.spec = spec
        self.base = spec.base
        # scaling u scales v by the same factor, so normalization carries over
        super().__init__(spec.base.backend, spec.base.normalization)

    def _compute(self, m, n):
        mu = self.base.moment
        s = self.spec
        return (s.a * (mu(m + 2, n) + mu(m, n + 2)) + s.b * mu(m + 1, n + 1)
                + s.c * (mu(m + 1, n) + mu(m, n + 1)) + s.d * mu(m, n))

    def params(self):
        s = self.spec
        enc = (lambda v: scalar.format_scalar(v)) if self.backend == scalar.RATIONAL else float
        return {k: enc(getattr(s, k)) for k in "abcd"}


def christoffel_modify(spec: ChristoffelSpec) -> ChristoffelModel:
    return ChristoffelModel(spec)


def christoffel(base: MomentModel, a, b, c, d) -> ChristoffelModel:
    return christoffel_modify(ChristoffelSpec(base, a, b, c, d))
