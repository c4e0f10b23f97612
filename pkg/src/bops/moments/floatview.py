"""Float views of rational models: same functional, moments rounded to double."""

from __future__ import annotations

from bops.moments.base import MOMENT_TABLE, MomentModel, MomentTable
from bops.scalar import FLOAT, RATIONAL


class FloatMomentTable(MomentTable):
    def __init__(self, source: MomentTable):
        super().__init__(FLOAT, source.normalization)
        self.source = source
        self.family = source.family

    def _compute(self, m, n):
        return float(self.source.moment(m, n))

    def params(self):
        return self.source.params()

    def to_spec(self):
        spec = self.source.to_spec()
        spec["backend"] = FLOAT
        return spec


class FloatForm(MomentModel):
    def __init__(self, source: MomentModel):
        super().__init__(FLOAT, source.normalization)
        self.source = source
        self.family = source.family
        self._cache: dict = {}

    def inner(self, a, b):
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = float(self.source.inner(a, b))
        return self._cache[key]

    def params(self):
        return self.source.params()

    def to_spec(self):
        spec = self.source.to_spec()
        spec["backend"] = FLOAT
        return spec


def as_float_model(u: MomentModel) -> MomentModel:
    if u.backend != RATIONAL:
        return u
    return FloatMomentTable(u) if u.kind == MOMENT_TABLE else FloatForm(u)
