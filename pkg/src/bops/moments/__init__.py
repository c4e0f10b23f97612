"""Moment functionals and bilinear forms on bivariate polynomials."""

from bops.moments.base import (
    BILINEAR_FORM,
    MOMENT_TABLE,
    NORMALIZED,
    RAW,
    MomentModel,
    MomentTable,
    is_reflexive,
    moment,
    moment_matrix,
    pairing,
    reflexive_violation,
)
from bops.moments.families import (
    FreudWeight,
    ProductWeight,
    SimplexJacobi,
    freud_weight,
    product_weight,
    simplex_jacobi,
)
from bops.moments.modifications import (
    ChristoffelModel,
    ChristoffelSpec,
    UvarovDiagonal,
    UvarovForm,
    UvarovSpec,
    christoffel,
    christoffel_modify,
    uvarov,
    uvarov_modify,
)
from bops.moments.spec import SpecError, model_from_spec
from bops.moments.univariate import WEIGHTS, UnivariateRecurrence, UnivariateWeight, get_weight

__all__ = [
    "BILINEAR_FORM", "MOMENT_TABLE", "NORMALIZED", "RAW", "WEIGHTS",
    "ChristoffelModel", "ChristoffelSpec", "FreudWeight", "MomentModel", "MomentTable",
    "ProductWeight", "SimplexJacobi", "SpecError", "UnivariateRecurrence", "UnivariateWeight",
    "UvarovDiagonal", "UvarovForm", "UvarovSpec",
    "christoffel", "christoffel_modify", "freud_weight", "get_weight", "is_reflexive",
    "model_from_spec", "moment", "moment_matrix", "pairing", "product_weight",
    "reflexive_violation", "simplex_jacobi", "uvarov", "uvarov_modify",
]
