"""Scalar backends: exact rationals (``Fraction``) and binary floats.

Values are plain Python numbers. A *backend* is one of the two string tags
``"rational"`` or ``"float"``; ints are backend-neutral and get coerced.
Mixing a ``Fraction`` with a ``float`` anywhere in one object is an error.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from numbers import Rational, Real

from bops.errors import BackendError

RATIONAL = "rational"
FLOAT = "float"
BACKENDS = (RATIONAL, FLOAT)


@dataclass(frozen=True)
class Tolerance:
    """Float comparison policy ``|a-b| <= atol + rtol*max(|a|,|b|)``."""

    atol: float = 1e-10
    rtol: float = 1e-9

    def close(self, a, b) -> bool:
        return abs(a - b) <= self.atol + self.rtol * max(abs(a), abs(b))


DEFAULT_TOL = Tolerance()


def check_backend(backend: str) -> str:
    if backend not in BACKENDS:
        raise BackendError(f"unknown backend {backend!r}; expected one of {BACKENDS}")
    return backend


def backend_of(value) -> str | None:
    """Backend tag of a single value, ``None`` for backend-neutral ints."""
    if isinstance(value, bool):
        raise BackendError("booleans are not scalars")
    if isinstance(value, int):
        return None
    if isinstance(value, Fraction):
        return RATIONAL
    if isinstance(value, float):
        return FLOAT
    # numpy scalars and friends
    if isinstance(value, Rational):
        return None if int(value.denominator) == 1 else RATIONAL
    if isinstance(value, Real):
        return FLOAT
    raise BackendError(f"unsupported scalar type {type(value).__name__}")


def infer_backend(values, default: str = RATIONAL) -> str:
    found = None
    for v in values:
        b = backend_of(v)
        if b is None:
            continue
        if found is None:
            found = b
        elif b != found:
            raise BackendError("mixed rational and float scalars")
    return found or default


def coerce(value, backend: str):
    """Convert ``value`` into ``backend`` without crossing backends."""
    b = backend_of(value)
    if b is not None and b != backend:
        raise BackendError(f"cannot use a {b} scalar in a {backend} context; convert explicitly")
    if backend == RATIONAL:
        return value if isinstance(value, Fraction) else Fraction(int(value))
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"non-finite float scalar {value!r}")
    return out


def to_float(value) -> float:
    out = float(value)
    if not math.isfinite(out):
        raise ValueError(f"non-finite float scalar {value!r}")
    return out


def zero(backend: str):
    return Fraction(0) if backend == RATIONAL else 0.0


def one(backend: str):
    return Fraction(1) if backend == RATIONAL else 1.0


def is_zero(value, backend: str, tol: Tolerance = DEFAULT_TOL) -> bool:
    if backend == RATIONAL:
        return value == 0
    return tol.close(value, 0.0)


def equal(a, b, backend: str, tol: Tolerance = DEFAULT_TOL) -> bool:
    if backend == RATIONAL:
        return a == b
    return tol.close(a, b)


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, integer or decimal literals exactly (``"0.5"`` -> 1/2)."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if isinstance(text, float):
        # shortest repr round-trips, so 0.1 means 1/10 rather than the binary value
        text = repr(text)
    s = str(text).strip()
    m = _FRACTION_RE.match(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    try:
        d = Decimal(s)
    except InvalidOperation:
        raise ValueError(f"not a rational literal: {text!r}") from None
    if not d.is_finite():
        raise ValueError(f"not a finite rational literal: {text!r}")
    return Fraction(d)


def parse_scalar(text, backend: str):
    if backend == RATIONAL:
        return parse_rational(text)
    if isinstance(text, str) and _FRACTION_RE.match(text):
        return to_float(parse_rational(text))
    return to_float(text)


def format_scalar(value, digits: int = 12) -> str:
    """``p/q`` for rationals, fixed significant digits for floats."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, int):
        return str(value)
    return f"{value:.{digits}g}"
