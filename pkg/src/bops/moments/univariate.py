"""Classical univariate weights: exact moments and monic recurrence coefficients.

Each moment is ``factor * rational_moment(k)`` where ``factor`` is a
transcendental constant (1, pi, sqrt(pi), ...) kept out of the exact part.
The monic recurrence is ``x p_n = p_{n+1} + gamma_n p_n + upsilon_n p_{n-1}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from bops import scalar
from bops.scalar import RATIONAL


@dataclass(frozen=True)
class UnivariateRecurrence:
    """Coefficients of ``x p_n = lam_n p_{n+1} + gamma_n p_n + upsilon_n p_{n-1}``, n = 0..N."""

    lam: tuple
    gamma: tuple
    upsilon: tuple

    def __post_init__(self):
        if not (len(self.lam) == len(self.gamma) == len(self.upsilon)):
            raise ValueError("recurrence sequences must have equal length")
        if any(v == 0 for v in self.lam):
            raise ValueError("lambda_n must be nonzero")
        if any(v == 0 for v in self.upsilon[1:]):
            raise ValueError("upsilon_n must be nonzero for n >= 1 (regularity)")

    @property
    def max_index(self) -> int:
        return len(self.lam) - 1

    def to_backend(self, backend: str) -> "UnivariateRecurrence":
        conv = (lambda v: scalar.coerce(v, backend)) if backend == RATIONAL else scalar.to_float
        return UnivariateRecurrence(tuple(map(conv, self.lam)), tuple(map(conv, self.gamma)),
                                    tuple(map(conv, self.upsilon)))


def _even_only(fn: Callable[[int], Fraction]) -> Callable[[int], Fraction]:
    return lambda k: Fraction(0) if k % 2 else fn(k)


@dataclass(frozen=True)
class UnivariateWeight:
    name: str
    interval: tuple[float, float]
    rational_moment: Callable[[int], Fraction]
    factor: float
    factor_symbol: str
    gamma: Callable[[int], Fraction]
    upsilon: Callable[[int], Fraction]

    @property
    def exact(self) -> bool:
        return self.factor == 1.0

    def moment(self, k: int, backend: str = RATIONAL):
        """Raw moment; exact only when the transcendental factor is 1."""
        r = self.rational_moment(k)
        if backend == RATIONAL:
            if not self.exact:
                raise ValueError(f"{self.name} moments carry the factor {self.factor_symbol}; not rational")
            return r
        return self.factor * float(r)

    def recurrence(self, n_max: int, backend: str = RATIONAL) -> UnivariateRecurrence:
        """Monic recurrence coefficients for ``n = 0..n_max`` (``upsilon_0`` is 0)."""
        lam = tuple(Fraction(1) for _ in range(n_max + 1))
        gam = tuple(Fraction(self.gamma(n)) for n in range(n_max + 1))
        ups = tuple(Fraction(0) if n == 0 else Fraction(self.upsilon(n)) for n in range(n_max + 1))
        return UnivariateRecurrence(lam, gam, ups).to_backend(backend)


LEGENDRE = UnivariateWeight(
    "legendre", (-1.0, 1.0),
    _even_only(lambda k: Fraction(2, k + 1)), 1.0, "1",
    lambda n: Fraction(0), lambda n: Fraction(n * n, 4 * n * n - 1))

SHIFTED_LEGENDRE = UnivariateWeight(
    "shifted_legendre", (0.0, 1.0),
    lambda k: Fraction(1, k + 1), 1.0, "1",
    lambda n: Fraction(1, 2), lambda n: Fraction(n * n, 4 * (4 * n * n - 1)))

CHEBYSHEV1 = UnivariateWeight(
    "chebyshev1", (-1.0, 1.0),
    _even_only(lambda k: Fraction(comb(k, k // 2), 2 ** k)), math.pi, "pi",
    lambda n: Fraction(0), lambda n: Fraction(1, 2) if n == 1 else Fraction(1, 4))

CHEBYSHEV2 = UnivariateWeight(
    "chebyshev2", (-1.0, 1.0),
    _even_only(lambda k: Fraction(comb(k, k // 2), 2 ** k * (k // 2 + 1)) / 2), math.pi, "pi",
    lambda n: Fraction(0), lambda n: Fraction(1, 4))

HERMITE = UnivariateWeight(
    "hermite", (-math.inf, math.inf),
    # (k-1)!! / 2^(k/2) for even k
    _even_only(lambda k: Fraction(factorial(k), factorial(k // 2) * 2 ** k)), math.sqrt(math.pi), "sqrt(pi)",
    lambda n: Fraction(0), lambda n: Fraction(n, 2))

LAGUERRE = UnivariateWeight(
    "laguerre", (0.0, math.inf),
    lambda k: Fraction(factorial(k)), 1.0, "1",
    lambda n: Fraction(2 * n + 1), lambda n: Fraction(n * n))

WEIGHTS: dict[str, UnivariateWeight] = {
    w.name: w for w in (LEGENDRE, SHIFTED_LEGENDRE, CHEBYSHEV1, CHEBYSHEV2, HERMITE, LAGUERRE)
}


def get_weight(name: str) -> UnivariateWeight:
    try:
        return WEIGHTS[name]
    except KeyError:
        raise ValueError(f"unknown univariate weight {name!r}; choose from {sorted(WEIGHTS)}") from None


def monic_polynomials(rec: UnivariateRecurrence, n_max: int) -> list[list]:
    """Coefficient lists (lowest degree first) of the monic family defined by ``rec``."""
    one = rec.lam[0] / rec.lam[0]
    zero = one - one
    polys: list[list] = [[one]]
    prev: Sequence = []
    for n in range(n_max):
        cur = polys[-1]
        nxt = [zero] + list(cur)  # x * p_n
        for i, c in enumerate(cur):
            nxt[i] -= rec.gamma[n] * c
        for i, c in enumerate(prev):
            nxt[i] -= rec.upsilon[n] * c
        nxt = [c / rec.lam[n] for c in nxt]
        prev = cur
        polys.append(nxt)
    return polys
