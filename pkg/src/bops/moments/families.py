"""Built-in weight families: tensor products, the simplex Jacobi weight and Freud weights."""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from bops import scalar
from bops.errors import BackendError, ConvergenceError
from bops.moments.base import NORMALIZED, RAW, MomentTable
from bops.moments.univariate import UnivariateRecurrence, UnivariateWeight, get_weight
from bops.scalar import FLOAT, RATIONAL


def _rising(x: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out *= x + i
    return out


class ProductWeight(MomentTable):
    """``W(x, y) = w1(x) w2(y)``; reflexive when ``w1 == w2``.

    Rational models are stored raw when both 1-D moment sequences are
    rational, and divided by ``mu_{0,0}`` otherwise.
    """

    family = "product"

    def __init__(self, first: UnivariateWeight | str, second: UnivariateWeight | str | None = None,
                 backend: str = RATIONAL):
        self.first = get_weight(first) if isinstance(first, str) else first
        second = self.first if second is None else second
        self.second = get_weight(second) if isinstance(second, str) else second
        exact = self.first.exact and self.second.exact
        super().__init__(backend, RAW if backend == FLOAT or exact else NORMALIZED)

    def _compute(self, m, n):
        r = self.first.rational_moment(m) * self.second.rational_moment(n)
        if self.backend == FLOAT:
            return self.first.factor * self.second.factor * float(r)
        if self.normalization == NORMALIZED:
            r /= self.first.rational_moment(0) * self.second.rational_moment(0)
        return r

    def recurrence(self, n_max: int, axis: str = "x") -> UnivariateRecurrence:
        w = self.first if axis in ("x", 1) else self.second
        return w.recurrence(n_max, self.backend)

    def params(self):
        return {"w1": self.first.name, "w2": self.second.name}


def product_weight(first, second=None, backend: str = RATIONAL) -> ProductWeight:
    return ProductWeight(first, second, backend)


class SimplexJacobi(MomentTable):
    """``(x y)^alpha (1 - x - y)^gamma`` on the triangle ``x, y >= 0, x + y <= 1``.

    ``mu_{m,n} = G(m+a+1) G(n+a+1) G(g+1) / G(m+n+2a+g+3)``. On the rational
    backend the ratio to ``mu_{0,0}`` is a product of rising factorials; the
    model stays raw when ``alpha`` is an integer (then ``mu_{0,0}`` is
    rational too) and is normalized otherwise.
    """

    family = "simplex"

    def __init__(self, alpha, gamma, backend: str = RATIONAL):
        if backend == RATIONAL:
            alpha, gamma = scalar.parse_rational(alpha), scalar.parse_rational(gamma)
        else:
            alpha, gamma = float(alpha), float(gamma)
        if alpha <= -1 or gamma <= -1:
            raise ValueError(f"simplex parameters must exceed -1, got alpha={alpha}, gamma={gamma}")
        self.alpha, self.gamma = alpha, gamma
        raw = backend == FLOAT or alpha.denominator == 1
        super().__init__(backend, RAW if raw else NORMALIZED)

    def _mu00(self) -> Fraction:
        a = int(self.alpha)
        return Fraction(math.factorial(a) ** 2) / _rising(self.gamma + 1, 2 * a + 2)

    def _compute(self, m, n):
        a, g = self.alpha, self.gamma
        if self.backend == FLOAT:
            logs = [math.lgamma(m + a + 1), math.lgamma(n + a + 1), math.lgamma(g + 1),
                    -math.lgamma(m + n + 2 * a + g + 3)]
            return math.exp(math.fsum(logs))
        ratio = _rising(a + 1, m) * _rising(a + 1, n) / _rising(2 * a + g + 3, m + n)
        if self.normalization == NORMALIZED:
            return ratio
        return self._mu00() * ratio

    def params(self):
        return {"alpha": _encode(self.alpha), "gamma": _encode(self.gamma)}


def simplex_jacobi(alpha, gamma, backend: str = RATIONAL) -> SimplexJacobi:
    return SimplexJacobi(alpha, gamma, backend)


class FreudWeight(MomentTable):
    """``exp(-(a (x^4 + y^4) + b x^2 y^2 + c (x^2 + y^2)))`` on the plane; float only.

    Moments come from a tensor Gauss-Legendre rule on ``[-R, R]^2`` and are
    checked against a rule with twice the points.
    """

    family = "freud"
    POINTS = 200
    TAIL_LOG = 37.0  # exp(-37) < 1e-16
    CHECK_RTOL = 1e-10

    def __init__(self, a, b, c, backend: str = FLOAT):
        if backend != FLOAT:
            raise BackendError("Freud moments are transcendental; use the float backend")
        a, b, c = float(a), float(b), float(c)
        # sufficient for integrability: q(x, y) grows like a quartic in every direction
        if not (a > 0 and b > -2 * a):
            raise ValueError(f"Freud weight needs a > 0 and b > -2a, got a={a}, b={b}")
        self.a, self.b, self.c = a, b, c
        super().__init__(FLOAT, RAW)
        self.radius = self._choose_radius()
        self._rules = {}

    def q(self, x, y):
        x2, y2 = x * x, y * y
        return self.a * (x2 * x2 + y2 * y2) + self.b * x2 * y2 + self.c * (x2 + y2)

    def _choose_radius(self) -> float:
        r = max(4.0, (40.0 / min(self.a, 1.0)) ** 0.25)
        while True:
            t = np.linspace(-r, r, 801)
            gx, gy = np.meshgrid(t, t)
            peak = float(np.min(self.q(gx, gy)))
            edge = float(np.min(self.q(np.full_like(t, r), t)))
            if edge - peak >= self.TAIL_LOG:
                return r
            r *= 1.25

    def _rule(self, points: int):
        if points not in self._rules:
            t, w = np.polynomial.legendre.leggauss(points)
            x = self.radius * t
            w = self.radius * w
            kernel = np.exp(-self.q(x[:, None], x[None, :])) * w[:, None] * w[None, :]
            self._rules[points] = (x, kernel)
        return self._rules[points]

    def _quad(self, m, n, points):
        x, kernel = self._rule(points)
        return float((x ** m) @ kernel @ (x ** n))

    def _compute(self, m, n):
        if m % 2 or n % 2:
            return 0.0
        coarse = self._quad(m, n, self.POINTS)
        fine = self._quad(m, n, 2 * self.POINTS)
        change = abs(fine - coarse) / abs(fine)
        if change >= self.CHECK_RTOL:
            raise ConvergenceError(f"Freud moment ({m}, {n}) unconverged: relative change {change:.3g}",
                                   estimate=change)
        return coarse

    def params(self):
        return {"a": self.a, "b": self.b, "c": self.c}


def freud_weight(a, b, c, backend: str = FLOAT) -> FreudWeight:
    return FreudWeight(a, b, c, backend)


def _encode(v):
    return scalar.format_scalar(v) if isinstance(v, Fraction) else v
