from __future__ import annotations

from fractions import Fraction

import numpy as np
from hypothesis import strategies as st

from bops.matrix import Matrix
from bops.scalar import FLOAT, RATIONAL

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def rational_matrices(draw, rows=None, cols=None, max_size=6):
    r = draw(st.integers(1, max_size)) if rows is None else rows
    c = draw(st.integers(1, max_size)) if cols is None else cols
    data = draw(st.lists(st.lists(small_fractions, min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(data, RATIONAL)


@st.composite
def square_rational(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    return draw(rational_matrices(rows=n, cols=n))


def centrosymmetrize(x: Matrix) -> Matrix:
    from bops.structure import reverse

    return (x + reverse(x)).scale(Fraction(1, 2) if x.backend == RATIONAL else 0.5)


def random_spd_centrosymmetric(rng: np.random.Generator, n: int) -> Matrix:
    a = rng.standard_normal((n, n))
    x = a @ a.T + n * np.eye(n)
    j = np.fliplr(np.eye(n))
    x = 0.5 * (x + j @ x @ j)
    return Matrix(x, FLOAT)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
