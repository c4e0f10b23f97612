"""Connection matrices between a MOPS and its Christoffel-modified MOPS."""

from __future__ import annotations

from bops.matrix import Matrix, solve
from bops.moments.modifications import ChristoffelModel
from bops.ops.mops import MopsCache
from bops.poly import BivarPoly, combine


def _check_pair(base: MopsCache, mod: MopsCache) -> ChristoffelModel:
    v = mod.model
    if not isinstance(v, ChristoffelModel):
        raise ValueError("modified cache must come from a Christoffel-modified model")
    if v.base is not base.model and v.base.to_spec() != base.model.to_spec():
        raise ValueError("modified model is not a Christoffel modification of the base model")
    if base.backend != mod.backend:
        raise ValueError("base and modified caches use different backends")
    return v


def christoffel_connection(base: MopsCache, mod: MopsCache, n: int) -> tuple[Matrix, Matrix | None]:
    """``(R_n, S_n)`` with ``Q_n = Qt_n + R_n Qt_{n-1} + S_n Qt_{n-2}``; ``S_1`` is ``None``.

    ``Q`` is the base MOPS and ``Qt`` the modified one; both pairings use the
    modified form.
    """
    v = _check_pair(base, mod)
    if n < 1:
        raise ValueError("connection matrices are defined for n >= 1")
    if n > min(base.max_degree, mod.max_degree):
        raise ValueError(f"degree {n} not built in both caches")
    q = base.Q[n].entries

    def coeff(m):
        return solve(mod.H[m], v.gram(q, mod.Q[m].entries).T).T

    return coeff(n - 1), (coeff(n - 2) if n >= 2 else None)


def connection_residual(base: MopsCache, mod: MopsCache, n: int) -> list[BivarPoly]:
    r, s = christoffel_connection(base, mod, n)
    parts = [mod.Q[n].entries, combine(r, mod.Q[n - 1].entries)]
    if s is not None:
        parts.append(combine(s, mod.Q[n - 2].entries))
    out = []
    for k, p in enumerate(base.Q[n]):
        for part in parts:
            p = p - part[k]
        out.append(p)
    return out
