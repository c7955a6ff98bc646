"""Exact feasibility by the simplex method (phase one, Bland's rule)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(
    a_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
    a_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    nonneg: Sequence[bool] | None = None,
    nvars: int | None = None,
) -> list[Fraction] | None:
    """A rational point with ``a_eq x = b_eq``, ``a_ub x <= b_ub`` and
    ``x_i >= 0`` wherever ``nonneg[i]``; None when there is none.

    >>> feasible_point(a_ub=[[1, 1], [-1, 0], [0, -1]], b_ub=[1, -1, 0])
    [Fraction(1, 1), Fraction(0, 1)]
    >>> feasible_point(a_ub=[[1], [-1]], b_ub=[0, -1]) is None
    True
    """
    if nvars is None:
        rows = list(a_eq) + list(a_ub)
        if not rows:
            raise ValueError("cannot infer the number of variables")
        nvars = len(rows[0])
    if nonneg is None:
        nonneg = [False] * nvars
    # columns: x_i (or x_i^+ , x_i^-) then one slack per inequality
    cols: list[tuple[int, int]] = []
    for i in range(nvars):
        cols.append((i, 1))
        if not nonneg[i]:
            cols.append((i, -1))
    nx = len(cols)
    nslack = len(a_ub)
    rows, rhs = [], []
    for row, b in zip(a_eq, b_eq):
        rows.append([Fraction(row[i]) * s for i, s in cols] + [Fraction(0)] * nslack)
        rhs.append(Fraction(b))
    for k, (row, b) in enumerate(zip(a_ub, b_ub)):
        slack = [Fraction(0)] * nslack
        slack[k] = Fraction(1)
        rows.append([Fraction(row[i]) * s for i, s in cols] + slack)
        rhs.append(Fraction(b))
    y = _phase_one(rows, rhs, nx + nslack)
    if y is None:
        return None
    x = [Fraction(0)] * nvars
    for (i, s), v in zip(cols, y):
        x[i] += s * v
    return x


def _phase_one(rows: list[list[Fraction]], rhs: list[Fraction], ncols: int):
    m = len(rows)
    if m == 0:
        return [Fraction(0)] * ncols
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    total = ncols + m
    tab = [rows[i] + [Fraction(int(i == k)) for k in range(m)] + [rhs[i]] for i in range(m)]
    basis = list(range(ncols, total))
    cost = [-sum(tab[i][j] for i in range(m)) for j in range(ncols)] + [Fraction(0)] * m
    cost.append(-sum(rhs))
    while True:
        enter = next((j for j in range(total) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][total] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded cannot happen in phase one
            break
        _pivot(tab, cost, best[1], enter)
        basis[best[1]] = enter
    if cost[total] != 0:
        return None
    y = [Fraction(0)] * ncols
    for i, b in enumerate(basis):
        if b < ncols:
            y[b] = tab[i][total]
    return y


def _pivot(tab, cost, r, c):
    p = tab[r][c]
    tab[r] = [x / p for x in tab[r]]
    for i in range(len(tab)):
        if i != r and tab[i][c] != 0:
            f = tab[i][c]
            tab[i] = [x - f * y for x, y in zip(tab[i], tab[r])]
    if cost[c] != 0:
        f = cost[c]
        cost[:] = [x - f * y for x, y in zip(cost, tab[r])]


def nonneg_combination(sources: Sequence[Sequence], target: Sequence) -> list[Fraction] | None:
    """Coefficients ``y >= 0`` with ``sum y_i sources[i] = target``, or None."""
    if not sources:
        return [] if all(x == 0 for x in target) else None
    dim = len(target)
    a_eq = [[src[k] for src in sources] for k in range(dim)]
    return feasible_point(a_eq, list(target), nonneg=[True] * len(sources), nvars=len(sources))
