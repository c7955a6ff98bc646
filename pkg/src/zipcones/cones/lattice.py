"""Integer column reduction, enough to describe sublattices ``C Z^n``."""

from __future__ import annotations

from typing import Sequence


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        k, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def column_echelon(C: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """``C U = [H | 0]`` with ``U`` unimodular and ``H`` lower triangular.

    ``C`` must have full row rank.  Returns ``(H, U)``; the last ``n - m``
    columns of ``U`` are a basis of the integer kernel of ``C``.

    >>> H, U = column_echelon([[1, 1]])
    >>> H, [row[1] for row in U]
    ([[1]], [-1, 1])
    """
    m, n = len(C), len(C[0])
    A = [list(row) for row in C]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def combine(i, j, x, y, u, v):
        # columns (i, j) <- (x c_i + y c_j, u c_i + v c_j)
        for M in (A, U):
            for row in M:
                ci, cj = row[i], row[j]
                row[i], row[j] = x * ci + y * cj, u * ci + v * cj

    for i in range(m):
        for j in range(i + 1, n):
            b = A[i][j]
            if b == 0:
                continue
            a = A[i][i]
            g, x, y = _ext_gcd(a, b)
            combine(i, j, x, y, -b // g, a // g)
        if A[i][i] == 0:
            raise ValueError("rows are linearly dependent")
        if A[i][i] < 0:
            for M in (A, U):
                for row in M:
                    row[i] = -row[i]
    H = [row[:m] for row in A]
    return H, U


def solve_lower(H: Sequence[Sequence[int]], y: Sequence[int]) -> list[int] | None:
    """Integer ``t`` with ``H t = y`` for lower-triangular ``H``, or None."""
    t: list[int] = []
    for i, row in enumerate(H):
        rest = y[i] - sum(row[k] * t[k] for k in range(i))
        if rest % row[i]:
            return None
        t.append(rest // row[i])
    return t
