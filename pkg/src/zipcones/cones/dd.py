"""Double description: generators of ``{x : A x <= 0}``.

Constraints are added one at a time (Motzkin's method).  The cone is kept as
a lineality basis plus extreme rays modulo it; two rays are combined only if
they are adjacent, which is decided by the rank of the constraints tight at
both of them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import primitive, rank

MAX_DIM = 12


class DimensionTooLarge(ValueError):
    pass


def _dot(a, x):
    return sum(u * v for u, v in zip(a, x))


def generators(rows: Sequence[Sequence[int]], dim: int) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Extreme rays and a lineality basis of ``{x : rows . x <= 0}``.

    >>> generators([(-1, 0), (0, -1)], 2)
    ([(0, 1), (1, 0)], [])
    >>> generators([(1, -1)], 2)
    ([(-1, 0)], [(1, 1)])
    """
    if dim > MAX_DIM:
        raise DimensionTooLarge(f"double description limited to dimension {MAX_DIM}, got {dim}")
    lin: list[list[Fraction]] = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    rays: list[tuple[int, ...]] = []
    done: list[Sequence[int]] = []
    for a in rows:
        if not any(a):
            continue
        k = next((k for k, l in enumerate(lin) if _dot(a, l) != 0), None)
        if k is not None:
            hit = lin.pop(k)
            al = _dot(a, hit)
            if al > 0:
                hit, al = [-x for x in hit], -al
            lin = [[x - (_dot(a, l) / al) * y for x, y in zip(l, hit)] for l in lin]
            rays = [primitive([x - (_dot(a, r) / al) * y for x, y in zip(r, hit)]) for r in rays]
            rays.append(primitive(hit))
            rays = _dedup(rays)
        else:
            vals = [_dot(a, r) for r in rays]
            keep = [r for r, v in zip(rays, vals) if v <= 0]
            pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
            neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
            target = dim - len(lin) - 2
            for p, vp in pos:
                zp = {k for k, c in enumerate(done) if _dot(c, p) == 0}
                for m, vm in neg:
                    common = [done[k] for k in zp if _dot(done[k], m) == 0]
                    if len(common) < target or rank(common) != target:
                        continue
                    keep.append(primitive([vp * y - vm * x for x, y in zip(p, m)]))
            rays = _dedup(keep)
        done.append(a)
    return sorted(rays), sorted(primitive(l) for l in lin)


def _dedup(rays):
    return list(dict.fromkeys(r for r in rays if any(r)))
