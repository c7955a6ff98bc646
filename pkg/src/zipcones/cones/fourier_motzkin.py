"""Fourier-Motzkin elimination for systems ``a . x <= b`` over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import primitive

MAX_INEQUALITIES = 100_000


class FMBlowup(RuntimeError):
    pass


Row = tuple[tuple, object]   # (coefficients, right-hand side)


@dataclass
class System:
    """Inequalities ``a . x <= b`` and equations ``a . x = b``."""

    nvars: int
    ineqs: list[Row] = field(default_factory=list)
    eqs: list[Row] = field(default_factory=list)

    def is_inconsistent(self) -> bool:
        return any(not any(a) and b < 0 for a, b in self.ineqs) or \
            any(not any(a) and b != 0 for a, b in self.eqs)

    def holds_at(self, x: Sequence) -> bool:
        return all(sum(c * v for c, v in zip(a, x)) <= b for a, b in self.ineqs) and \
            all(sum(c * v for c, v in zip(a, x)) == b for a, b in self.eqs)


def normalise_row(a: Sequence, b) -> tuple[tuple[int, ...], int]:
    v = primitive(list(a) + [b])
    return tuple(v[:-1]), v[-1]


def _clean(rows: Iterable, n: int) -> list:
    """Normalise, drop trivial rows and keep the tightest of parallel ones.
    Rows are ``(a, b, history)``; an unsatisfiable row collapses the system
    to ``0 <= -1``."""
    best: dict[tuple[int, ...], tuple[int, frozenset]] = {}
    for a, b, hist in rows:
        a, b = normalise_row(a, b)
        if not any(a):
            if b < 0:
                return [((0,) * n, -1, hist)]
            continue
        if a not in best or b < best[a][0] or (b == best[a][0] and len(hist) < len(best[a][1])):
            best[a] = (b, hist)
    return sorted((a, b, h) for a, (b, h) in best.items())


def _inconsistent(rows: list) -> bool:
    return len(rows) == 1 and not any(rows[0][0]) and rows[0][1] < 0


def _eliminate_one(rows: list, k: int, n: int, eliminated: int) -> list:
    """One Fourier-Motzkin step.  A combination whose history involves more
    than ``eliminated + 1`` original rows is implied by the others
    (Chernikov's rule) and is not kept."""
    pos = [r for r in rows if r[0][k] > 0]
    neg = [r for r in rows if r[0][k] < 0]
    out = [r for r in rows if r[0][k] == 0]
    limit = eliminated + 1
    for ap, bp, hp in pos:
        for an, bn, hn in neg:
            hist = hp | hn
            if len(hist) > limit:
                continue
            cp, cn = -an[k], ap[k]
            out.append((tuple(cp * x + cn * y for x, y in zip(ap, an)), cp * bp + cn * bn, hist))
            if len(out) > MAX_INEQUALITIES:
                raise FMBlowup(f"elimination exceeds {MAX_INEQUALITIES} inequalities")
    return _clean(out, n)


def project_out(system: System, drop: Iterable[int]) -> System:
    """Eliminate the variables with indices ``drop`` (0-based).

    Equations are used for substitution first.  The result is expressed in
    the remaining variables, in their original order.

    >>> s = System(1, ineqs=[((1,), 0), ((-1,), -1)])
    >>> project_out(s, [0]).ineqs
    [((), -1)]
    """
    n = system.nvars
    drop = list(dict.fromkeys(drop))
    ineqs = [(tuple(map(Fraction, a)), Fraction(b)) for a, b in system.ineqs]
    eqs = [(tuple(map(Fraction, a)), Fraction(b)) for a, b in system.eqs]
    by_fm = []
    for k in drop:
        piv = next((e for e in eqs if e[0][k] != 0), None)
        if piv is None:
            by_fm.append(k)
            continue
        eqs.remove(piv)
        pa, pb = piv

        def sub(row):
            a, b = row
            if a[k] == 0:
                return row
            f = a[k] / pa[k]
            return tuple(x - f * y for x, y in zip(a, pa)), b - f * pb

        ineqs = [sub(r) for r in ineqs]
        eqs = [sub(r) for r in eqs]
    for a, b in [e for e in eqs if any(e[0][k] for k in by_fm)]:
        ineqs += [(a, b), (tuple(-x for x in a), -b)]
    eqs = [e for e in eqs if not any(e[0][k] for k in by_fm)]
    rows = _clean(((a, b, frozenset([t])) for t, (a, b) in enumerate(ineqs)), n)
    for t, k in enumerate(by_fm):
        if _inconsistent(rows):
            break
        rows = _eliminate_one(rows, k, n, t + 1)
    keep = [i for i in range(n) if i not in set(drop)]
    m = len(keep)
    if _inconsistent(rows):
        return System(m, [((0,) * m, -1)], [])
    out_ineqs = [(a, b) for a, b, _ in
                 _clean(((tuple(a[i] for i in keep), b, h) for a, b, h in rows), m)]
    out_eqs = set()
    for a, b in eqs:
        a2, b2 = normalise_row([a[i] for i in keep], b)
        if not any(a2):
            if b2 != 0:
                return System(m, [((0,) * m, -1)], [])
            continue
        if a2[next(i for i, x in enumerate(a2) if x)] < 0:
            a2, b2 = tuple(-x for x in a2), -b2
        out_eqs.add((a2, b2))
    return System(m, out_ineqs, sorted(out_eqs))


def fm_feasible(system: System) -> bool:
    """Feasibility by eliminating every variable."""
    return not project_out(system, range(system.nvars)).is_inconsistent()
