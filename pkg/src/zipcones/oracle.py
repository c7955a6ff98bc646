"""Brute-force oracles, kept independent of the polyhedral machinery.

Everything here works point by point or by exhaustive enumeration, so it can
referee the cone computations elsewhere in the package on small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence, Union

from sympy import primerange

from .cones import Cone, System, box_points, project_out
from .rootdata import GroupData, Root
from .weightcones import gamma, is_levi_dominant, orbit_member, unipotent_lift
from .weyl import WeylElt, orbits

Predicate = Callable[[Sequence[int]], bool]
MAX_BRUHAT_N = 6


# -- Bruhat order by the subword property -----------------------------------------

def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def _bubble_word(perm: Sequence[int]) -> list[int]:
    """A reduced word ``s_{a_1} ... s_{a_l}`` for a permutation, by bubble sort."""
    p = list(perm)
    word = []
    swapped = True
    while swapped:
        swapped = False
        for k in range(len(p) - 1):
            if p[k] > p[k + 1]:
                p[k], p[k + 1] = p[k + 1], p[k]
                word.append(k + 1)
                swapped = True
    # sorting p = w . s_{a_1} ... s_{a_l} = id, hence w = s_{a_l} ... s_{a_1}
    return word[::-1]


@lru_cache(maxsize=None)
def _subword_products(perm: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    out = {tuple(range(1, len(perm) + 1))}
    for a in _bubble_word(perm):
        grown = set()
        for x in out:
            y = list(x)
            y[a - 1], y[a] = y[a], y[a - 1]  # x * s_a swaps positions a, a+1
            if _inversions(y) > _inversions(x):
                grown.add(tuple(y))
        out |= grown
    return frozenset(out)


def bruhat_oracle(u: WeylElt, w: WeylElt) -> bool:
    """``u <= w``: is ``u`` the product of a reduced subword of a reduced word of ``w``?"""
    if u.kind != "A" or w.kind != "A":
        raise ValueError("the subword oracle handles type A only")
    if w.n > MAX_BRUHAT_N:
        raise ValueError(f"the subword oracle is limited to n <= {MAX_BRUHAT_N}")
    return u.perm in _subword_products(w.perm)


# -- box comparisons ---------------------------------------------------------------

def _as_predicate(c: Union[Cone, Predicate]) -> Predicate:
    return c.member if isinstance(c, Cone) else c


@dataclass
class BoxReport:
    bound: int
    names: tuple[str, str]
    counts: dict[str, int]
    only_first: list[tuple[int, ...]] = field(default_factory=list)
    only_second: list[tuple[int, ...]] = field(default_factory=list)
    points: int = 0

    @property
    def first_in_second(self) -> bool:
        return not self.only_first

    @property
    def second_in_first(self) -> bool:
        return not self.only_second

    @property
    def equal(self) -> bool:
        return self.first_in_second and self.second_in_first

    def transposed(self) -> "BoxReport":
        return BoxReport(self.bound, self.names[::-1], dict(self.counts),
                         list(self.only_second), list(self.only_first), self.points)

    def to_json(self, max_witnesses: int = 5) -> dict:
        a, b = self.names
        return {"box": self.bound, "points": self.points, "counts": self.counts,
                f"{a}_in_{b}": self.first_in_second, f"{b}_in_{a}": self.second_in_first,
                "equal": self.equal,
                f"only_{a}": [list(x) for x in self.only_first[:max_witnesses]],
                f"only_{b}": [list(x) for x in self.only_second[:max_witnesses]],
                f"only_{a}_count": len(self.only_first),
                f"only_{b}_count": len(self.only_second)}

    def summary(self) -> str:
        a, b = self.names
        rel = "=" if self.equal else ("<" if self.first_in_second else (">" if self.second_in_first else "incomparable"))
        return (f"box {self.bound}: #{a}={self.counts[a]}, #{b}={self.counts[b]}, {a} {rel} {b}"
                f" ({len(self.only_first)} only in {a}, {len(self.only_second)} only in {b})")


def cone_box_compare(c1: Union[Cone, Predicate], c2: Union[Cone, Predicate], bound: int,
                     names: tuple[str, str] = ("first", "second"),
                     within: Optional[Predicate] = None, dim: Optional[int] = None) -> BoxReport:
    """Compare two membership tests on every point of ``[-B, B]^n``
    (optionally only on points satisfying ``within``)."""
    if dim is None:
        dims = {c.dim for c in (c1, c2) if isinstance(c, Cone)}
        if len(dims) != 1:
            raise ValueError("pass dim when neither argument is a Cone")
        dim = dims.pop()
    m1, m2 = _as_predicate(c1), _as_predicate(c2)
    report = BoxReport(bound, names, {names[0]: 0, names[1]: 0})
    for x in box_points(dim, bound):
        if within is not None and not within(x):
            continue
        report.points += 1
        a, b = bool(m1(x)), bool(m2(x))
        report.counts[names[0]] += a
        report.counts[names[1]] += b
        if a and not b:
            report.only_first.append(x)
        elif b and not a:
            report.only_second.append(x)
    # witnesses are re-checked before they leave
    assert all(m1(x) and not m2(x) for x in report.only_first[:5])
    assert all(m2(x) and not m1(x) for x in report.only_second[:5])
    return report


# -- the unipotent cone by elimination ------------------------------------------------

@lru_cache(maxsize=None)
def unip_projected(G: GroupData) -> System:
    """The lifted system with ``lam`` kept symbolic, ``chi_2`` and the Levi
    multiplicities eliminated by Fourier-Motzkin.  Variables: ``lam`` first."""
    lift = unipotent_lift(G)
    n, roots = G.n, lift.levi_roots
    m = len(roots)
    nv = 2 * n + m
    eqs = []
    # lam - q sigma^{-1} chi + w_{0,M} chi - sum c_a a = 0
    for i in range(n):
        row = [0] * nv
        row[i] = 1
        for j in range(n):
            row[n + j] = lift.chi_block[i][j]
        for k, a in enumerate(roots):
            row[2 * n + k] = -a[i]
        eqs.append((tuple(row), 0))
    ineqs = []
    smat = lift.sigma_matrix
    for a in G.outer_roots:
        cv = G.coroot(a)
        r1 = [0] * nv
        r2 = [0] * nv
        for j in range(n):
            r1[n + j] = cv[j]
            r2[n + j] = G.q * cv[j]
        # - <sigma(lam), a^vee> = - sum_i cv_i sum_j smat[i][j] lam_j
        for j in range(n):
            r2[j] = -sum(cv[i] * smat[i][j] for i in range(n))
        ineqs += [(tuple(r1), 0), (tuple(r2), 0)]
    for k in range(m):
        row = [0] * nv
        row[2 * n + k] = -1
        ineqs.append((tuple(row), 0))
    return project_out(System(nv, ineqs, eqs), range(n, nv))


def unip_member_fm(G: GroupData, lam: Sequence[int]) -> bool:
    return unip_projected(G).holds_at(lam)


def unip_fm_crosscheck(G: GroupData, bound: int, dominant_only: bool = False) -> BoxReport:
    """LP route against the eliminated route on every box point."""
    if G.n > 4:
        raise ValueError("the elimination cross-check is meant for rank <= 4")
    within = (lambda x: is_levi_dominant(G, x)) if dominant_only else None
    return cone_box_compare(unipotent_lift(G).member, lambda x: unip_member_fm(G, x), bound,
                            names=("lp", "fm"), within=within, dim=G.n)


# -- exhaustive Gamma checks ---------------------------------------------------------

def orbit_member_exhaustive(G: GroupData, lam: Sequence[int]) -> bool:
    """Every subset of every orbit, no shortcut."""
    for O in orbits(G):
        for k in range(len(O) + 1):
            for S in itertools.combinations(O, k):
                if gamma(G, O, S, lam) > 0:
                    return False
    return True


def decreasing_sequences(r: int, s: int) -> list[tuple[int, ...]]:
    """``r >= x_1 >= ... >= x_s >= 0``."""
    return [tuple(sorted(c, reverse=True))
            for c in itertools.combinations_with_replacement(range(r + 1), s)]


def gl_subset_of_sequence(G: GroupData, x: Sequence[int]) -> frozenset[Root]:
    """``{e_i - e_j : r+1-x_j <= i <= r < j}`` written out for ``GL_n``."""
    n, r = G.n, G.r
    out = set()
    for jj, xj in enumerate(x, 1):
        j = r + jj
        for i in range(r + 1 - xj, r + 1):
            a = [0] * n
            a[i - 1], a[j - 1] = 1, -1
            out.add(tuple(a))
    return frozenset(out)


def gl_gamma_sequence(G: GroupData, x: Sequence[int], lam: Sequence[int]) -> Fraction:
    """``Gamma_x`` from its expanded double sum."""
    n, r, q = G.n, G.r, G.q
    total = Fraction(0)
    for j in range(r + 1, n + 1):
        cut = r - x[j - r - 1]
        for i in range(1, r + 1):
            d = Fraction(lam[i - 1] - lam[j - 1])
            total += d if i <= cut else d / q
    return total


def gl_lmin_member(G: GroupData, lam: Sequence[int]) -> bool:
    return all(gl_gamma_sequence(G, x, lam) <= 0 for x in decreasing_sequences(G.r, G.s))


# -- the large-prime sweep --------------------------------------------------------------

def soundness_threshold(G: GroupData, bound: int) -> int:
    """``2 B |Phi_+ \\ Phi_{L,+}|``: beyond it one prime already separates every
    dominant box point outside ``C_GS`` from the orbit cone."""
    return 2 * bound * len(G.outer_roots)


@dataclass
class SweepReport:
    group: dict
    bound: int
    primes: list[int]
    threshold: int
    points: int
    survivors: int
    gs_points: int
    extra: list[tuple[int, ...]]
    lost: list[tuple[int, ...]]

    @property
    def equal(self) -> bool:
        return not self.extra and not self.lost

    def to_json(self) -> dict:
        return {"group": self.group, "box": self.bound, "max_prime": self.primes[-1],
                "primes": len(self.primes), "threshold": self.threshold, "points": self.points,
                "survivors": self.survivors, "gs_points": self.gs_points, "equal": self.equal,
                "extra": [list(x) for x in self.extra[:5]], "lost": [list(x) for x in self.lost[:5]]}


def zip_asymp_sweep(G: GroupData, bound: int, max_prime: int) -> SweepReport:
    """Intersect the orbit cones (dominant part) for all primes up to ``max_prime``
    and compare with the Griffiths-Schmid cone on the box."""
    threshold = soundness_threshold(G, bound)
    if max_prime <= threshold:
        raise ValueError(f"max prime {max_prime} does not exceed the threshold {threshold}")
    primes = [int(p) for p in primerange(2, max_prime + 1)]
    groups = [G.with_q(p) for p in primes]
    outer = G.outer_roots
    pts = survivors = gs = 0
    extra, lost = [], []
    for x in box_points(G.n, bound):
        if not is_levi_dominant(G, x):
            continue
        pts += 1
        in_gs = all(G.pair(x, a) <= 0 for a in outer)
        in_all = all(orbit_member(H, x) for H in groups)
        gs += in_gs
        survivors += in_all
        if in_all and not in_gs:
            extra.append(x)
        elif in_gs and not in_all:
            lost.append(x)
    return SweepReport(G.describe(), bound, primes, threshold, pts, survivors, gs, extra, lost)

