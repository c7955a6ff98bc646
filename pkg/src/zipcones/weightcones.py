"""Weight cones: Griffiths-Schmid, orbit and L-minimal cones, Hasse cones of
strata, the unipotent cone and intersection cones of separating systems.

All functionals are returned in H-form, ``f . lam <= 0``, primitive and
sorted.  Characters are integer tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Optional, Sequence

from .cones import Cone, full_space, intersect, minkowski_sum, primitive
from .cones.exact import inverse, mat_vec, rank, solve, transpose, vec_mat
from .cones.lp import feasible_point
from .rootdata import GroupData, Root, neg, unit
from .weyl import (WeylElt, length, lower_neighbours, l_minimal_in_orbit, orbits,
                   root_reflection, w0, w0_levi)


def w0I_w0(G: GroupData) -> WeylElt:
    """``w_{0,I} w_0``; equals ``z`` when ``sigma`` fixes ``I``."""
    return w0_levi(G) * w0(G)


def _columns_to_matrix(cols: Sequence[Sequence]) -> list[list]:
    return transpose(cols)


# -- the map h_w ----------------------------------------------------------------

@dataclass(frozen=True)
class HMap:
    """``h_w(chi) = -w chi + q (w_{0,I} w_0) sigma^{-1}(chi)`` as an exact matrix."""

    G: GroupData
    w: WeylElt

    @cached_property
    def matrix(self) -> list[list[int]]:
        G, w = self.G, self.w
        u = w0I_w0(G)
        cols = []
        for j in range(1, G.n + 1):
            e = unit(G.n, j)
            a = w.act(e)
            b = u.act(G.sigma_inv_act(e))
            cols.append([-x + G.q * y for x, y in zip(a, b)])
        return _columns_to_matrix(cols)

    @cached_property
    def inverse(self) -> list[list[Fraction]]:
        return inverse(self.matrix)

    def __call__(self, chi: Sequence) -> tuple:
        return tuple(mat_vec(self.matrix, chi))

    def preimage(self, lam: Sequence) -> tuple[Fraction, ...]:
        return tuple(mat_vec(self.inverse, lam))


@lru_cache(maxsize=None)
def h_map(G: GroupData, w: WeylElt) -> HMap:
    return HMap(G, w)


def hasse_functional(G: GroupData, w: WeylElt, alpha: Root) -> tuple[int, ...]:
    """H-form of ``<h_w^{-1} lam, alpha^vee> >= 0``."""
    row = vec_mat(G.coroot(alpha), h_map(G, w).inverse)
    return neg(primitive(row))


def hasse_cone(G: GroupData, w: WeylElt, saturated: bool = True) -> Cone:
    """``C_{Hasse,w} = h_w(X^*_{+,w})``.

    The saturated cone is the set of lattice points of the rational cone.  The
    unsaturated one is the monoid spanned by ``h_w`` of a Hilbert basis of
    ``X^*_{+,w}``, available when the coroots of ``E_w`` are independent.
    """
    E = lower_neighbours(w)
    label = f"Hasse[{w.window()}]"
    if saturated:
        return Cone(G.n, hform=[hasse_functional(G, w, a) for a in E], label=label)
    gens = hilbert_basis_positive_chamber(G, E)
    h = h_map(G, w)
    return Cone(G.n, vform=[h(g) for g in gens], semantics="monoid", label=label)


def hilbert_basis_positive_chamber(G: GroupData, E: Sequence[Root]) -> list[tuple[int, ...]]:
    """Monoid generators of ``{chi in Z^n : <chi, a^vee> >= 0, a in E}``
    for linearly independent coroots.  Lineality is given as ``+-`` pairs."""
    from .cones.lattice import column_echelon, solve_lower
    C = [list(G.coroot(a)) for a in E]
    m, n = len(C), G.n
    if m == 0:
        basis = [unit(n, i) for i in range(1, n + 1)]
        return basis + [neg(b) for b in basis]
    if rank(C) < m:
        raise ValueError("coroots of E_w are dependent; the cone is not simplicial")
    H, U = column_echelon(C)
    kernel = [tuple(U[r][c] for r in range(n)) for c in range(m, n)]
    det = 1
    for i in range(m):
        det *= H[i][i]
    det = abs(det)
    if (det + 1) ** m > 200_000:
        raise ValueError("Hilbert basis search too large")
    pts = []
    for y in itertools.product(range(det + 1), repeat=m):
        if not any(y):
            continue
        t = solve_lower(H, y)
        if t is not None:
            pts.append(y)
    pset = set(pts)
    irreducible = [y for y in pts
                   if not any(tuple(a - b for a, b in zip(y, x)) in pset for x in pts if x != y)]
    out = []
    for y in sorted(irreducible):
        t = solve_lower(H, y)
        chi = tuple(sum(U[r][c] * t[c] for c in range(m)) for r in range(n))
        out.append(chi)
    return out + kernel + [neg(k) for k in kernel]


# -- degrees --------------------------------------------------------------------

def deg_q(G: GroupData, w: WeylElt, lam: Sequence) -> Fraction:
    """``sum_{a in E_w} <h_w^{-1} lam, a^vee>``."""
    x = h_map(G, w).preimage(lam)
    return sum((Fraction(G.pair(x, a)) for a in lower_neighbours(w)), Fraction(0))


def deg_leading(G: GroupData, w: WeylElt, lam: Sequence) -> int:
    """Leading coefficient of ``deg_q`` as ``q`` grows:
    ``sum_{a in E_w} <sigma((w_{0,I} w_0)^{-1} lam), a^vee>``."""
    y = G.sigma_act(w0I_w0(G).inverse().act(lam))
    return sum(G.pair(y, a) for a in lower_neighbours(w))


def deg_cone(G: GroupData, w: WeylElt) -> Cone:
    """``{lam : deg_q(w, lam) >= 0}``."""
    inv = h_map(G, w).inverse
    row = [Fraction(0)] * G.n
    for a in lower_neighbours(w):
        for k, x in enumerate(vec_mat(G.coroot(a), inv)):
            row[k] += x
    return Cone(G.n, hform=[neg(primitive(row))], label=f"deg[{w.window()}]")


# -- orbit functionals ------------------------------------------------------------

def gamma(G: GroupData, orbit: Sequence[Root], subset: Iterable[Root], lam: Sequence) -> Fraction:
    """``Gamma_{O,S}(lam)``: pairings over ``O \\ S`` plus ``1/q`` times those over ``S``."""
    S = set(subset)
    if not S <= set(orbit):
        raise ValueError("subset is not contained in the orbit")
    total = Fraction(0)
    for a in orbit:
        c = Fraction(G.pair(lam, a))
        total += c / G.q if a in S else c
    return total


def gamma_functional(G: GroupData, orbit: Sequence[Root], subset: Iterable[Root]) -> tuple[int, ...]:
    """``q * Gamma_{O,S}`` as an integer functional (made primitive)."""
    S = set(subset)
    row = [0] * G.n
    for a in orbit:
        c = 1 if a in S else G.q
        for k, x in enumerate(G.coroot(a)):
            row[k] += c * x
    return primitive(row)


def orbit_member(G: GroupData, lam: Sequence, orbit: Optional[Sequence[Root]] = None) -> bool:
    """``lam in C_orb`` (or ``C_O`` for a single orbit): the worst subset still
    gives ``Gamma <= 0``, the maximum being taken root by root."""
    for O in ([orbit] if orbit is not None else orbits(G)):
        total = Fraction(0)
        for a in O:
            c = Fraction(G.pair(lam, a))
            total += max(c, c / G.q)
        if total > 0:
            return False
    return True


def orbit_cone(G: GroupData, orbit: Optional[Sequence[Root]] = None, max_size: int = 10) -> Cone:
    """H-form of ``C_O`` (one orbit) or ``C_orb`` (all orbits), one row per subset."""
    rows = []
    for O in ([orbit] if orbit is not None else orbits(G)):
        if len(O) > max_size:
            raise ValueError(f"orbit of size {len(O)} exceeds the subset enumeration limit {max_size}")
        for k in range(len(O) + 1):
            for S in itertools.combinations(O, k):
                rows.append(gamma_functional(G, O, S))
    return Cone(G.n, hform=rows, label="orb")


def lmin_functionals(G: GroupData) -> list[tuple[tuple[Root, ...], frozenset[Root], tuple[int, ...]]]:
    out = []
    for O in orbits(G):
        for S in l_minimal_in_orbit(G, O):
            out.append((O, S, gamma_functional(G, O, S)))
    return out


def lmin_cone(G: GroupData) -> Cone:
    return Cone(G.n, hform=[f for _, _, f in lmin_functionals(G)], label="L-Min")


def levi_dominant_cone(G: GroupData) -> Cone:
    return Cone(G.n, hform=[neg(G.coroot(a)) for a in G.levi_simple], label="dominant")


def is_levi_dominant(G: GroupData, lam: Sequence) -> bool:
    return all(G.pair(lam, a) >= 0 for a in G.levi_simple)


def gs_cone(G: GroupData) -> Cone:
    """Griffiths-Schmid cone: Levi-dominant and nonpositive on outer coroots."""
    rows = [neg(G.coroot(a)) for a in G.levi_simple] + [G.coroot(a) for a in G.outer_roots]
    return Cone(G.n, hform=rows, label="GS")


# -- unipotent cone -----------------------------------------------------------------

def _matrix_of(fn, n: int) -> list[list]:
    return _columns_to_matrix([fn(unit(n, j)) for j in range(1, n + 1)])


@dataclass(frozen=True)
class UnipotentLift:
    """Linear data of the lifted system defining ``C_unip``.

    Unknowns are ``chi_2`` (free, ``n`` entries) followed by one multiplicity
    ``c_a >= 0`` per positive Levi root ``a``:

    * ``lam - q sigma^{-1}(chi_2) + w_{0,M} chi_2 = sum c_a a``,
    * ``<chi_2, a^vee> <= 0`` and ``q <chi_2, a^vee> <= <sigma(lam), a^vee>`` on outer roots.
    """

    G: GroupData

    @cached_property
    def chi_block(self) -> list[list[int]]:
        G = self.G
        s_inv = _matrix_of(G.sigma_inv_act, G.n)
        wm = w0_levi(G).matrix()
        return [[-G.q * s_inv[i][j] + wm[i][j] for j in range(G.n)] for i in range(G.n)]

    @cached_property
    def levi_roots(self) -> tuple[Root, ...]:
        return self.G.levi_positive

    @cached_property
    def sigma_matrix(self) -> list[list[int]]:
        return _matrix_of(self.G.sigma_act, self.G.n)

    def equations(self):
        """Rows of ``[chi_block | -roots] . unknowns = -lam`` (without the right side)."""
        n = self.G.n
        return [self.chi_block[i] + [-a[i] for a in self.levi_roots] for i in range(n)]

    def member(self, lam: Sequence) -> bool:
        G = self.G
        n, m = G.n, len(self.levi_roots)
        a_ub, b_ub = [], []
        slam = G.sigma_act(lam)
        for a in G.outer_roots:
            cv = list(G.coroot(a))
            a_ub.append(cv + [0] * m)
            b_ub.append(0)
            a_ub.append(cv + [0] * m)
            b_ub.append(Fraction(G.pair(slam, a), G.q))
        sol = feasible_point(self.equations(), [-x for x in lam], a_ub, b_ub,
                             nonneg=[False] * n + [True] * m, nvars=n + m)
        return sol is not None


@lru_cache(maxsize=None)
def unipotent_lift(G: GroupData) -> UnipotentLift:
    if not G.sigma_fixes_levi:
        raise ValueError("the unipotent cone needs a parabolic defined over F_q")
    return UnipotentLift(G)


def unip_member(G: GroupData, lam: Sequence) -> bool:
    """``lam in C_unip``, decided by exact LP feasibility of the lifted system."""
    return unipotent_lift(G).member(lam)


def monomial_weight(G: GroupData, m: Mapping[Root, int], xi: Sequence[int]) -> tuple[int, ...]:
    """Weight ``q sigma^{-1}(xi) - w_{0,M} xi + sum m_a w_{0,M}(a)`` of a monomial;
    ``m`` is supported on negative Levi roots."""
    neg_levi = {neg(a) for a in G.levi_positive}
    for a, k in m.items():
        if tuple(a) not in neg_levi:
            raise ValueError(f"{a} is not a negative Levi root")
        if k < 0:
            raise ValueError("multiplicities must be nonnegative")
    wm = w0_levi(G)
    out = [G.q * x for x in G.sigma_inv_act(xi)]
    out = [x - y for x, y in zip(out, wm.act(xi))]
    for a, k in m.items():
        out = [x + k * y for x, y in zip(out, wm.act(a))]
    return tuple(out)


# -- separating systems and intersection cones ------------------------------------

def dual_characters(G: GroupData, w: WeylElt) -> dict[Root, tuple[int, ...]]:
    """For each ``a`` in ``E_w`` a primitive character pairing positively with
    ``a^vee`` and to zero with the other coroots of ``E_w``."""
    E = lower_neighbours(w)
    C = [G.coroot(a) for a in E]
    if rank(C) < len(C):
        raise ValueError(f"coroots of E_w are dependent for {w}")
    out = {}
    for k, a in enumerate(E):
        x = solve(C, [int(i == k) for i in range(len(E))])
        out[a] = primitive(x)
    return out


@dataclass
class SeparatingSystem:
    """A choice of ``EE_w`` inside ``E_w`` with characters ``chi_a``."""

    G: GroupData
    chosen: dict[WeylElt, dict[Root, tuple[int, ...]]] = field(default_factory=dict)

    def subset(self, w: WeylElt) -> dict[Root, tuple[int, ...]]:
        return self.chosen.get(w, {})

    def problems(self) -> list[str]:
        G = self.G
        out = []
        for w, chars in self.chosen.items():
            E = lower_neighbours(w)
            for a, chi in chars.items():
                if a not in E:
                    out.append(f"{w}: {a} is not a lower neighbour root")
                    continue
                if G.pair(chi, a) <= 0:
                    out.append(f"{w}: <chi, {a}> is not positive")
                for b in E:
                    if b != a and G.pair(chi, b) != 0:
                        out.append(f"{w}: chi for {a} pairs nontrivially with {b}")
        return out

    def validate(self) -> None:
        bad = self.problems()
        if bad:
            raise ValueError("; ".join(bad))


def intersection_cone(system: SeparatingSystem, w: WeylElt, _memo: Optional[dict] = None) -> Cone:
    """``C^{+,E}_w``: ``C_{Hasse,w}`` in length one, otherwise
    ``h_w(cone of chi_a) + intersection of C^{+,E}_{w s_a}`` over the chosen roots."""
    memo = {} if _memo is None else _memo
    if w in memo:
        return memo[w]
    G = system.G
    if length(w) <= 1:
        out = hasse_cone(G, w)
    else:
        chars = system.subset(w)
        if not chars:
            out = full_space(G.n)
        else:
            h = h_map(G, w)
            part = Cone(G.n, vform=[h(chi) for chi in chars.values()])
            lower = [intersection_cone(system, w * root_reflection(a, w.kind), memo) for a in chars]
            out = minkowski_sum(part, intersect(*lower))
    memo[w] = out
    return out


# -- reference cones for Sp(6) ------------------------------------------------------

def sp6_reference(G: GroupData, which: str) -> Cone:
    """The cones of ``Sp(6)`` recorded in closed form, intersected with the
    dominant chamber: ``"zip"``, ``"unip"`` or ``"orb"``."""
    if G.kind != "sp" or G.n != 3:
        raise ValueError("reference cones are only recorded for Sp(6)")
    q = G.q
    rows = {
        "zip": [(q * q, 1, q), (q, q * q, 1)],
        "unip": [(q, 1, 1), (q, q * q, 1)],
        "orb": [(q, 1, 1), (q, q, 1)],
    }[which]
    return Cone(3, hform=rows + list(levi_dominant_cone(G).hform()), label=f"Sp6-{which}")


NAMED_CONES = ("GS", "LMin", "Orb", "LeviDominant", "Hasse", "Deg", "Sp6Zip", "Sp6Unip", "Sp6Orb")


def named_cone(G: GroupData, name: str, w: Optional[WeylElt] = None) -> Cone:
    key = name.lower()
    if key in ("hasse", "deg"):
        if w is None:
            raise ValueError(f"cone {name} needs a Weyl group element")
        return hasse_cone(G, w) if key == "hasse" else deg_cone(G, w)
    table = {
        "gs": gs_cone, "lmin": lmin_cone, "orb": orbit_cone,
        "levidominant": levi_dominant_cone,
        "sp6zip": lambda G: sp6_reference(G, "zip"),
        "sp6unip": lambda G: sp6_reference(G, "unip"),
        "sp6orb": lambda G: sp6_reference(G, "orb"),
    }
    if key not in table:
        raise ValueError(f"unknown cone {name!r}; expected one of {', '.join(NAMED_CONES)}")
    return table[key](G)
