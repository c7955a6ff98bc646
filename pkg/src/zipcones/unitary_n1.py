"""Combinatorics of ``GL_n`` with signature ``(n-1, 1)``.

The element ``z`` is the cycle ``[n 1 2 ... n-1]``; the elements below it in
the Bruhat order ("z-small") are the block permutations ``[m_1, ..., m_k]``
obtained by cutting ``z`` along a composition of ``n``.  This module builds
them, their Hasse inequalities in closed form, the certificates showing that
Hasse cones of two lower neighbours cut out a Hasse inequality of ``w``, and
an auxiliary chain from ``w_0`` down to ``z``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .cones import Cone, InclusionResult, includes, primitive
from .cones.exact import fmt_fraction, rank
from .rootdata import GroupData, Root, gl, unit
from .weightcones import (SeparatingSystem, dual_characters, hasse_functional, h_map,
                          levi_dominant_cone, lmin_cone)
from .weyl import (WeylElt, from_matrix, length, lower_neighbours, root_reflection,
                   transposition, w0_levi, z_element)


def group(n: int, q: int) -> GroupData:
    return gl(n - 1, 1, q=q)


def root(n: int, i: int, j: int) -> Root:
    """The positive root ``e_i - e_j`` (``i < j``) attached to the transposition ``(i j)``."""
    i, j = min(i, j), max(i, j)
    return tuple(a - b for a, b in zip(unit(n, i), unit(n, j)))


def transposition_of(a: Root) -> tuple[int, int]:
    i = a.index(1) + 1
    j = a.index(-1) + 1
    return (min(i, j), max(i, j))


# -- z-small elements ---------------------------------------------------------------

def block_perm(composition: Sequence[int]) -> WeylElt:
    """``[m_1, ..., m_k]``: each block acts as the cycle ``[m 1 2 ... m-1]``."""
    perm = []
    start = 0
    for m in composition:
        if m < 1:
            raise ValueError("composition parts must be positive")
        block = [start + m] + [start + t for t in range(1, m)]
        perm.extend(block)
        start += m
    return WeylElt(tuple(perm))


def compositions(n: int) -> list[tuple[int, ...]]:
    out = []
    for cuts in itertools.product((0, 1), repeat=n - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        out.append(tuple(parts))
    return sorted(out)


@dataclass(frozen=True)
class ZSmall:
    composition: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.composition)

    @property
    def k(self) -> int:
        return len(self.composition)

    @cached_property
    def element(self) -> WeylElt:
        return block_perm(self.composition)

    @cached_property
    def partial_sums(self) -> tuple[int, ...]:
        """``(M_0, ..., M_k)`` with ``M_0 = 0`` and ``M_k = n``."""
        return tuple(itertools.accumulate(self.composition, initial=0))

    def start(self, i: int) -> int:
        """First position of block ``i`` (1-based): ``M_{i-1} + 1``."""
        return self.partial_sums[i - 1] + 1

    def block_roots(self, i: int) -> list[Root]:
        """``E_w^{(i)}``: the roots ``(M_{i-1}+1, M_{i-1}+j)`` for ``1 < j <= m_i``."""
        s = self.start(i)
        return [root(self.n, s, s + j - 1) for j in range(2, self.composition[i - 1] + 1)]

    def e_partition(self) -> list[list[Root]]:
        return [self.block_roots(i) for i in range(1, self.k + 1)]

    @cached_property
    def gamma(self) -> WeylElt:
        """``w^{-1} z``."""
        return self.element.inverse() * z_element(group(self.n, 2))

    def gamma_cycle(self) -> tuple[int, ...]:
        """The cycle ``(1, M_{k-1}+1, ..., M_1+1)``."""
        M = self.partial_sums
        return (1,) + tuple(M[t] + 1 for t in range(self.k - 1, 0, -1))

    def locate(self, a: Root) -> tuple[int, int]:
        """``(i, j)`` with ``a = (M_{i-1}+1, M_{i-1}+j)``."""
        lo, hi = transposition_of(a)
        for i in range(1, self.k + 1):
            s = self.start(i)
            if lo == s and s < hi <= s + self.composition[i - 1] - 1:
                return i, hi - s + 1
        raise ValueError(f"{a} is not a lower neighbour root of {self.composition}")

    def split(self, i: int, first: int) -> "ZSmall":
        """Cut block ``i`` into ``[first, m_i - first]``."""
        m = list(self.composition)
        if not 0 < first < m[i - 1]:
            raise ValueError("cannot split a block there")
        m[i - 1: i] = [first, m[i - 1] - first]
        return ZSmall(tuple(m))

    def __str__(self):
        return "[" + ",".join(map(str, self.composition)) + "]"


def zsmall(composition: Sequence[int]) -> ZSmall:
    parts = tuple(int(m) for m in composition)
    if not parts or any(m < 1 for m in parts):
        raise ValueError(f"not a composition: {composition}")
    return ZSmall(parts)


def enumerate_zsmall(n: int) -> list[ZSmall]:
    return [ZSmall(c) for c in compositions(n)]


def composition_of(w: WeylElt) -> Optional[tuple[int, ...]]:
    """The composition if ``w`` is a block permutation, else None."""
    parts, start, n = [], 0, w.n
    while start < n:
        top = w(start + 1)
        m = top - start
        if m < 1 or start + m > n:
            return None
        parts.append(m)
        start += m
    return tuple(parts) if block_perm(parts) == w else None


# -- shapes ----------------------------------------------------------------------

def v_shapes(w: WeylElt) -> list[tuple[int, int, int]]:
    """Triples ``i < j < k`` with ``w(i) < w(j) > w(k)``."""
    n = w.n
    return [(i, j, k) for i, j, k in itertools.combinations(range(1, n + 1), 3)
            if w(i) < w(j) and w(k) < w(j)]


def sqrt_shapes(w: WeylElt) -> list[tuple[int, int, int]]:
    """V-shapes whose left foot is the higher one, ``w(i) > w(k)``.

    These are exactly the triples where two lower neighbours ``(i k)`` and
    ``(j k)`` share their larger index, so without them ``E_w -> n,
    (i j) -> j`` is injective and the coroots of ``E_w`` are independent.
    """
    return [(i, j, k) for i, j, k in v_shapes(w) if w(i) > w(k)]


@dataclass(frozen=True)
class ShapeReport:
    has_v_shape: bool
    has_sqrt_shape: bool
    admits_partial_hasse_system: bool


def shape_test(w: WeylElt) -> ShapeReport:
    """Pattern scan plus the rank test on the coroots of ``E_w``."""
    rows = list(lower_neighbours(w))
    return ShapeReport(bool(v_shapes(w)), bool(sqrt_shapes(w)), rank(rows) == len(rows))


# -- Hasse inequalities in closed form --------------------------------------------

def closed_form_coefficients(zs: ZSmall, i: int, q: int) -> dict[int, int]:
    """Coefficients on the block starts for the Hasse inequality of any root
    in block ``i``, in the variables ``x = z^{-1} lam`` (before homogenising)."""
    k, M = zs.k, zs.partial_sums
    c: dict[int, int] = {}
    for d in range(1, i):
        c[M[i - d] + 1] = q ** (k - d)
    c[1] = q ** (k - i)
    for d in range(i, k):
        c[M[d] + 1] = q ** (d - i)
    return c


def homogenise(coeffs: dict[int, int], at: int, n: int) -> tuple[Fraction, ...]:
    """``sum c_a (x_a - x_at)`` as a vector in the ``x`` variables."""
    v = [Fraction(0)] * n
    for a, c in coeffs.items():
        v[a - 1] += c
        v[at - 1] -= c
    return tuple(v)


def hasse_x_form(zs: ZSmall, a: Root, q: int) -> tuple[Fraction, ...]:
    """The Hasse inequality of ``a`` as ``g(x) >= 0`` with ``x = z^{-1} lam``."""
    i, j = zs.locate(a)
    return homogenise(closed_form_coefficients(zs, i, q), zs.start(i) + j - 1, zs.n)


def x_to_lambda(g: Sequence, n: int) -> tuple:
    """Rewrite a functional of ``x = z^{-1} lam`` as a functional of ``lam``."""
    return z_element(group(n, 2)).act(g)


def hasse_inequality(zs: ZSmall, a: Root, q: int) -> tuple[int, ...]:
    """H-form (``f . lam <= 0``) of the Hasse inequality of ``a`` in ``E_w``."""
    return primitive([-x for x in x_to_lambda(hasse_x_form(zs, a, q), zs.n)])


def hasse_cone_closed_form(zs: ZSmall, q: int) -> Cone:
    rows = [hasse_inequality(zs, a, q) for block in zs.e_partition() for a in block]
    return Cone(zs.n, hform=rows, label=f"Hasse{zs}")


# -- certificates for the inductive step -------------------------------------------

@dataclass(frozen=True)
class InterconeWitness:
    case: str
    w: ZSmall
    alpha: Root
    w1: ZSmall
    alpha1: Root
    w2: ZSmall
    alpha2: Root
    delta: Fraction


def intercone_witness(zs: ZSmall, a: Root, q: int, donor: Optional[int] = None) -> InterconeWitness:
    """Choose the two lower neighbours for the root ``a``.  In the case of a
    block of size two, ``donor`` picks the other block to cut (default: the
    nearest block of size at least two to the right, otherwise to the left)."""
    if length(zs.element) < 2:
        raise ValueError("needs an element of length at least two")
    i, j = zs.locate(a)
    k, n = zs.k, zs.n
    s = zs.start(i)
    m_i = zs.composition[i - 1]
    total = sum(Fraction(q) ** t for t in range(k + 1))
    if j >= 3:
        return InterconeWitness("j>=3", zs, a, zs.split(i, 1), root(n, s + 1, s + j - 1),
                                zs.split(i, j - 1), root(n, s, s + 1), Fraction(q) ** k / total)
    if m_i > 2:
        return InterconeWitness("j=2,m>2", zs, a, zs.split(i, 2), a,
                                zs.split(i, 1), root(n, s + 1, s + 2), 1 / total)
    big = [t for t in range(1, k + 1) if t != i and zs.composition[t - 1] >= 2]
    if donor is None:
        right = [t for t in big if t > i]
        donor = right[0] if right else big[-1]
    if donor not in big:
        raise ValueError(f"block {donor} cannot donate")
    st = zs.start(donor)
    expo = donor - i if donor > i else k - i + donor
    return InterconeWitness("j=2,m=2", zs, a, zs.split(donor, 1), a,
                            zs.split(i, 1), root(n, st, st + 1), Fraction(q) ** expo / total)


@dataclass
class InterconeCheck:
    """Outcome of combining the two neighbouring inequalities.

    ``multiplier`` is the ``c > 0`` with ``(E1) + delta (E2) = c (target)``
    when the combination is proportional to the target at all.  The literal
    identity uses ``c = 1 + delta q``; ``residual`` is what is left over.
    """

    witness: InterconeWitness
    q: int
    e1: tuple[Fraction, ...]
    e2: tuple[Fraction, ...]
    target: tuple[Fraction, ...]
    multiplier: Optional[Fraction]
    lower_neighbours_ok: bool
    inclusion: Optional[InclusionResult] = None

    @property
    def combination(self) -> tuple[Fraction, ...]:
        d = self.witness.delta
        return tuple(x + d * y for x, y in zip(self.e1, self.e2))

    @property
    def expected_multiplier(self) -> Fraction:
        return 1 + self.witness.delta * self.q

    @property
    def residual(self) -> tuple[Fraction, ...]:
        c = self.expected_multiplier
        return tuple(x - c * t for x, t in zip(self.combination, self.target))

    @property
    def proportional(self) -> bool:
        return self.multiplier is not None and self.multiplier > 0

    @property
    def literal(self) -> bool:
        return not any(self.residual)

    @property
    def ok(self) -> bool:
        """Positive multiple, genuine lower neighbours, and (if run) the inclusion."""
        return self.proportional and self.lower_neighbours_ok and \
            (self.inclusion is None or self.inclusion.holds)

    def to_json(self) -> dict:
        wit = self.witness
        out = {"w": list(wit.w.composition), "alpha": list(wit.alpha), "q": self.q,
               "case": wit.case, "w1": list(wit.w1.composition), "alpha1": list(wit.alpha1),
               "w2": list(wit.w2.composition), "alpha2": list(wit.alpha2),
               "delta": fmt_fraction(wit.delta),
               "multiplier": None if self.multiplier is None else fmt_fraction(self.multiplier),
               "one_plus_delta_q": fmt_fraction(self.expected_multiplier),
               "residual": [fmt_fraction(x) for x in self.residual],
               "literal_identity": self.literal, "verified": self.ok}
        if self.inclusion is not None:
            out["inclusion"] = self.inclusion.to_json()
        return out


def _ratio(u: Sequence[Fraction], v: Sequence[Fraction]) -> Optional[Fraction]:
    """``c`` with ``u = c v`` when it exists."""
    c = None
    for x, y in zip(u, v):
        if y == 0:
            if x != 0:
                return None
            continue
        r = Fraction(x) / y
        if c is None:
            c = r
        elif r != c:
            return None
    return c


def verify_intercone(zs: ZSmall, a: Root, q: int, donor: Optional[int] = None,
                     semantic: bool = True) -> InterconeCheck:
    """Form ``(E1) + delta (E2)`` from the closed-form inequalities and compare
    it with the target, exactly.  With ``semantic`` the cone inclusion is also
    decided, with Farkas certificates."""
    wit = intercone_witness(zs, a, q, donor)
    e1 = hasse_x_form(wit.w1, wit.alpha1, q)
    e2 = hasse_x_form(wit.w2, wit.alpha2, q)
    tg = hasse_x_form(zs, a, q)
    mult = _ratio(tuple(x + wit.delta * y for x, y in zip(e1, e2)), tg)
    w = zs.element
    lower = {w * root_reflection(b) for b in lower_neighbours(w)}
    nb_ok = (wit.w1.element in lower and wit.w2.element in lower
             and wit.alpha1 in lower_neighbours(wit.w1.element)
             and wit.alpha2 in lower_neighbours(wit.w2.element))
    check = InterconeCheck(wit, q, e1, e2, tg, mult, nb_ok)
    if semantic:
        G = group(zs.n, q)
        c12 = Cone(zs.n, hform=[hasse_functional(G, wit.w1.element, wit.alpha1),
                                hasse_functional(G, wit.w2.element, wit.alpha2)])
        target = Cone(zs.n, hform=[hasse_functional(G, w, a)])
        check.inclusion = includes(c12, target)
    return check


# -- the separating system used for z-small strata --------------------------------

def zsmall_separating_system(G: GroupData) -> SeparatingSystem:
    """``E_w`` with dual characters on z-small elements, nothing elsewhere."""
    if G.kind != "gl" or G.s != 1:
        raise ValueError("defined for GL_n with signature (n-1, 1)")
    chosen = {zs.element: dual_characters(G, zs.element) for zs in enumerate_zsmall(G.n)}
    return SeparatingSystem(G, chosen)


# -- the auxiliary chain from w_0 to z ------------------------------------------------

def lambda_matrix(n: int, d: int) -> list[list[int]]:
    """Identity block of size ``d`` in the upper right, anti-diagonal block of
    size ``n - d`` in the lower left."""
    m = [[0] * n for _ in range(n)]
    for t in range(d):
        m[t][n - d + t] = 1
    for t in range(n - d):
        m[d + t][n - d - 1 - t] = 1
    return m


def lambda_element(n: int, d: int) -> WeylElt:
    return from_matrix(lambda_matrix(n, d))


def path_element(n: int, d: int, i: int) -> WeylElt:
    """``Lambda_d (n-d n)(n-d n-1) ... (n-d n-i+2)``."""
    w = lambda_element(n, d)
    for t in range(2, i + 1):
        w = w * transposition(n, n - d, n - t + 2)
    return w


@dataclass(frozen=True)
class PathStep:
    d: int
    i: int
    upper: WeylElt
    alpha: Root
    lower: WeylElt
    chi: tuple[int, ...]
    weight: tuple[int, ...]


def path_root(n: int, d: int, i: int) -> Root:
    return root(n, n - d, n + 1 - i)


def path_character(n: int, i: int) -> tuple[int, ...]:
    """``-e_{n+1-i}``: pairs to 1 with ``path_root`` and to 0 with the rest of ``E``."""
    return unit(n, n + 1 - i, -1)


def expected_path_weight(G: GroupData, d: int, i: int) -> tuple[int, ...]:
    """``e_{d-i+1} - q w_{0,I}(e_i)``."""
    n = G.n
    return tuple(a - G.q * b for a, b in zip(unit(n, d - i + 1), w0_levi(G).act(unit(n, i))))


def aux_path(n: int, q: int, include_last: bool = False) -> list[PathStep]:
    """Cover relations ``w^{(d)}_i > w^{(d)}_{i+1}`` for ``d = 1..n-2``
    (up to ``n-1`` if ``include_last``), with ``h_w(chi)`` at each step."""
    if n < 3:
        raise ValueError("needs n >= 3")
    G = group(n, q)
    out = []
    last = n - 1 if include_last else n - 2
    for d in range(1, last + 1):
        for i in range(1, d + 1):
            w = path_element(n, d, i)
            a = path_root(n, d, i)
            chi = path_character(n, i)
            out.append(PathStep(d, i, w, a, w * root_reflection(a), chi, h_map(G, w)(chi)))
    return out


def path_partition(n: int, d: int, i: int) -> list[Root]:
    """The expected ``E`` of ``w^{(d)}_i``."""
    if d == n - 1:
        return [root(n, 1, j) for j in range(2, n - i + 2)]
    A = [root(n, j, j + 1) for j in range(1, n - d)]
    B = [root(n, n - d - 1, n + 1 - j) for j in range(1, i)]
    C = [root(n, n - d, n - d + j) for j in range(1, d - i + 2)]
    return A + B + C


def lambda_ab(n: int, a: int, b: int, q: int) -> tuple[int, ...]:
    """``e_a - q e_b``."""
    return tuple(x - q * y for x, y in zip(unit(n, a), unit(n, b)))


def lambda_ab_in_lmin(n: int, r: int, a: int, b: int, q: int) -> bool:
    """Is ``e_a - q e_b`` in the L-minimal cone of ``GL_n`` with signature ``(r, n-r)``?"""
    if not (1 <= a <= n and 1 <= b <= n):
        raise ValueError("indices out of range")
    return lmin_cone(gl(r, n - r, q=q)).member(lambda_ab(n, a, b, q))


# -- the resulting weight bound --------------------------------------------------------

def _partial_sum_functional(n: int, j: int, q: int) -> tuple[int, ...]:
    """``q sum_{i<=j} (k_i - k_n) + sum_{j<i<n} (k_i - k_n)``."""
    row = [q if i <= j else 1 for i in range(1, n)]
    return tuple(row + [-sum(row)])


def cfmin_cone(n: int, q: int) -> Cone:
    """The ``n - 1`` inequalities bounding weights of nonzero forms, with ``1/q`` cleared."""
    if n < 2:
        raise ValueError("needs n >= 2")
    return Cone(n, hform=[_partial_sum_functional(n, j, q) for j in range(1, n)], label="CF-Min")


def signature_n1_system(n: int, q: int, with_k0: bool = True) -> Cone:
    """``C_{L-Min}`` for signature ``(n-1, 1)`` written out, intersected with the
    dominant chamber.  The ``k = 0`` row is redundant there."""
    rows = [_partial_sum_functional(n, k, q) for k in range(0 if with_k0 else 1, n)]
    dom = levi_dominant_cone(group(n, q)).hform()
    return Cone(n, hform=rows + list(dom), label="n1-system")
