"""Weyl groups of types A and C as (signed) permutations.

Conventions
-----------
An element is stored by its images ``w(1), ..., w(n)``; in type C an image
may be negative and ``w(-i) = -w(i)``.  Products are composites of maps,
``(u * v)(i) = u(v(i))``, which is the product of the permutation matrices
whose column ``i`` holds its 1 in row ``w(i)``.  The action on characters is
``w . e_i = e_{w(i)}`` with ``e_{-i} = -e_i``; it is a left action:
``(u * v) . x = u . (v . x)``.

>>> z = WeylElt((3, 1, 2))
>>> z.act((10, 20, 30))
(20, 30, 10)
>>> (z * z).act((10, 20, 30)) == z.act(z.act((10, 20, 30)))
True
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .rootdata import GroupData, Root


@dataclass(frozen=True, order=True)
class WeylElt:
    perm: tuple[int, ...]
    kind: str = "A"

    def __post_init__(self):
        if sorted(map(abs, self.perm)) != list(range(1, len(self.perm) + 1)):
            raise ValueError(f"not a signed permutation: {self.perm}")
        if self.kind == "A" and min(self.perm, default=1) < 0:
            raise ValueError("type A elements cannot carry signs")

    @property
    def n(self) -> int:
        return len(self.perm)

    def __call__(self, i: int) -> int:
        t = self.perm[abs(i) - 1]
        return t if i > 0 else -t

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return WeylElt(tuple(self(other(i)) for i in range(1, self.n + 1)), self.kind)

    def inverse(self) -> "WeylElt":
        inv = [0] * self.n
        for i, t in enumerate(self.perm, 1):
            inv[abs(t) - 1] = i if t > 0 else -i
        return WeylElt(tuple(inv), self.kind)

    def act(self, lam: Sequence) -> tuple:
        if len(lam) != self.n:
            raise ValueError(f"character of length {len(lam)} for a Weyl group of rank {self.n}")
        out = [0] * self.n
        for i, x in enumerate(lam, 1):
            t = self(i)
            out[abs(t) - 1] = x if t > 0 else -x
        return tuple(out)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(1, self.n + 1))

    def window(self) -> str:
        return "[" + " ".join(map(str, self.perm)) + "]"

    def matrix(self) -> list[list[int]]:
        m = [[0] * self.n for _ in range(self.n)]
        for i in range(1, self.n + 1):
            t = self(i)
            m[abs(t) - 1][i - 1] = 1 if t > 0 else -1
        return m

    def __str__(self):
        return self.window()


def identity(n: int, kind: str = "A") -> WeylElt:
    return WeylElt(tuple(range(1, n + 1)), kind)


def from_matrix(m: Sequence[Sequence[int]], kind: str = "A") -> WeylElt:
    """Element whose column ``i`` carries its nonzero entry in row ``w(i)``."""
    n = len(m)
    perm = []
    for col in range(n):
        rows = [row for row in range(n) if m[row][col]]
        if len(rows) != 1:
            raise ValueError("not a monomial matrix")
        perm.append((rows[0] + 1) * m[rows[0]][col])
    return WeylElt(tuple(perm), kind)


def parse_window(text: str, kind: str = "A") -> WeylElt:
    body = text.strip().strip("[]").replace(",", " ")
    return WeylElt(tuple(int(t) for t in body.split()), kind)


def transposition(n: int, i: int, j: int) -> WeylElt:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = j, i
    return WeylElt(tuple(p))


def weyl_kind(G: GroupData) -> str:
    return "A" if G.kind == "gl" else "C"


# -- roots as seen by the group ---------------------------------------------

@lru_cache(maxsize=None)
def _positive_roots(kind: str, n: int) -> tuple[Root, ...]:
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            a = [0] * n
            a[i], a[j] = 1, -1
            out.append(tuple(a))
            if kind == "C":
                a = [0] * n
                a[i], a[j] = 1, 1
                out.append(tuple(a))
        if kind == "C":
            a = [0] * n
            a[i] = 2
            out.append(tuple(a))
    return tuple(out)


@lru_cache(maxsize=None)
def _positive_set(kind: str, n: int) -> frozenset:
    return frozenset(_positive_roots(kind, n))


def positive_roots(w: WeylElt) -> tuple[Root, ...]:
    return _positive_roots(w.kind, w.n)


def root_reflection(a: Root, kind: str = "A") -> WeylElt:
    """The reflection ``s_a`` for a root of type A or C."""
    n = len(a)
    support = [i for i, x in enumerate(a, 1) if x]
    p = list(range(1, n + 1))
    if len(support) == 1:
        i = support[0]
        p[i - 1] = -i
    else:
        i, j = support
        if a[i - 1] * a[j - 1] < 0:
            p[i - 1], p[j - 1] = j, i
        else:
            p[i - 1], p[j - 1] = -j, -i
    return WeylElt(tuple(p), kind)


@lru_cache(maxsize=None)
def length(w: WeylElt) -> int:
    """Number of positive roots sent to negative roots."""
    pos = _positive_set(w.kind, w.n)
    return sum(1 for a in _positive_roots(w.kind, w.n) if w.act(a) not in pos)


def simple_reflections(kind: str, n: int) -> tuple[WeylElt, ...]:
    out = [transposition(n, i, i + 1) for i in range(1, n)]
    if kind == "C":
        out = [WeylElt(s.perm, "C") for s in out] + [root_reflection((0,) * (n - 1) + (2,), "C")]
    return tuple(out)


@lru_cache(maxsize=None)
def lower_neighbours(w: WeylElt) -> tuple[Root, ...]:
    """``E_w``: positive roots ``a`` with ``l(w s_a) = l(w) - 1``, in root order."""
    lw = length(w)
    return tuple(a for a in positive_roots(w)
                 if length(w * root_reflection(a, w.kind)) == lw - 1)


def lower_neighbours_by_pattern(w: WeylElt) -> tuple[Root, ...]:
    """``E_w`` in type A from the one-line picture: positions ``i < j``
    with ``w(i) > w(j)`` and no value strictly between them in between."""
    n = w.n
    out = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if w(i) > w(j) and not any(w(j) < w(k) < w(i) for k in range(i + 1, j)):
                a = [0] * n
                a[i - 1], a[j - 1] = 1, -1
                out.append(tuple(a))
    order = {a: k for k, a in enumerate(positive_roots(w))}
    return tuple(sorted(out, key=order.__getitem__))


def cover_pairs(w: WeylElt) -> list[tuple[Root, WeylElt]]:
    return [(a, w * root_reflection(a, w.kind)) for a in lower_neighbours(w)]


@lru_cache(maxsize=None)
def lower_interval(w: WeylElt) -> frozenset[WeylElt]:
    """All ``u <= w`` in the Bruhat order, by walking down cover relations."""
    seen = {w}
    todo = deque([w])
    while todo:
        u = todo.popleft()
        for _, v in cover_pairs(u):
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return frozenset(seen)


def bruhat_leq(u: WeylElt, w: WeylElt) -> bool:
    if u.n != w.n or u.kind != w.kind:
        raise ValueError("elements of different Weyl groups")
    if length(u) > length(w):
        return False
    return u in lower_interval(w)


def bruhat_cover(u: WeylElt, w: WeylElt) -> bool:
    """Is ``u`` a lower neighbour of ``w``?"""
    return any(v == u for _, v in cover_pairs(w))


def all_elements(kind: str, n: int) -> Iterator[WeylElt]:
    for p in itertools.permutations(range(1, n + 1)):
        if kind == "A":
            yield WeylElt(p)
        else:
            for signs in itertools.product((1, -1), repeat=n):
                yield WeylElt(tuple(s * x for s, x in zip(signs, p)), "C")


def reduced_word(w: WeylElt) -> tuple[int, ...]:
    """Indices (1-based) of simple reflections with ``w = s_{i_1} ... s_{i_l}``."""
    gens = simple_reflections(w.kind, w.n)
    word = []
    u = w
    while not u.is_identity():
        for k, s in enumerate(gens):
            v = u * s
            if length(v) < length(u):
                word.append(k + 1)
                u = v
                break
    return tuple(reversed(word))


# -- the group with its parabolic --------------------------------------------

def longest_element(kind: str, n: int, gens: Sequence[WeylElt]) -> WeylElt:
    """Longest element of the subgroup generated by simple reflections ``gens``."""
    w = identity(n, kind)
    grew = True
    while grew:
        grew = False
        for s in gens:
            v = w * s
            if length(v) > length(w):
                w, grew = v, True
    return w


def simple_reflection_of(G: GroupData, a: Root) -> WeylElt:
    return root_reflection(a, weyl_kind(G))


def w0(G: GroupData) -> WeylElt:
    kind = weyl_kind(G)
    return longest_element(kind, G.n, simple_reflections(kind, G.n))


def w0_levi(G: GroupData) -> WeylElt:
    return longest_element(weyl_kind(G), G.n, [simple_reflection_of(G, a) for a in G.levi_simple])


def sigma_conj(G: GroupData, w: WeylElt) -> WeylElt:
    """``sigma(w)``: conjugate of ``w`` by the lattice automorphism."""
    sig = WeylElt(G.sigma_perm, "C")
    res = sig * WeylElt(w.perm, "C") * sig.inverse()
    return WeylElt(res.perm, w.kind)


def z_element(G: GroupData) -> WeylElt:
    """``z = sigma(w_{0,I}) w_0``."""
    return sigma_conj(G, w0_levi(G)) * w0(G)


def levi_subgroup(G: GroupData) -> list[WeylElt]:
    gens = [simple_reflection_of(G, a) for a in G.levi_simple]
    e = identity(G.n, weyl_kind(G))
    seen = {e}
    todo = [e]
    while todo:
        u = todo.pop()
        for s in gens:
            v = u * s
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return sorted(seen, key=lambda u: (length(u), u.perm))


def min_coset_reps(G: GroupData, levi: Sequence[Root] | None = None, side: str = "right") -> list[WeylElt]:
    """Minimal-length representatives: ``W^K`` (``side='right'``, cosets
    ``w W_K``) or ``^K W`` (``side='left'``)."""
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    levi = G.levi_simple if levi is None else levi
    gens = [simple_reflection_of(G, a) for a in levi]
    out = []
    for w in all_elements(weyl_kind(G), G.n):
        lw = length(w)
        if side == "right" and all(length(w * s) > lw for s in gens):
            out.append(w)
        elif side == "left" and all(length(s * w) > lw for s in gens):
            out.append(w)
    return sorted(out, key=lambda u: (length(u), u.perm))


def in_min_coset_reps(G: GroupData, w: WeylElt) -> bool:
    lw = length(w)
    return all(length(w * simple_reflection_of(G, a)) > lw for a in G.levi_simple)


def orbits(G: GroupData) -> list[tuple[Root, ...]]:
    """Orbits of ``W_L`` extended by ``sigma`` on the positive roots outside the Levi."""
    if not G.sigma_fixes_levi:
        raise ValueError("sigma does not preserve the Levi; orbits are undefined")
    outer = set(G.outer_roots)
    gens = [simple_reflection_of(G, a) for a in G.levi_simple]
    left = list(G.outer_roots)
    out = []
    while left:
        start = left[0]
        orb = {start}
        todo = [start]
        while todo:
            a = todo.pop()
            for b in [s.act(a) for s in gens] + [G.sigma_act(a)]:
                if b not in orb:
                    if b not in outer:
                        raise ValueError("sigma does not preserve the outer roots")
                    orb.add(b)
                    todo.append(b)
        order = {a: k for k, a in enumerate(G.outer_roots)}
        out.append(tuple(sorted(orb, key=order.__getitem__)))
        left = [a for a in left if a not in orb]
    return out


def orbit_coroot_sum(G: GroupData, orbit: Sequence[Root]) -> tuple[int, ...]:
    """``delta_O``: the sum of coroots over an orbit."""
    out = [0] * G.n
    for a in orbit:
        for k, x in enumerate(G.coroot(a)):
            out[k] += x
    return tuple(out)


def is_l_minimal(G: GroupData, subset: Iterable[Root]) -> bool:
    """Closed under subtracting Levi simple roots, as long as the result stays positive."""
    S = set(subset)
    pos = set(G.positive_roots)
    for a in S:
        for b in G.levi_simple:
            d = tuple(x - y for x, y in zip(a, b))
            if d in pos and d not in S:
                return False
    return True


def min_set(G: GroupData, w: WeylElt) -> frozenset[Root]:
    """``Min(w)``: outer roots ``a`` with ``l(w s_a) < l(w)``, for ``w`` in ``W^I``."""
    if not in_min_coset_reps(G, w):
        raise ValueError(f"{w} is not a minimal coset representative")
    lw = length(w)
    return frozenset(a for a in G.outer_roots
                     if length(w * root_reflection(a, weyl_kind(G))) < lw)


def l_minimal_subsets(G: GroupData) -> list[frozenset[Root]]:
    """All L-minimal subsets of the outer roots, via ``Min`` on ``W^I``."""
    out = {min_set(G, w) for w in min_coset_reps(G)}
    order = {a: k for k, a in enumerate(G.outer_roots)}
    return sorted(out, key=lambda S: (len(S), sorted(order[a] for a in S)))


def l_minimal_in_orbit(G: GroupData, orbit: Sequence[Root]) -> list[frozenset[Root]]:
    """Traces on ``orbit`` of the L-minimal subsets of all outer roots."""
    O = set(orbit)
    out = {S & O for S in l_minimal_subsets(G)}
    order = {a: k for k, a in enumerate(G.outer_roots)}
    return sorted(out, key=lambda S: (len(S), sorted(order[a] for a in S)))


def has_independent_coroots(G: GroupData, w: WeylElt) -> bool:
    """Whether the coroots of ``E_w`` are linearly independent."""
    from .cones.exact import rank
    rows = [G.coroot(a) for a in lower_neighbours(w)]
    return rank(rows) == len(rows)

