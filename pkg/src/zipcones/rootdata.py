"""Root data for the two families handled by the package.

``GL_n`` with signature ``(r, s)`` and ``Sp(2n)`` with its Siegel parabolic.
Characters are integer tuples of length ``n`` in the standard basis
``e_1..e_n``; roots and coroots live in the same coordinates, and the pairing
is the dot product of a character with the coroot vector.

>>> G = gl(2, 1, q=2)
>>> G.simple_roots
((1, -1, 0), (0, 1, -1))
>>> G.levi_simple
((1, -1, 0),)
>>> G.outer_roots
((1, 0, -1), (0, 1, -1))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from sympy import factorint

Vector = tuple[int, ...]
Root = tuple[int, ...]


def unit(n: int, i: int, c: int = 1) -> Vector:
    """``c * e_i`` (1-based) in ``Z^n``."""
    v = [0] * n
    v[i - 1] = c
    return tuple(v)


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def pairing(lam: Sequence, covec: Sequence):
    """``<lam, covec>`` for a character and a cocharacter of the same rank."""
    if len(lam) != len(covec):
        raise ValueError(f"rank mismatch: {len(lam)} against {len(covec)}")
    return dot(lam, covec)


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


@dataclass(frozen=True)
class GroupData:
    """A split reductive group with a chosen parabolic type and Frobenius twist.

    ``sigma`` lists, for each simple root (0-based, in the order of
    :attr:`simple_roots`), the index of its image under the diagram
    automorphism.  Only the identity and, for ``GL_n``, the flip
    ``alpha_i -> alpha_{n-i}`` extend to the character lattice here.

    With ``formal_q`` the number ``q`` is only a parameter in the formulas
    (any integer ``>= 2``), used to look at behaviour for large ``q``.
    """

    kind: str
    n: int
    r: Optional[int]
    s: Optional[int]
    q: int
    sigma: tuple[int, ...] = field(default=())
    formal_q: bool = False

    def __post_init__(self):
        if self.kind not in ("gl", "sp"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.formal_q and self.q < 2:
            raise ValueError("q must be at least 2")
        if not self.formal_q and not is_prime_power(self.q):
            raise ValueError(f"q={self.q} is not a prime power")
        if self.kind == "gl":
            if self.r is None or self.s is None or self.r < 1 or self.s < 1:
                raise ValueError("GL_n needs r >= 1 and s >= 1")
            if self.r + self.s != self.n:
                raise ValueError("GL_n needs r + s = n")
        elif self.n < 1:
            raise ValueError("Sp(2n) needs n >= 1")
        rank = len(self.simple_roots)
        if not self.sigma:
            object.__setattr__(self, "sigma", tuple(range(rank)))
        sig = self.sigma
        if sorted(sig) != list(range(rank)):
            raise ValueError("sigma must permute the simple roots")
        cartan = self.cartan_matrix
        if any(cartan[sig[i]][sig[j]] != cartan[i][j]
               for i in range(rank) for j in range(rank)):
            raise ValueError("sigma is not a diagram automorphism")
        if any(sig[sig[i]] != i for i in range(rank)):
            raise ValueError("sigma must have order at most 2")

    # -- roots -------------------------------------------------------------

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        n = self.n
        out = [tuple(a - b for a, b in zip(unit(n, i), unit(n, i + 1)))
               for i in range(1, n)]
        if self.kind == "sp":
            out.append(unit(n, n, 2))
        return tuple(out)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        n = self.n
        out = []
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append(tuple(a - b for a, b in zip(unit(n, i), unit(n, j))))
                if self.kind == "sp":
                    out.append(tuple(a + b for a, b in zip(unit(n, i), unit(n, j))))
            if self.kind == "sp":
                out.append(unit(n, i, 2))
        return tuple(sorted(out, key=root_key))

    @cached_property
    def roots(self) -> frozenset[Root]:
        return frozenset(self.positive_roots) | {neg(a) for a in self.positive_roots}

    @cached_property
    def levi_simple(self) -> tuple[Root, ...]:
        """Simple roots of the Levi (the type ``I``)."""
        if self.kind == "gl":
            return tuple(a for k, a in enumerate(self.simple_roots, 1) if k != self.r)
        return self.simple_roots[:-1]

    @cached_property
    def levi_positive(self) -> tuple[Root, ...]:
        idx = {self.simple_roots.index(a) for a in self.levi_simple}
        return tuple(a for a in self.positive_roots
                     if all(c == 0 or k in idx for k, c in enumerate(self.simple_coords(a))))

    @cached_property
    def outer_roots(self) -> tuple[Root, ...]:
        """Positive roots outside the Levi."""
        lp = set(self.levi_positive)
        return tuple(a for a in self.positive_roots if a not in lp)

    def simple_coords(self, a: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of a root-lattice vector in the basis of simple roots."""
        partial, out = 0, []
        for x in a[:-1]:
            partial += x
            out.append(Fraction(partial))
        if self.kind == "sp":
            out.append(Fraction(partial + a[-1], 2))
        return tuple(out)

    def coroot(self, a: Root) -> Vector:
        if self.kind == "sp" and sum(abs(x) for x in a) == 2 and max(map(abs, a)) == 2:
            return tuple(x // 2 for x in a)
        return tuple(a)

    def pair(self, lam: Sequence, a: Root):
        """``<lam, a^vee>``."""
        return pairing(lam, self.coroot(a))

    def is_positive(self, a: Root) -> bool:
        return a in set(self.positive_roots)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        sr = self.simple_roots
        return tuple(tuple(self.pair(a, b) for b in sr) for a in sr)

    # -- Frobenius twist ----------------------------------------------------

    @cached_property
    def sigma_perm(self) -> tuple[int, ...]:
        """The lattice automorphism extending ``sigma``, as a signed permutation."""
        rank = len(self.simple_roots)
        if self.sigma == tuple(range(rank)):
            return tuple(range(1, self.n + 1))
        if self.kind == "gl":
            # the flip extends as lambda -> -w_0 lambda
            return tuple(-(self.n + 1 - i) for i in range(1, self.n + 1))
        raise ValueError("no lattice extension for this sigma")

    def sigma_act(self, lam: Sequence) -> tuple:
        return _signed_act(self.sigma_perm, lam)

    def sigma_inv_act(self, lam: Sequence) -> tuple:
        return _signed_act(_signed_inverse(self.sigma_perm), lam)

    @property
    def split(self) -> bool:
        return self.sigma == tuple(range(len(self.simple_roots)))

    @cached_property
    def sigma_fixes_levi(self) -> bool:
        return set(map(self.sigma_act, self.levi_simple)) == set(self.levi_simple)

    # -- misc ---------------------------------------------------------------

    def with_q(self, q: int, formal: bool = False) -> "GroupData":
        return GroupData(self.kind, self.n, self.r, self.s, q, self.sigma, formal)

    def describe(self) -> dict:
        return {"kind": self.kind, "n": self.n, "r": self.r, "s": self.s,
                "q": self.q, "sigma": [i + 1 for i in self.sigma]}

    def __str__(self):
        if self.kind == "gl":
            return f"GL_{self.n}({self.r},{self.s}) q={self.q}"
        return f"Sp({2 * self.n}) q={self.q}"


def gl(r: int, s: int, q: int = 2, sigma: Sequence[int] = ()) -> GroupData:
    return GroupData("gl", r + s, r, s, q, tuple(sigma))


def sp(n: int, q: int = 2) -> GroupData:
    return GroupData("sp", n, None, None, q)


def build_group(kind: str, n: int, r: Optional[int] = None, q: int = 2,
                sigma: Sequence[int] = ()) -> GroupData:
    """``build_group("gl", 3, r=2)`` or ``build_group("sp", 3)``."""
    if kind == "gl":
        if r is None:
            raise ValueError("GL_n needs the signature r")
        return gl(r, n - r, q=q, sigma=sigma)
    if sigma and tuple(sigma) != tuple(range(n)):
        raise ValueError("Sp(2n) has no diagram automorphism here")
    return sp(n, q=q)


def flip(n: int) -> tuple[int, ...]:
    """The diagram flip of ``A_{n-1}`` in the ``sigma`` encoding."""
    return tuple(n - 2 - i for i in range(n - 1))


def neg(v: Sequence) -> tuple:
    return tuple(-x for x in v)


def root_key(a: Root):
    return tuple(-x for x in a)


def _signed_act(perm: Sequence[int], lam: Sequence) -> tuple:
    out = [0] * len(lam)
    for i, x in enumerate(lam):
        t = perm[i]
        out[abs(t) - 1] = x if t > 0 else -x
    return tuple(out)


def _signed_inverse(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for i, t in enumerate(perm, 1):
        inv[abs(t) - 1] = i if t > 0 else -i
    return tuple(inv)
