"""Polyhedral cones in a character lattice ``Z^n``, exact throughout.

A cone carries an H-form (primitive integer functionals ``f`` meaning
``f . x <= 0``), a V-form (generators), or both; the missing form is computed
on demand by double description.  ``semantics`` is ``"rational"`` for the
lattice points of the rational cone and ``"monoid"`` for the monoid spanned by
the generators.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import dd
from .exact import fmt_fraction, is_zero, primitive
from .lp import feasible_point, nonneg_combination

Functional = tuple[int, ...]


def canonical_hform(rows: Iterable[Sequence]) -> tuple[Functional, ...]:
    return tuple(sorted({primitive(r) for r in rows if not is_zero(r)}))


def apply(f: Sequence, x: Sequence):
    return sum(a * b for a, b in zip(f, x))


def format_functional(f: Sequence, var: str = "k") -> str:
    """``(2, -1, 0)`` -> ``'2*k1 - k2 <= 0'``."""
    terms = []
    for i, c in enumerate(f, 1):
        c = Fraction(c)
        if c == 0:
            continue
        mag = abs(c)
        body = f"{var}{i}" if mag == 1 else f"{fmt_fraction(mag)}*{var}{i}"
        terms.append(("- " if c < 0 else "+ ") + body)
    if not terms:
        return "0 <= 0"
    s = " ".join(terms)
    s = s[2:] if s.startswith("+ ") else "-" + s[2:]
    return s + " <= 0"


class Cone:
    def __init__(self, dim: int, hform: Optional[Iterable[Sequence]] = None,
                 vform: Optional[Iterable[Sequence]] = None,
                 semantics: str = "rational", label: str = ""):
        if hform is None and vform is None:
            raise ValueError("a cone needs an H-form or a V-form")
        if semantics not in ("rational", "monoid"):
            raise ValueError(f"unknown semantics {semantics!r}")
        if semantics == "monoid" and vform is None:
            raise ValueError("monoid semantics needs generators")
        self.dim = dim
        self.semantics = semantics
        self.label = label
        self._h = canonical_hform(hform) if hform is not None else None
        if vform is not None:
            gens = [tuple(int(x) for x in primitive(g)) if semantics == "rational" else tuple(g)
                    for g in vform]
            self._v = tuple(dict.fromkeys(g for g in gens if not is_zero(g)))
        else:
            self._v = None
        self._rays = None
        for f in (self._h or ()) + (self._v or ()):
            if len(f) != dim:
                raise ValueError(f"vector {f} has length {len(f)}, expected {dim}")

    # -- forms ----------------------------------------------------------------

    @property
    def has_hform(self) -> bool:
        return self._h is not None

    def hform(self) -> tuple[Functional, ...]:
        if self._h is None:
            rays, lin = dd.generators(self._v, self.dim)
            self._h = canonical_hform(list(rays) + list(lin) + [tuple(-x for x in l) for l in lin])
        return self._h

    def rays_and_lineality(self):
        if self._rays is None:
            if self._h is not None:
                self._rays = dd.generators(self._h, self.dim)
            else:
                self._rays = dd.generators(self.hform(), self.dim)
        return self._rays

    def vform(self) -> tuple[tuple[int, ...], ...]:
        """Generators of the rational cone (lineality given as ``+-`` pairs)."""
        if self._v is not None and self.semantics == "rational":
            return self._v
        rays, lin = self.rays_and_lineality()
        return tuple(rays) + tuple(lin) + tuple(tuple(-x for x in l) for l in lin)

    def generators(self):
        return self._v

    # -- membership -------------------------------------------------------------

    def member(self, x: Sequence, bound: Optional[int] = None) -> bool:
        """Membership of a lattice point.  Monoid cones need ``bound``, the
        largest number of generators a decomposition may use."""
        if len(x) != self.dim:
            raise ValueError(f"point of length {len(x)} for a cone in dimension {self.dim}")
        if self.semantics == "monoid":
            if bound is None:
                raise ValueError("monoid membership needs a bound on the number of generators")
            return monoid_member(self._v, x, bound)
        if self._h is not None:
            return all(apply(f, x) <= 0 for f in self._h)
        return nonneg_combination(self._v, x) is not None

    def __contains__(self, x) -> bool:
        return self.member(x)

    def is_full(self) -> bool:
        return len(self.hform()) == 0

    def to_json(self) -> dict:
        out = {"n": self.dim, "semantics": self.semantics}
        if self.label:
            out["label"] = self.label
        out["hform"] = [list(f) for f in self.hform()]
        if self._v is not None:
            out["vform"] = [list(g) for g in self._v]
        return out

    def __repr__(self):
        return f"Cone(dim={self.dim}, {len(self.hform()) if self._h is not None else '?'} ineqs, label={self.label!r})"


def monoid_member(gens: Sequence[Sequence[int]], x: Sequence, bound: int) -> bool:
    """Is ``x`` a sum of at most ``bound`` generators (with repetition)?"""
    target = tuple(x)
    level = {tuple(0 for _ in target)}
    seen = set(level)
    for _ in range(bound + 1):
        if target in level:
            return True
        nxt = set()
        for v in level:
            for g in gens:
                w = tuple(a + b for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        level = nxt
    return False


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    """``sum coeffs[i] * sources[i] == scale * target`` with ``coeffs >= 0``, ``scale > 0``."""

    target: tuple
    sources: tuple[tuple, ...]
    coeffs: tuple[Fraction, ...]
    scale: Fraction = Fraction(1)

    def verify(self) -> bool:
        if self.scale <= 0 or any(c < 0 for c in self.coeffs):
            return False
        total = [Fraction(0)] * len(self.target)
        for c, src in zip(self.coeffs, self.sources):
            for k, x in enumerate(src):
                total[k] += c * x
        return all(t == self.scale * x for t, x in zip(total, self.target))

    def to_json(self) -> dict:
        used = [(i, c) for i, c in enumerate(self.coeffs) if c != 0]
        return {"target": list(self.target),
                "combination": [{"coeff": fmt_fraction(c), "functional": list(self.sources[i])}
                                for i, c in used],
                "scale": fmt_fraction(self.scale)}


def farkas_certificate(sources: Sequence[Sequence[int]], target: Sequence[int]) -> Optional[Certificate]:
    """Write ``target`` as a nonnegative combination of ``sources`` (exact LP)."""
    y = nonneg_combination(sources, target)
    if y is None:
        return None
    cert = Certificate(tuple(target), tuple(map(tuple, sources)), tuple(y))
    if not cert.verify():  # defensive: never hand out an unchecked certificate
        raise AssertionError("LP returned an invalid combination")
    return cert


@dataclass
class InclusionResult:
    holds: bool
    certificates: list[Certificate] = field(default_factory=list)
    counterexample: Optional[tuple[int, ...]] = None
    violated: Optional[Functional] = None

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        out = {"holds": self.holds}
        if self.holds:
            out["certificates"] = [c.to_json() for c in self.certificates]
        else:
            out["counterexample"] = list(self.counterexample)
            out["violated"] = list(self.violated)
        return out


def includes(c1: Cone, c2: Cone) -> InclusionResult:
    """Decide ``c1 <= c2`` for the rational cones.

    With an H-form for ``c1`` every inequality of ``c2`` is certified as a
    nonnegative combination of those of ``c1``; otherwise every generator of
    ``c1`` is checked against ``c2``.  On failure a generator of ``c1``
    violating an inequality of ``c2`` is returned.
    """
    if c1.dim != c2.dim:
        raise ValueError("cones live in different lattices")
    targets = c2.hform()
    if c1.has_hform:
        certs = []
        sources = c1.hform()
        for f in targets:
            cert = farkas_certificate(sources, f)
            if cert is None:
                return _failure(c1, f)
            certs.append(cert)
        return InclusionResult(True, certs)
    gens = c1.vform()
    for f in targets:
        if any(apply(f, g) > 0 for g in gens):
            return _failure(c1, f)
    return InclusionResult(True, [])


def _failure(c1: Cone, f: Functional) -> InclusionResult:
    for g in c1.vform():
        if apply(f, g) > 0:
            return InclusionResult(False, counterexample=tuple(g), violated=f)
    raise AssertionError("inclusion failed but no generator violates the inequality")


def equal(c1: Cone, c2: Cone) -> bool:
    return bool(includes(c1, c2)) and bool(includes(c2, c1))


def intersect(*cones: Cone) -> Cone:
    dim = cones[0].dim
    rows = [f for c in cones for f in c.hform()]
    return Cone(dim, hform=rows, label=" & ".join(c.label for c in cones if c.label))


def minkowski_sum(*cones: Cone) -> Cone:
    dim = cones[0].dim
    gens = [g for c in cones for g in c.vform()]
    return Cone(dim, vform=gens, label=" + ".join(c.label for c in cones if c.label))


def make_cone(hform: Optional[Iterable[Sequence]] = None, vform: Optional[Iterable[Sequence]] = None,
              semantics: str = "rational", dim: Optional[int] = None, label: str = "") -> Cone:
    """Build a cone, inferring the rank from the vectors.

    >>> make_cone(hform=[(1, -1, 0), (0, 1, -1)]).member((0, 0, 0))
    True
    """
    rows = [tuple(v) for v in (hform or ())] + [tuple(v) for v in (vform or ())]
    if dim is None:
        if not rows:
            raise ValueError("cannot infer the rank of an empty cone description")
        dim = len(rows[0])
    if any(len(v) != dim for v in rows):
        raise ValueError("vectors of different lengths")
    return Cone(dim, hform=hform, vform=vform, semantics=semantics, label=label)


def full_space(dim: int) -> Cone:
    return Cone(dim, hform=[], label="full")


def extreme_rays(c: Cone):
    """(rays, lineality basis) of the rational cone."""
    return c.rays_and_lineality()


def irredundant(c: Cone) -> Cone:
    """Drop inequalities implied by the others."""
    rows = list(c.hform())
    k = 0
    while k < len(rows):
        others = rows[:k] + rows[k + 1:]
        if others and nonneg_combination(others, rows[k]) is not None:
            rows = others
        else:
            k += 1
    return Cone(c.dim, hform=rows, label=c.label)


def is_feasible_lp(ineqs: Sequence[tuple[Sequence, object]], nvars: int) -> bool:
    """``a . x <= b`` feasibility by the simplex method."""
    if not ineqs:
        return True
    return feasible_point(a_ub=[a for a, _ in ineqs], b_ub=[b for _, b in ineqs], nvars=nvars) is not None


def slice_grid(member: Callable[[Sequence], bool], base: Sequence[int], u: Sequence[int],
               v: Sequence[int], lo: int, hi: int) -> list[tuple[int, int, bool]]:
    """Membership of ``base + i u + j v`` for ``lo <= i, j <= hi``."""
    out = []
    for i, j in itertools.product(range(lo, hi + 1), repeat=2):
        x = tuple(b + i * a + j * c for b, a, c in zip(base, u, v))
        out.append((i, j, bool(member(x))))
    return out


def slice(c: Cone, basis: Sequence[Sequence[int]], offset: Sequence[int], box: int,
          bound: Optional[int] = None) -> list[tuple[int, int, bool]]:
    """The grid ``offset + i b1 + j b2`` for ``-box <= i, j <= box``."""
    b1, b2 = basis
    if not len(b1) == len(b2) == len(offset) == c.dim:
        raise ValueError("slice vectors do not match the rank of the cone")
    return slice_grid(lambda x: c.member(x, bound), offset, b1, b2, -box, box)


def box_points(dim: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=dim)
