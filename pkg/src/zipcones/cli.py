"""Command line front end: ``zipcones <subcommand> [group flags] ...``.

Every command prints one JSON document headed by ``{"schema": 1, "group": ...}``
(CSV for ``slice --out csv``).  Exit status is 0 on success, 1 when a
verification fails (the failing instances are listed) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from math import comb
from typing import Callable, Optional, Sequence

from . import __version__
from .cones import Cone, equal, format_functional, includes, intersect, slice_grid
from .oracle import soundness_threshold, zip_asymp_sweep
from .rootdata import GroupData, flip, gl, sp
from .unitary_n1 import (aux_path, cfmin_cone, enumerate_zsmall, group, shape_test,
                         signature_n1_system, verify_intercone, zsmall_separating_system)
from .weightcones import (hasse_cone, intersection_cone, is_levi_dominant, levi_dominant_cone,
                          lmin_cone, named_cone, orbit_cone, orbit_member, unip_member)
from .weyl import (WeylElt, all_elements, is_l_minimal, l_minimal_subsets,
                   length, lower_neighbours, lower_interval, min_coset_reps, min_set,
                   parse_window, weyl_kind, z_element)

SCHEMA = 1
COST_WARNING = 10 ** 7
CONE_NAMES = ("gs", "levidominant", "lmin", "orb", "cfmin", "hasse", "deg",
              "sp6zip", "sp6unip", "sp6orb")
PREDICATES = ("unip", "orbmember")


class UsageError(Exception):
    pass


# -- parsing helpers ---------------------------------------------------------------

def int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def build_group(args) -> GroupData:
    try:
        if args.kind == "sp":
            return sp(args.n, q=args.q)
        r = args.r if args.r is not None else (args.n - args.s if args.s is not None else None)
        if r is None:
            raise UsageError("GL needs --r or --s")
        s = args.n - r
        if args.s is not None and args.s != s:
            raise UsageError("--r and --s must add up to --n")
        sigma = () if args.sigma == "id" else flip(args.n)
        return gl(r, s, q=args.q, sigma=sigma)
    except ValueError as e:
        raise UsageError(str(e))


def element(G: GroupData, text: Optional[str]) -> WeylElt:
    if text is None:
        raise UsageError("this cone needs --w")
    try:
        w = parse_window(text, weyl_kind(G))
    except ValueError as e:
        raise UsageError(str(e))
    if w.n != G.n:
        raise UsageError(f"--w has length {w.n}, the group has rank {G.n}")
    return w


def cone_by_name(G: GroupData, name: str, w_text: Optional[str] = None) -> Cone:
    key = name.lower()
    try:
        if key == "cfmin":
            if G.kind != "gl" or G.s != 1:
                raise UsageError("cfmin is defined for GL_n with signature (n-1, 1)")
            return cfmin_cone(G.n, G.q)
        if key in ("hasse", "deg"):
            return named_cone(G, key, element(G, w_text))
        return named_cone(G, key)
    except ValueError as e:
        raise UsageError(str(e))


def membership(G: GroupData, name: str, w_text: Optional[str]) -> Callable[[Sequence[int]], bool]:
    key = name.lower()
    if key == "unip":
        return lambda x: is_levi_dominant(G, x) and unip_member(G, x)
    if key == "orbmember":
        return lambda x: orbit_member(G, x)
    return cone_by_name(G, name, w_text).member


def cone_json(c: Cone) -> dict:
    out = c.to_json()
    out["inequalities"] = [format_functional(f) for f in c.hform()]
    return out


def header(G: Optional[GroupData], command: str) -> dict:
    out = {"schema": SCHEMA, "command": command}
    if G is not None:
        out["group"] = G.describe()
    return out


_FLAT_LIST = re.compile(r"\[\s*((?:-?\d+|true|false|null|\"[^\"]*\")(?:,\s*(?:-?\d+|true|false|null|\"[^\"]*\"))*)\s*\]")


def emit(doc: dict, out) -> None:
    # innermost lists of scalars go on one line
    text = json.dumps(doc, indent=2)
    text = _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    out.write(text + "\n")


def warn_cost(points: int) -> None:
    if points > COST_WARNING:
        print(f"note: enumerating {points} points", file=sys.stderr)


# -- subcommands ------------------------------------------------------------------

def cmd_cone(args, out) -> int:
    G = build_group(args)
    doc = header(G, "cone")
    doc["cone"] = cone_json(cone_by_name(G, args.name, args.w))
    emit(doc, out)
    return 0


def cmd_member(args, out) -> int:
    G = build_group(args)
    lam = args.lam
    if len(lam) != G.n:
        raise UsageError(f"--lambda has length {len(lam)}, the group has rank {G.n}")
    doc = header(G, "member")
    doc.update({"cone": args.name, "lambda": lam, "member": bool(membership(G, args.name, args.w)(lam))})
    emit(doc, out)
    return 0


def cmd_include(args, out) -> int:
    G = build_group(args)
    left = cone_by_name(G, args.left, args.left_w)
    right = cone_by_name(G, args.right, args.right_w)
    doc = header(G, "include")
    doc.update({"left": args.left, "right": args.right, "result": includes(left, right).to_json()})
    emit(doc, out)
    return 0


def cmd_strata(args, out) -> int:
    G = build_group(args)
    doc = header(G, "strata")
    doc["min_sets"] = [{"w": w.window(), "length": length(w),
                        "min": [list(a) for a in sorted(min_set(G, w))]}
                       for w in min_coset_reps(G)]
    if G.kind == "gl" and G.s == 1 and G.split:
        doc["z"] = z_element(G).window()
        rows = []
        for zs in enumerate_zsmall(G.n):
            sh = shape_test(zs.element)
            rows.append({"composition": list(zs.composition), "w": zs.element.window(),
                         "length": length(zs.element),
                         "E": [[list(a) for a in block] for block in zs.e_partition()],
                         "gamma_cycle": list(zs.gamma_cycle()),
                         "sqrt_shape": sh.has_sqrt_shape,
                         "independent_coroots": sh.admits_partial_hasse_system})
        doc["z_small"] = rows
    emit(doc, out)
    return 0


def cmd_path(args, out) -> int:
    if args.n < 3:
        raise UsageError("the path needs n >= 3")
    G = group(args.n, args.q)
    doc = header(G, "path")
    doc["steps"] = [{"d": s.d, "i": s.i, "upper": s.upper.window(), "alpha": list(s.alpha),
                     "lower": s.lower.window(), "chi": list(s.chi), "ha": list(s.weight),
                     "in_lmin": lmin_cone(G).member(s.weight)}
                    for s in aux_path(args.n, args.q, include_last=args.include_last)]
    emit(doc, out)
    return 0


def _n_range(args) -> range:
    if args.n is not None:
        return range(args.n, args.n + 1)
    return range(2, args.nmax + 1)


def verify_intercone_records(ns, qs, literal: bool):
    records, failures = [], []
    for n in ns:
        for q in qs:
            for zs in enumerate_zsmall(n):
                if length(zs.element) < 2:
                    continue
                for a in lower_neighbours(zs.element):
                    chk = verify_intercone(zs, a, q)
                    rec = chk.to_json()
                    rec.pop("inclusion", None)
                    rec["inclusion_holds"] = chk.inclusion.holds
                    ok = chk.ok and (chk.literal or not literal)
                    rec["verified"] = ok
                    records.append(rec)
                    if not ok:
                        failures.append(rec)
    return records, failures


def verify_hasse_reg(ns, qs):
    records, failures = [], []
    for n in ns:
        for q in qs:
            G = group(n, q)
            system = zsmall_separating_system(G)
            memo: dict = {}
            for zs in enumerate_zsmall(n):
                c = intersection_cone(system, zs.element, memo)
                h = hasse_cone(G, zs.element)
                fwd, back = includes(c, h), includes(h, c)
                rec = {"n": n, "q": q, "w": list(zs.composition),
                       "intersection_in_hasse": fwd.holds, "hasse_in_intersection": back.holds,
                       "verified": fwd.holds and back.holds}
                records.append(rec)
                if not rec["verified"]:
                    failures.append(rec)
    return records, failures


def verify_lmin_eq(ns, qs):
    records, failures = [], []
    for n in ns:
        if n < 2:
            continue
        for q in qs:
            G = group(n, q)
            dom = levi_dominant_cone(G)
            lm = intersect(lmin_cone(G), dom)
            rec = {"n": n, "q": q,
                   "lmin_equals_written_system": equal(lm, signature_n1_system(n, q)),
                   "k0_row_redundant": equal(lm, signature_n1_system(n, q, with_k0=False)),
                   "cfmin_equals_lmin": equal(intersect(cfmin_cone(n, q), dom), lm),
                   "orb_equals_lmin": equal(intersect(orbit_cone(G), dom), lm)}
            rec["verified"] = all(v for k, v in rec.items() if k not in ("n", "q"))
            records.append(rec)
            if not rec["verified"]:
                failures.append(rec)
    return records, failures


def verify_minset(ns, qs):
    records, failures = [], []
    for n in ns:
        for r in range(1, n):
            G = gl(r, n - r, q=qs[0])
            reps = min_coset_reps(G)
            images = [min_set(G, w) for w in reps]
            rec = {"n": n, "r": r, "coset_reps": len(reps), "binomial": comb(n, r),
                   "injective": len(set(images)) == len(images),
                   "images_l_minimal": all(is_l_minimal(G, S) for S in images),
                   "onto_l_minimal": set(images) == set(l_minimal_subsets(G))}
            rec["verified"] = (rec["coset_reps"] == rec["binomial"] and rec["injective"]
                               and rec["images_l_minimal"] and rec["onto_l_minimal"])
            records.append(rec)
            if not rec["verified"]:
                failures.append(rec)
    return records, failures


def verify_shapes(ns, qs):
    records, failures = [], []
    for n in ns:
        G = group(n, qs[0])
        below = lower_interval(z_element(G))
        listed = {zs.element for zs in enumerate_zsmall(n)}
        brute = {w for w in all_elements("A", n) if w in below}
        bad = [zs for zs in enumerate_zsmall(n)
               if shape_test(zs.element).has_sqrt_shape
               or not shape_test(zs.element).admits_partial_hasse_system]
        rec = {"n": n, "z_small": len(brute), "expected": 2 ** (n - 1),
               "census_matches": brute == listed and len(brute) == 2 ** (n - 1),
               "shape_failures": [list(zs.composition) for zs in bad]}
        rec["verified"] = rec["census_matches"] and not bad
        records.append(rec)
        if not rec["verified"]:
            failures.append(rec)
    return records, failures


VERIFIERS = {
    "intercone": None,
    "hasse-reg": verify_hasse_reg,
    "lmin-eq": verify_lmin_eq,
    "minset": verify_minset,
    "shapes": verify_shapes,
}


def _suite_groups(suite: str, ns, qs) -> list[dict]:
    if suite == "minset":
        return [gl(r, n - r, q=qs[0]).describe() for n in ns for r in range(1, n)]
    if suite == "shapes":
        return [group(n, qs[0]).describe() for n in ns]
    return [group(n, q).describe() for n in ns if n >= 2 for q in qs]


def cmd_verify(args, out) -> int:
    ns = _n_range(args)
    if not args.qs:
        raise UsageError("--qs needs at least one value")
    if args.suite == "intercone":
        records, failures = verify_intercone_records(ns, args.qs, args.literal)
    else:
        records, failures = VERIFIERS[args.suite](ns, args.qs)
    doc = header(None, "verify")
    doc["groups"] = _suite_groups(args.suite, ns, args.qs)
    doc.update({"suite": args.suite, "n": list(ns), "qs": args.qs,
                "checked": len(records), "failed": len(failures), "passed": not failures})
    doc["records" if not failures else "failures"] = records if not failures else failures
    emit(doc, out)
    return 0 if not failures else 1


def cmd_sweep(args, out) -> int:
    G = build_group(args)
    threshold = soundness_threshold(G, args.box)
    print(f"soundness threshold p* = {threshold}", file=sys.stderr)
    if args.max_prime <= threshold:
        raise UsageError(f"--max-prime {args.max_prime} does not exceed p* = {threshold}")
    warn_cost((2 * args.box + 1) ** G.n)
    rep = zip_asymp_sweep(G, args.box, args.max_prime)
    doc = header(G, "sweep")
    doc["result"] = rep.to_json()
    emit(doc, out)
    return 0 if rep.equal else 1


def cmd_slice(args, out) -> int:
    G = build_group(args)
    for v in (args.u, args.v, args.offset):
        if len(v) != G.n:
            raise UsageError(f"slice vectors must have length {G.n}")
    warn_cost((2 * args.box + 1) ** 2)
    member = membership(G, args.name, args.w)
    grid = slice_grid(member, args.offset, args.u, args.v, -args.box, args.box)
    if args.out == "csv":
        out.write("i,j,flag\n")
        for i, j, f in grid:
            out.write(f"{i},{j},{int(f)}\n")
        return 0
    doc = header(G, "slice")
    doc.update({"cone": args.name, "u": args.u, "v": args.v, "offset": args.offset,
                "box": args.box, "grid": [[i, j, f] for i, j, f in grid],
                "members": sum(f for _, _, f in grid)})
    emit(doc, out)
    return 0


# -- argument parser ----------------------------------------------------------------

def _group_flags(p: argparse.ArgumentParser, need_n: bool = True) -> None:
    p.add_argument("--kind", choices=("gl", "sp"), default="gl")
    p.add_argument("--n", type=int, required=need_n)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--sigma", choices=("id", "flip"), default="id")


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="zipcones", description="Weight cones of G-zips, computed exactly.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cone", help="print a cone in H-form")
    _group_flags(p)
    p.add_argument("--name", required=True, choices=CONE_NAMES, type=str.lower)
    p.add_argument("--w", help="Weyl group element in window notation, for hasse/deg")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("member", help="test a weight")
    _group_flags(p)
    p.add_argument("--name", required=True, choices=CONE_NAMES + PREDICATES, type=str.lower)
    p.add_argument("--w")
    p.add_argument("--lambda", dest="lam", required=True, type=int_list)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("include", help="decide an inclusion, with certificates")
    _group_flags(p)
    p.add_argument("--left", required=True, choices=CONE_NAMES, type=str.lower)
    p.add_argument("--right", required=True, choices=CONE_NAMES, type=str.lower)
    p.add_argument("--left-w")
    p.add_argument("--right-w")
    p.set_defaults(func=cmd_include)

    p = sub.add_parser("strata", help="minimal coset representatives, Min sets, z-small elements")
    _group_flags(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("path", help="the chain from w_0 down to z with Hasse invariant weights")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--include-last", action="store_true")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=tuple(VERIFIERS))
    p.add_argument("--n", type=int, help="a single n (default: all n up to --nmax)")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--qs", type=int_list, default=[2, 3])
    p.add_argument("--literal", action="store_true",
                   help="intercone: also require the multiplier to be 1 + delta q")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="intersect orbit cones over all primes up to a bound")
    _group_flags(p)
    p.add_argument("--box", type=int, default=5)
    p.add_argument("--max-prime", type=int, default=211)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("slice", help="membership grid on a plane")
    _group_flags(p)
    p.add_argument("--name", required=True, choices=CONE_NAMES + PREDICATES, type=str.lower)
    p.add_argument("--w")
    p.add_argument("--u", type=int_list, required=True)
    p.add_argument("--v", type=int_list, required=True)
    p.add_argument("--offset", type=int_list, required=True)
    p.add_argument("--box", type=int, default=5)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_slice)
    return ap


def dispatch(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"zipcones: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
