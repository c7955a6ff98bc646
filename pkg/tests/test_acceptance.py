"""One test per acceptance criterion; each prints a PASS/FAIL line via ``verdict``.

All checks are exact: integer and rational arithmetic only, zero tolerance.
"""

import itertools
import random
from fractions import Fraction
from math import comb

from zipcones.cones import (Cone, System, box_points, equal, farkas_certificate, feasible_point,
                            fm_feasible, includes, intersect, make_cone)
from zipcones.oracle import bruhat_oracle, cone_box_compare, zip_asymp_sweep
from zipcones.rootdata import gl, sp
from zipcones.unitary_n1 import (aux_path, cfmin_cone, enumerate_zsmall, group, hasse_cone_closed_form,
                                 lambda_ab_in_lmin, shape_test, signature_n1_system, verify_intercone,
                                 zsmall_separating_system)
from zipcones.weightcones import (deg_leading, deg_q, gs_cone, hasse_cone, intersection_cone,
                                  levi_dominant_cone, lmin_cone, orbit_cone, sp6_reference, unip_member,
                                  w0I_w0)
from zipcones.weyl import (all_elements, bruhat_cover, bruhat_leq, is_l_minimal, l_minimal_subsets,
                           length, lower_interval, lower_neighbours, lower_neighbours_by_pattern,
                           min_coset_reps, min_set, w0, z_element)
from zipcones.weyl import WeylElt


def test_criterion_01_z_is_lambda(verdict):
    bad = []
    for n in range(3, 7):
        lam = WeylElt((n,) + tuple(range(1, n)))
        if z_element(gl(n - 1, 1)) != lam:
            bad.append(n)
    verdict(1, "z_element equals Lambda_{n-1}, n = 3..6", not bad, f"mismatch at n={bad}" if bad else "")
    assert not bad


def test_criterion_02_lower_neighbour_criterion(verdict):
    checked, bad = 0, []
    for n in range(1, 6):
        for w in all_elements("A", n):
            checked += 1
            if set(lower_neighbours_by_pattern(w)) != set(lower_neighbours(w)):
                bad.append(w.window())
    ok = not bad and checked >= 153
    verdict(2, "pattern criterion equals length drop on S_n, n <= 5", ok, f"{checked} elements")
    assert ok


def test_criterion_03_bruhat_vs_subword(verdict):
    els = list(all_elements("A", 4))
    bad = [(u.window(), w.window()) for u in els for w in els if bruhat_leq(u, w) != bruhat_oracle(u, w)]
    related = sum(bruhat_leq(u, w) for u in els for w in els)
    verdict(3, "covering-graph order equals subword oracle on S_4", not bad,
            f"{len(els) ** 2} pairs, {related} related")
    assert not bad


def test_criterion_04_zsmall_census(verdict):
    problems = []
    for n in range(1, 6):
        z = z_element(gl(n - 1, 1)) if n >= 2 else WeylElt((1,))
        brute = {w for w in all_elements("A", n) if bruhat_leq(w, z)}
        listed = [zs.element for zs in enumerate_zsmall(n)]
        if len(brute) != 2 ** (n - 1) or set(listed) != brute or len(listed) != len(set(listed)):
            problems.append(f"census n={n}")
        if n >= 2 and brute != set(lower_interval(z)):
            problems.append(f"interval n={n}")
        for w in listed:
            r = shape_test(w)
            if r.has_sqrt_shape or not r.admits_partial_hasse_system:
                problems.append(f"shape {w.window()}")
    verdict(4, "z-small census 2^(n-1), n <= 5, with shape test", not problems, "; ".join(problems))
    assert not problems


def test_criterion_05_min_bijection(verdict):
    problems = []
    for n in range(2, 7):
        for r in range(1, n):
            G = gl(r, n - r)
            reps = min_coset_reps(G)
            images = [min_set(G, w) for w in reps]
            lmin = l_minimal_subsets(G)
            if not (len(reps) == comb(n, r) == len(lmin)):
                problems.append(f"counts ({r},{n - r})")
            if len(set(images)) != len(images):
                problems.append(f"not injective ({r},{n - r})")
            if not all(is_l_minimal(G, S) for S in images):
                problems.append(f"image not L-minimal ({r},{n - r})")
    verdict(5, "Min bijection for GL_n, all (r,s), n <= 6", not problems, "; ".join(problems))
    assert not problems


def gl22_closed_form(q):
    return Cone(4, hform=[(2 * q, 2, -(q + 1), -(q + 1)), (q + 1, 2, -2, -(q + 1)),
                          (q + 1, q + 1, -2, -2 * q)])


def test_criterion_06_gl22(verdict):
    problems = []
    for q in (2, 3, 5):
        G = gl(2, 2, q=q)
        dom = levi_dominant_cone(G)
        mine = intersect(orbit_cone(G), dom)
        closed = intersect(gl22_closed_form(q), dom)
        fwd, back = includes(mine, closed), includes(closed, mine)
        if not (fwd and back and all(c.verify() for c in fwd.certificates + back.certificates)):
            problems.append(f"Farkas q={q}")
        if not cone_box_compare(mine, closed, 6).equal:
            problems.append(f"box q={q}")
        if not cone_box_compare(intersect(lmin_cone(G), dom), closed, 6).equal:
            problems.append(f"lmin box q={q}")
    verdict(6, "GL_4 (2,2) orbit cone equals the three closed-form inequalities", not problems,
            "; ".join(problems))
    assert not problems


def n1_rows_by_hand(n, q, ks):
    # q * [sum_{i<=k} (a_i - a_n) + 1/q sum_{k<i<n} (a_i - a_n)]
    rows = []
    for k in ks:
        row = [Fraction(0)] * n
        for i in range(1, n):
            c = Fraction(1) if i <= k else Fraction(1, q)
            row[i - 1] += q * c
            row[n - 1] -= q * c
        rows.append(tuple(int(x) for x in row))
    return rows


def test_criterion_07_signature_n1(verdict):
    problems = []
    for n in range(3, 6):
        for q in (2, 3):
            G = group(n, q)
            dom = levi_dominant_cone(G)
            mine = intersect(lmin_cone(G), dom)
            written = Cone(n, hform=n1_rows_by_hand(n, q, range(0, n)) + list(dom.hform()))
            if not cone_box_compare(mine, written, 6).equal:
                problems.append(f"eq-n1 box n={n} q={q}")
            if not (equal(mine, written) and equal(written, signature_n1_system(n, q))):
                problems.append(f"eq-n1 Farkas n={n} q={q}")
            by_hand = set(Cone(n, hform=n1_rows_by_hand(n, q, range(1, n))).hform())
            if set(cfmin_cone(n, q).hform()) != by_hand:
                problems.append(f"cfmin functionals n={n} q={q}")
    verdict(7, "(n-1,1) L-minimal cone equals the written system; cfmin rows match", not problems,
            "; ".join(problems))
    assert not problems


def sp6_counts():
    G = sp(3, q=2)
    zipc = sp6_reference(G, "zip")
    orb = sp6_reference(G, "orb")
    dom = levi_dominant_cone(G)
    counts = {"zip": 0, "unip": 0, "orb": 0}
    for x in box_points(3, 6):
        if not dom.member(x):
            continue
        counts["zip"] += zipc.member(x)
        counts["unip"] += unip_member(G, x)
        counts["orb"] += orb.member(x)
    return counts


def test_criterion_08_sp6_figure(verdict):
    G = sp(3, q=2)
    first, second = sp6_counts(), sp6_counts()
    zipc, orb = sp6_reference(G, "zip"), sp6_reference(G, "orb")
    w1, w2 = (1, -1, -1), (1, 1, -5)
    ok = (first == second and first["zip"] < first["unip"] < first["orb"]
          and unip_member(G, w1) and not zipc.member(w1)
          and orb.member(w2) and not unip_member(G, w2)
          and cone_box_compare(gs_cone(G), zipc, 6).first_in_second)
    verdict(8, "Sp(6) zip < unip < orb with the two witnesses; GS inside zip", ok,
            f"counts {first}")
    assert ok


def test_criterion_09_sp6_unip_closed_form(verdict):
    problems = []
    for q in (2, 3):
        G = sp(3, q=q)
        ref = sp6_reference(G, "unip")
        dom = levi_dominant_cone(G)
        for x in box_points(3, 6):
            if dom.member(x) and unip_member(G, x) != ref.member(x):
                problems.append(f"q={q} {x}")
    verdict(9, "Sp(6) unipotent cone: LP definition equals the closed form, box 6", not problems,
            "; ".join(problems[:5]))
    assert not problems


def test_criterion_10_hasse_cone_of_z(verdict):
    problems = []
    for n in range(3, 6):
        for q in (2, 3):
            G = group(n, q)
            expected = {tuple(1 if t == i else (-1 if t == n - 1 else 0) for t in range(n)) for i in range(n - 1)}
            via_h = set(hasse_cone(G, z_element(G)).hform())
            closed = set(hasse_cone_closed_form([zs for zs in enumerate_zsmall(n) if zs.k == 1][0], q).hform())
            if via_h != expected or closed != expected:
                problems.append(f"n={n} q={q}")
    verdict(10, "Hasse cone of z is {k_i - k_n <= 0} by both routes", not problems, "; ".join(problems))
    assert not problems


def test_criterion_11_intercone(verdict):
    literal_fail, other_fail, total, proportional = [], [], 0, 0
    for n in range(2, 6):
        for q in (2, 3, 5):
            for zs in enumerate_zsmall(n):
                if length(zs.element) < 2:
                    continue
                for a in lower_neighbours(zs.element):
                    total += 1
                    chk = verify_intercone(zs, a, q)
                    proportional += chk.ok
                    if not chk.ok:
                        other_fail.append(chk.to_json())
                    if not chk.literal:
                        literal_fail.append(chk)
    ex = literal_fail[0] if literal_fail else None
    detail = (f"{total} instances; {total - len(literal_fail)} satisfy (E1)+delta(E2) = (1+delta q)(target); "
              f"{proportional} close up to a positive multiple with the inclusion certified")
    if ex is not None:
        w = ex.witness
        detail += (f"; first failure w={list(w.w.composition)} alpha={w.alpha} q={ex.q} case {w.case}: "
                   f"multiplier {ex.multiplier} vs 1+delta q = {ex.expected_multiplier}")
    ok = not literal_fail and not other_fail
    verdict(11, "inter-cone certificates with multiplier 1 + delta q", ok, detail)
    assert ok


def test_criterion_12_hasse_regularity(verdict):
    problems = []
    for n in range(2, 6):
        for q in (2, 3):
            G = group(n, q)
            system = zsmall_separating_system(G)
            memo = {}
            for zs in enumerate_zsmall(n):
                c = intersection_cone(system, zs.element, memo)
                h = hasse_cone(G, zs.element)
                fwd, back = includes(c, h), includes(h, c)
                certs = fwd.certificates + back.certificates
                if not (fwd and back and all(x.verify() for x in certs)):
                    problems.append(f"n={n} q={q} w={list(zs.composition)}")
    verdict(12, "intersection cone equals Hasse cone on z-small strata", not problems, "; ".join(problems))
    assert not problems


def test_criterion_13_auxiliary_path(verdict):
    problems = []
    for n in range(3, 7):
        for q in (2, 3, 5):
            G = group(n, q)
            steps = aux_path(n, q)
            if steps[0].upper != w0(G) or steps[-1].lower != z_element(G):
                problems.append(f"ends n={n}")
            if any(a.lower != b.upper for a, b in zip(steps, steps[1:])):
                problems.append(f"chain n={n}")
            if not all(bruhat_cover(s.lower, s.upper) for s in steps):
                problems.append(f"cover n={n}")
            lm = lmin_cone(G)
            if not all(lm.member(s.weight) for s in steps):
                problems.append(f"ha not in L-Min n={n} q={q}")
    mismatches = 0
    for n in range(2, 6):
        for r in range(1, n):
            for q in (2, 3):
                for a, b in itertools.product(range(1, n + 1), repeat=2):
                    if lambda_ab_in_lmin(n, r, a, b, q) != (b <= r):
                        mismatches += 1
    if mismatches:
        problems.append(f"{mismatches} lambda_ab mismatches")
    verdict(13, "auxiliary path covers w_0 -> z, ha in L-Min, lambda_ab iff b <= r", not problems,
            "; ".join(problems) or "converse checked exhaustively for n <= 5 as evidence only")
    assert not problems


def _sign(x):
    return (x > 0) - (x < 0)


def test_criterion_14_degree_asymptotics(verdict):
    G = gl(2, 1).with_q(10 ** 4, formal=True)
    u = w0I_w0(G)
    compared = mismatched = compared_inv = mismatched_inv = 0
    for w in all_elements("A", 3):
        if length(w) < 1:
            continue
        E = lower_neighbours(w)
        for lam in box_points(3, 3):
            d = _sign(deg_q(G, w, lam))
            literal = sum(G.pair(G.sigma_act(u.act(lam)), a) for a in E)
            if literal != 0:
                compared += 1
                mismatched += d != _sign(literal)
            lead = deg_leading(G, w, lam)
            if lead != 0:
                compared_inv += 1
                mismatched_inv += d != _sign(lead)
    ok = compared > 0 and mismatched == 0
    verdict(14, "sign of deg_q matches sum <sigma(w_{0,I} w_0 lam), alpha^vee> at q = 10^4", ok,
            f"{mismatched} of {compared} signs differ; with (w_{{0,I}} w_0)^(-1) instead: "
            f"{mismatched_inv} of {compared_inv} differ")
    assert ok


def test_criterion_15_zip_asymptotics(verdict):
    reports = []
    for G in (gl(2, 1), gl(3, 1), sp(2), sp(3)):
        rep = zip_asymp_sweep(G, 5, 211)
        reports.append((G.kind, G.n, rep.threshold, rep.equal, rep.survivors, rep.gs_points))
    ok = all(r[3] for r in reports)
    verdict(15, "intersection of orbit cones over p <= 211 equals C_GS on box 5", ok,
            ", ".join(f"{k}{n}: p*={t} {s}/{g}" for k, n, t, _, s, g in reports))
    assert ok


def test_criterion_16_kernel(verdict):
    rnd = random.Random(2024)
    problems = []
    # double description round trip
    for _ in range(30):
        d = rnd.randint(2, 6)
        gens = [tuple(rnd.randint(-3, 3) for _ in range(d)) for _ in range(rnd.randint(1, d + 3))]
        gens = [g for g in gens if any(g)] or [tuple(int(i == 0) for i in range(d))]
        c = make_cone(vform=gens)
        h = make_cone(hform=c.hform(), dim=d)
        back = make_cone(vform=h.vform(), dim=d)
        if not (includes(c, back) and includes(back, c) and back.hform() == c.hform()):
            problems.append(f"round trip {gens}")
    # Farkas certificates re-verified by hand
    for _ in range(30):
        d = rnd.randint(2, 6)
        src = [tuple(rnd.randint(-5, 5) for _ in range(d)) for _ in range(rnd.randint(1, 5))]
        coeffs = [Fraction(rnd.randint(0, 4), rnd.randint(1, 3)) for _ in src]
        target = tuple(sum(c * s[k] for c, s in zip(coeffs, src)) for k in range(d))
        cert = farkas_certificate(src, target)
        if cert is None:
            problems.append("missing certificate")
            continue
        total = [sum(c * s[k] for c, s in zip(cert.coeffs, src)) for k in range(d)]
        if any(c < 0 for c in cert.coeffs) or tuple(total) != tuple(cert.scale * t for t in target):
            problems.append("bad certificate")
    # Fourier-Motzkin against the simplex on 100 random systems
    agree = 0
    for _ in range(100):
        nv = rnd.randint(1, 6)
        rows = [(tuple(rnd.randint(-10, 10) for _ in range(nv)), rnd.randint(-10, 10))
                for _ in range(rnd.randint(1, 10))]
        fm = fm_feasible(System(nv, ineqs=rows))
        lp = feasible_point(a_ub=[a for a, _ in rows], b_ub=[b for _, b in rows], nvars=nv) is not None
        agree += fm == lp
    if agree != 100:
        problems.append(f"FM/LP agree on {agree}/100")
    verdict(16, "kernel: DD round trip, Farkas re-verification, FM equals LP", not problems,
            "; ".join(problems[:5]))
    assert not problems
