import itertools

import pytest

from zipcones.cones import make_cone
from zipcones.oracle import (bruhat_oracle, cone_box_compare, decreasing_sequences, gl_gamma_sequence,
                             gl_lmin_member, gl_subset_of_sequence, orbit_member_exhaustive,
                             soundness_threshold, unip_fm_crosscheck, unip_member_fm, zip_asymp_sweep)
from zipcones.rootdata import gl, sp
from zipcones.weightcones import gamma, gs_cone, lmin_cone, sp6_reference
from zipcones.weyl import WeylElt, all_elements, bruhat_leq, identity, is_l_minimal, orbits


def test_bruhat_oracle_examples():
    for w in all_elements("A", 4):
        assert bruhat_oracle(identity(4), w)
        assert bruhat_oracle(w, w)
    with pytest.raises(ValueError):
        bruhat_oracle(identity(7), identity(7))
    with pytest.raises(ValueError):
        bruhat_oracle(WeylElt((1, 2), "C"), WeylElt((1, 2), "C"))


def test_bruhat_oracle_agrees_on_s4():
    els = list(all_elements("A", 4))
    assert all(bruhat_oracle(u, w) == bruhat_leq(u, w) for u in els for w in els)


def test_box_compare_basics():
    c = make_cone(hform=[(1, -1)])
    rep = cone_box_compare(c, c, 3)
    assert rep.equal and not rep.only_first and not rep.only_second
    d = make_cone(hform=[(1, -1), (1, 0)])
    rep = cone_box_compare(d, c, 2, names=("d", "c"))
    assert rep.first_in_second and not rep.second_in_first
    t = rep.transposed()
    assert t.names == ("c", "d") and t.second_in_first and not t.first_in_second
    assert t.only_first == rep.only_second
    for x in rep.only_second:
        assert c.member(x) and not d.member(x)
    js = rep.to_json()
    assert js["d_in_c"] and not js["c_in_d"] and js["only_c_count"] == len(rep.only_second)
    assert "d < c" in rep.summary()
    with pytest.raises(ValueError):
        cone_box_compare(lambda x: True, lambda x: True, 1)


def test_sp6_box_comparison():
    G = sp(3, q=2)
    zipc, unip, orb = (sp6_reference(G, k) for k in ("zip", "unip", "orb"))
    r1 = cone_box_compare(zipc, unip, 6, names=("zip", "unip"))
    r2 = cone_box_compare(unip, orb, 6, names=("unip", "orb"))
    assert r1.first_in_second and not r1.second_in_first
    assert r2.first_in_second and not r2.second_in_first
    assert (1, -1, -1) in r1.only_second and (1, 1, -5) in r2.only_second
    assert cone_box_compare(gs_cone(G), zipc, 6).first_in_second


def test_unip_crosscheck():
    G = gl(2, 1, q=2)
    assert unip_member_fm(G, (0, 0, 0))
    rep = unip_fm_crosscheck(G, 3)
    assert rep.equal and rep.points == 7 ** 3
    with pytest.raises(ValueError):
        unip_fm_crosscheck(gl(3, 2), 1)


def test_sp6_unip_both_routes_match_closed_form():
    G = sp(3, q=2)
    rep = unip_fm_crosscheck(G, 6, dominant_only=True)
    assert rep.equal
    ref = sp6_reference(G, "unip")
    assert cone_box_compare(lambda x: unip_member_fm(G, x), ref, 6, dim=3,
                            within=lambda x: x[0] >= x[1] >= x[2]).equal


def test_orbit_exhaustive_matches_subset_gammas():
    G = gl(2, 2, q=3)
    (O,) = orbits(G)
    subsets = [S for k in range(len(O) + 1) for S in itertools.combinations(O, k)]
    for lam in [(1, 0, 0, -1), (0, -1, 1, 1), (-2, -3, 0, 1)]:
        assert orbit_member_exhaustive(G, lam) == all(gamma(G, O, S, lam) <= 0 for S in subsets)


def test_gl_sequences():
    assert sorted(decreasing_sequences(2, 2)) == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    G = gl(2, 2, q=3)
    (O,) = orbits(G)
    for x in decreasing_sequences(2, 2):
        S = gl_subset_of_sequence(G, x)
        assert is_l_minimal(G, S)
        for lam in [(1, 0, 0, -1), (3, -2, 5, 1), (0, 0, 0, 0)]:
            assert gl_gamma_sequence(G, x, lam) == gamma(G, O, S, lam)
    cone = lmin_cone(G)
    for lam in [(1, 0, 0, -1), (-1, -1, 0, 0), (0, -2, 1, 1)]:
        assert gl_lmin_member(G, lam) == cone.member(lam)


def test_sweep():
    G = gl(2, 1)
    assert soundness_threshold(G, 2) == 8
    with pytest.raises(ValueError):
        zip_asymp_sweep(G, 2, 7)
    rep = zip_asymp_sweep(G, 2, 11)
    assert rep.primes == [2, 3, 5, 7, 11] and rep.equal
    assert rep.to_json()["max_prime"] == 11
