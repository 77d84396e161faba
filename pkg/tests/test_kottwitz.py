import itertools
from fractions import Fraction as F

import pytest

from newtonkit.kottwitz import (
    enumerate_bgmu,
    galois_average,
    is_in_bgmu,
    kottwitz_set_from_json,
    kottwitz_set_to_json,
    maximal_elements,
    minuscule_coweights,
    newton_leq,
)
from newtonkit.rootdata import (
    build_datum,
    fundamental_coweights,
    is_dominant,
    product_datum,
    sigma_apply,
    special_roots,
)


def _coweight(datum, node):
    return datum.cochar(fundamental_coweights(datum)[node - 1])


def test_galois_average_identity_sigma():
    c2 = build_datum("C", 2)
    mu = _coweight(c2, 2)
    assert galois_average(mu).coords == mu.coords


def test_galois_average_a3_flip():
    a3 = build_datum("A", 3, "flip")
    mu = _coweight(a3, 1)
    assert galois_average(mu).coords == (F(1, 2), 0, 0, F(-1, 2))


def test_galois_average_idempotent_on_invariants():
    a2 = build_datum("A", 2, "flip")
    mu = _coweight(a2, 1)
    avg = galois_average(mu)
    assert galois_average(avg).coords == avg.coords
    assert sigma_apply(avg).coords == avg.coords


def test_is_in_bgmu_c2_certificates():
    c2 = build_datum("C", 2)
    mubar = c2.cochar([F(1, 2), F(1, 2)])
    ok, cert = is_in_bgmu(c2.cochar([F(1, 2), 0]), mubar)
    assert ok
    c, J = cert
    assert c == (0, F(1, 2))
    assert J == {2}
    ok, reason = is_in_bgmu(c2.cochar([F(1, 4), F(1, 4)]), mubar)
    assert not ok and "non-integral" in reason
    ok, cert = is_in_bgmu(mubar, mubar)
    assert ok and cert[0] == (0, 0)


def test_is_in_bgmu_rejects_non_dominant():
    c2 = build_datum("C", 2)
    mubar = c2.cochar([F(1, 2), F(1, 2)])
    ok, reason = is_in_bgmu(c2.cochar([0, F(1, 2)]), mubar)
    assert not ok and "dominant" in reason


def test_enumerate_c2_three_strata():
    c2 = build_datum("C", 2)
    ks = enumerate_bgmu(_coweight(c2, 2))
    assert ks.points() == [(0, 0), (F(1, 2), 0), (F(1, 2), F(1, 2))]


def test_enumerate_mu_zero():
    for t, n in [("A", 2), ("C", 2), ("G2", 2)]:
        d = build_datum(t, n)
        mu = d.cochar([0] * d.ambient_dim)
        ks = enumerate_bgmu(mu)
        assert ks.points() == [(0,) * d.ambient_dim]


def test_enumerate_a2_chain():
    a2 = build_datum("A", 2)
    ks = enumerate_bgmu(_coweight(a2, 1))
    assert ks.points() == [
        (0, 0, 0),
        (F(1, 6), F(1, 6), F(-1, 3)),
        (F(2, 3), F(-1, 3), F(-1, 3)),
    ]
    # totally ordered chain
    pts = [a2.cochar(p) for p in ks.points()]
    for a, b in itertools.combinations(pts, 2):
        assert newton_leq(a, b) or newton_leq(b, a)


def test_enumerate_requires_dominant_mu():
    c2 = build_datum("C", 2)
    with pytest.raises(ValueError):
        enumerate_bgmu(c2.cochar([0, F(1, 2)]))


def test_enumerate_rejects_nontrivial_sigma():
    a3 = build_datum("A", 3, "flip")
    with pytest.raises(ValueError):
        enumerate_bgmu(_coweight(a3, 1))


def test_newton_leq_examples():
    c2 = build_datum("C", 2)
    zero = c2.cochar([0, 0])
    mid = c2.cochar([F(1, 2), 0])
    top = c2.cochar([F(1, 2), F(1, 2)])
    assert newton_leq(zero, zero)
    assert newton_leq(zero, mid) and newton_leq(mid, top)
    assert not newton_leq(top, mid)
    a2 = build_datum("A", 2)
    w1, w2 = _coweight(a2, 1), _coweight(a2, 2)
    assert not newton_leq(w1, w2) and not newton_leq(w2, w1)


def test_newton_leq_is_partial_order_on_enumerated_sets():
    for t, n, k in [("C", 2, 2), ("A", 3, 2), ("B", 3, 1)]:
        d = build_datum(t, n)
        ks = enumerate_bgmu(_coweight(d, k))
        pts = [d.cochar(p) for p in ks.points()]
        for a in pts:
            assert newton_leq(a, a)
        for a, b in itertools.permutations(pts, 2):
            if newton_leq(a, b) and newton_leq(b, a):
                assert a.coords == b.coords
        for a, b, c in itertools.product(pts, repeat=3):
            if newton_leq(a, b) and newton_leq(b, c):
                assert newton_leq(a, c)


def test_enumerated_elements_are_certified_and_bounded_by_top():
    for t, n, k in [("C", 3, 3), ("D", 4, 4), ("E6", 6, 1)]:
        d = build_datum(t, n)
        mu = _coweight(d, k)
        ks = enumerate_bgmu(mu)
        assert ks.mubar.coords in set(ks.points())
        for e in ks.elements:
            assert is_dominant(e.nu)
            ok, cert = is_in_bgmu(e.nu, ks.mubar)
            assert ok and cert[0] == e.c and cert[1] == e.J
            assert newton_leq(e.nu, ks.mubar)
            # certificate reconstructs nu exactly
            coords = list(ks.mubar.coords)
            for ci, av in zip(e.c, d.simple_coroots):
                for t_, x in enumerate(av):
                    coords[t_] -= ci * x
            assert tuple(coords) == e.nu.coords


def test_downward_directed():
    for t, n, k in [("C", 2, 2), ("B", 3, 1), ("A", 3, 2)]:
        d = build_datum(t, n)
        ks = enumerate_bgmu(_coweight(d, k))
        pts = [d.cochar(p) for p in ks.points()]
        for a, b in itertools.combinations(pts, 2):
            assert any(newton_leq(z, a) and newton_leq(z, b) for z in pts)


def test_maximal_elements_examples():
    b3 = build_datum("B", 3)
    ks = enumerate_bgmu(_coweight(b3, 1))
    mx = maximal_elements(ks, exclude_top=True)
    assert {e.nu.coords for e in mx} == {(F(1, 2), F(1, 2), 0)}
    c2 = build_datum("C", 2)
    ks = enumerate_bgmu(_coweight(c2, 2))
    mx = maximal_elements(ks, exclude_top=True)
    assert {e.nu.coords for e in mx} == {(F(1, 2), 0)}
    mx = maximal_elements(ks, exclude_top=False)
    assert {e.nu.coords for e in mx} == {ks.mubar.coords}


def test_maximal_elements_empty_input():
    c2 = build_datum("C", 2)
    ks = enumerate_bgmu(c2.cochar([0, 0]))
    with pytest.raises(ValueError):
        maximal_elements(ks, exclude_top=True)


def test_maximal_element_theorem_small_ranks():
    cases = (
        [("A", n, k) for n in range(1, 5) for k in range(1, n + 1)]
        + [("B", n, 1) for n in (2, 3, 4)]
        + [("C", n, n) for n in (2, 3, 4)]
        + [("D", n, k) for n in (4, 5) for k in (1, n - 1, n)]
    )
    for t, n, k in cases:
        d = build_datum(t, n)
        mu = _coweight(d, k)
        ks = enumerate_bgmu(mu)
        mx = maximal_elements(ks, exclude_top=True)
        expected = tuple(
            m - F(1, 2) * c for m, c in zip(ks.mubar.coords, d.simple_coroots[k - 1])
        )
        assert {e.nu.coords for e in mx} == {expected}, (t, n, k)


def test_maximal_element_theorem_rank_seven():
    # acceptance stops at rank 6 for B/C/D; the theorem also holds at 7
    for t, n, k in [("B", 7, 1), ("C", 7, 7), ("D", 7, 1), ("D", 7, 6), ("D", 7, 7)]:
        d = build_datum(t, n)
        mu = _coweight(d, k)
        ks = enumerate_bgmu(mu)
        mx = maximal_elements(ks, exclude_top=True)
        expected = tuple(
            m - F(1, 2) * c for m, c in zip(ks.mubar.coords, d.simple_coroots[k - 1])
        )
        assert {e.nu.coords for e in mx} == {expected}, (t, n, k)


def test_minuscule_coweights():
    d5 = build_datum("D", 5)
    ms = {m.coords for m in minuscule_coweights(d5)}
    assert len(ms) == 4  # zero, vector, two half-spin
    assert (1, 0, 0, 0, 0) in ms
    e8 = build_datum("E8", 8)
    assert {m.coords for m in minuscule_coweights(e8)} == {(0,) * 8}
    c3 = build_datum("C", 3)
    assert {m.coords for m in minuscule_coweights(c3)} == {
        (0, 0, 0),
        (F(1, 2), F(1, 2), F(1, 2)),
    }


def test_membership_invariant_under_diagram_relabeling():
    # simultaneous relabeling of simple roots by an automorphism
    for t, n, spec in [("A", 3, "flip"), ("D", 4, "flip"), ("E6", 6, "flip")]:
        plain = build_datum(t, n)
        twisted = build_datum(t, n, spec)
        mu = _coweight(plain, min(special_roots(plain)))
        ks = enumerate_bgmu(mu)
        for e in ks.elements:
            v = twisted.cochar(e.nu.coords)
            image_nu = sigma_apply(v)
            image_mubar = sigma_apply(twisted.cochar(ks.mubar.coords))
            mapped_mubar = plain.cochar(image_mubar.coords)
            mapped_nu = plain.cochar(image_nu.coords)
            ok, _ = is_in_bgmu(mapped_nu, mapped_mubar)
            assert ok


def test_folded_membership_requires_invariance():
    a3 = build_datum("A", 3, "flip")
    mu = _coweight(a3, 1)
    mubar = galois_average(mu)
    ok, cert = is_in_bgmu(mubar, mubar)
    assert ok
    with pytest.raises(ValueError):
        is_in_bgmu(mu, mubar)  # mu itself is not sigma-invariant


def test_folded_membership_orbit_integrality():
    # A3 with the flip: mubar = (1/2, 0, 0, -1/2); integrality is taken over
    # sigma-orbits {1,3} and {2} of the simple roots
    a3 = build_datum("A", 3, "flip")
    mubar = galois_average(_coweight(a3, 1))
    assert mubar.coords == (F(1, 2), 0, 0, F(-1, 2))
    ok, cert = is_in_bgmu(a3.cochar([0, 0, 0, 0]), mubar)
    assert ok and cert[0] == (F(1, 2), F(1, 2), F(1, 2))
    ok, cert = is_in_bgmu(a3.cochar([F(1, 4), F(1, 4), F(-1, 4), F(-1, 4)]), mubar)
    assert ok and cert[0] == (F(1, 4), 0, F(1, 4))
    # c_1 + c_3 = 1/4 is not an integer while <nu, alpha_1> != 0
    ok, reason = is_in_bgmu(
        a3.cochar([F(3, 8), F(1, 8), F(-1, 8), F(-3, 8)]), mubar
    )
    assert not ok and "non-integral" in reason


def test_galois_average_e6_flip():
    e6 = build_datum("E6", 6, "flip")
    cw = fundamental_coweights(e6)
    avg = galois_average(e6.cochar(cw[0]))
    expected = tuple((a + b) / 2 for a, b in zip(cw[0], cw[5]))
    assert avg.coords == expected
    assert sigma_apply(avg).coords == avg.coords


def test_enumerate_product_datum():
    d = product_datum([build_datum("A", 1), build_datum("A", 1)])
    mu = d.cochar([F(1, 2), F(-1, 2), F(1, 2), F(-1, 2)])
    ks = enumerate_bgmu(mu)
    # each factor contributes the two-element chain, so four points total
    assert len(ks.elements) == 4
    assert ks.mubar.coords == mu.coords
    assert (0, 0, 0, 0) in set(ks.points())


def test_kottwitz_set_json_roundtrip():
    c2 = build_datum("C", 2)
    ks = enumerate_bgmu(_coweight(c2, 2))
    doc = kottwitz_set_to_json(ks)
    assert doc["elements"][1]["nu"] == ["1/2", "0/1"]
    back = kottwitz_set_from_json(doc, c2)
    assert back.points() == ks.points()
    assert [e.c for e in back.elements] == [e.c for e in ks.elements]
