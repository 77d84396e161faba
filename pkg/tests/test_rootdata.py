import random
from fractions import Fraction as F

import pytest

from newtonkit.rootdata import (
    RationalCocharacter,
    build_datum,
    datum_from_json,
    datum_to_json,
    dominant_representative,
    fundamental_coweights,
    fundamental_weights,
    highest_root,
    is_dominant,
    pairing,
    product_datum,
    reflect_simple,
    sigma_apply,
    special_roots,
)

ALL_TYPES = (
    [("A", n) for n in range(1, 9)]
    + [("B", n) for n in range(2, 9)]
    + [("C", n) for n in range(2, 9)]
    + [("D", n) for n in range(3, 9)]
    + [("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)]
)


def test_build_a3_epsilon_basis():
    d = build_datum("A", 3)
    assert d.ambient_dim == 4
    assert d.simple_roots[0] == (1, -1, 0, 0)
    assert d.simple_roots[2] == (0, 0, 1, -1)
    assert d.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))


def test_build_c2_coroots():
    d = build_datum("C", 2)
    assert d.simple_roots == ((1, -1), (0, 2))
    assert d.simple_coroots == ((1, -1), (0, 1))


def test_build_a2_flip_preserves_cartan():
    d = build_datum("A", 2, "flip")
    assert d.sigma == (2, 1)
    assert d.sigma_order == 2


def test_invalid_rank_rejected():
    with pytest.raises(ValueError):
        build_datum("B", 1)
    with pytest.raises(ValueError):
        build_datum("D", 2)
    with pytest.raises(ValueError):
        build_datum("E6", 7)
    with pytest.raises(ValueError):
        build_datum("Z", 3)


def test_bad_sigma_rejected():
    with pytest.raises(ValueError):
        build_datum("A", 3, (2, 1, 3))  # not a diagram automorphism
    with pytest.raises(ValueError):
        build_datum("B", 3, "flip")  # B has no flip
    with pytest.raises(ValueError):
        build_datum("A", 3, (1, 1, 2))


def test_cartan_shape_all_types():
    for t, n in ALL_TYPES:
        d = build_datum(t, n)
        for i in range(n):
            assert d.cartan[i][i] == 2
            for j in range(n):
                if i != j:
                    assert d.cartan[i][j] <= 0


def test_fundamental_weights_examples():
    a3 = build_datum("A", 3)
    assert fundamental_weights(a3)[0] == (1, 0, 0, 0)
    b3 = build_datum("B", 3)
    assert fundamental_weights(b3)[2] == (F(1, 2), F(1, 2), F(1, 2))


def test_fundamental_coweights_examples():
    a3 = build_datum("A", 3)
    assert fundamental_coweights(a3)[0] == (F(3, 4), F(-1, 4), F(-1, 4), F(-1, 4))
    c2 = build_datum("C", 2)
    assert fundamental_coweights(c2)[1] == (F(1, 2), F(1, 2))
    b3 = build_datum("B", 3)
    assert fundamental_coweights(b3)[0] == (1, 0, 0)


def test_dual_basis_identities_all_types():
    for t, n in ALL_TYPES:
        d = build_datum(t, n)
        weights = fundamental_weights(d)
        coweights = fundamental_coweights(d)
        for i in range(n):
            for j in range(n):
                assert pairing(d.simple_coroots[j], weights[i]) == int(i == j)
                assert pairing(coweights[i], d.simple_roots[j]) == int(i == j)


def test_highest_root_classical_tables():
    for n in range(2, 9):
        assert highest_root(build_datum("A", n))[1] == (1,) * n
        assert highest_root(build_datum("B", n))[1] == (1,) + (2,) * (n - 1)
        assert highest_root(build_datum("C", n))[1] == (2,) * (n - 1) + (1,)
        if n >= 3:
            coeffs = highest_root(build_datum("D", n))[1]
            if n == 3:
                assert coeffs == (1, 1, 1)
            else:
                assert coeffs == (1,) + (2,) * (n - 3) + (1, 1)


def test_highest_root_exceptional():
    assert highest_root(build_datum("E6", 6))[1] == (1, 2, 2, 3, 2, 1)
    assert highest_root(build_datum("E7", 7))[1] == (2, 2, 3, 4, 3, 2, 1)
    assert highest_root(build_datum("E8", 8))[1] == (2, 3, 4, 6, 5, 4, 3, 2)
    assert highest_root(build_datum("F4", 4))[1] == (2, 3, 4, 2)
    assert highest_root(build_datum("G2", 2))[1] == (3, 2)


def test_g2_highest_root_is_maximal_under_root_addition():
    # brute force: no simple root can be added to the highest root
    from newtonkit.rootdata import all_roots

    d = build_datum("G2", 2)
    top, _ = highest_root(d)
    roots = all_roots(d)
    assert len(roots) == 12
    for alpha in d.simple_roots:
        assert tuple(a + b for a, b in zip(top, alpha)) not in roots


def test_special_roots_tables():
    assert special_roots(build_datum("A", 3)) == {1, 2, 3}
    for n in range(2, 7):
        assert special_roots(build_datum("B", n)) == {1}
        assert special_roots(build_datum("C", n)) == {n}
    for n in range(4, 7):
        assert special_roots(build_datum("D", n)) == {1, n - 1, n}
    assert special_roots(build_datum("E6", 6)) == {1, 6}
    assert special_roots(build_datum("E7", 7)) == {7}
    assert special_roots(build_datum("E8", 8)) == set()
    assert special_roots(build_datum("F4", 4)) == set()
    assert special_roots(build_datum("G2", 2)) == set()


def test_pairing_examples():
    c2 = build_datum("C", 2)
    assert pairing((F(1, 2), F(1, 2)), c2.simple_roots[0]) == 0
    assert pairing((F(1, 4), F(1, 4)), (1, 1)) == F(1, 2)
    with pytest.raises(ValueError):
        pairing((1, 2, 3), (1, 2))


def test_dominance_examples():
    c2 = build_datum("C", 2)
    assert is_dominant(c2.cochar([F(1, 2), F(1, 2)]))
    v = c2.cochar([0, F(1, 2)])
    assert not is_dominant(v)
    assert dominant_representative(v).coords == (F(1, 2), 0)


def test_dominant_representative_a2_brute_force():
    a2 = build_datum("A", 2)
    v = a2.cochar([-1, 0, 1])
    rep = dominant_representative(v)
    assert rep.coords == (1, 0, -1)
    # the whole 6-element orbit maps to the same representative
    orbit = {v.coords}
    frontier = [v]
    while frontier:
        w = frontier.pop()
        for i in (1, 2):
            img = reflect_simple(w, i)
            if img.coords not in orbit:
                orbit.add(img.coords)
                frontier.append(img)
    assert len(orbit) == 6
    for coords in orbit:
        assert dominant_representative(a2.cochar(coords)).coords == rep.coords


def test_dominant_representative_idempotent_and_weyl_invariant():
    rng = random.Random(11)
    for t, n in [("A", 2), ("B", 3), ("C", 3), ("D", 4), ("G2", 2), ("F4", 4)]:
        d = build_datum(t, n)
        for _ in range(20):
            v = d.cochar(
                [F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(d.ambient_dim)]
            )
            rep = dominant_representative(v)
            assert is_dominant(rep)
            assert dominant_representative(rep).coords == rep.coords
            for i in range(1, n + 1):
                assert dominant_representative(reflect_simple(v, i)).coords == rep.coords


def test_sigma_commutes_with_dominance():
    rng = random.Random(13)
    for t, n, spec in [("A", 3, "flip"), ("D", 4, "flip"), ("E6", 6, "flip")]:
        d = build_datum(t, n, spec)
        for _ in range(15):
            v = d.cochar(
                [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(d.ambient_dim)]
            )
            assert is_dominant(v) == is_dominant(sigma_apply(v))


def test_sigma_apply_permutes_coweights():
    a3 = build_datum("A", 3, "flip")
    cw = fundamental_coweights(a3)
    assert sigma_apply(a3.cochar(cw[0])).coords == cw[2]
    assert sigma_apply(a3.cochar(cw[1])).coords == cw[1]


def test_json_roundtrip():
    for t, n, spec in [("C", 2, None), ("A", 3, "flip"), ("E7", 7, None)]:
        d = build_datum(t, n, spec)
        doc = datum_to_json(d)
        assert datum_from_json(doc) == d
    assert datum_to_json(build_datum("C", 2)) == {
        "type": "C",
        "rank": 2,
        "sigma": [1, 2],
    }


def test_product_datum_basics():
    d = product_datum([build_datum("A", 1), build_datum("C", 2)])
    assert d.rank == 3
    assert d.ambient_dim == 4
    assert d.is_product
    with pytest.raises(ValueError):
        highest_root(d)
    with pytest.raises(ValueError):
        special_roots(d)
    doc = datum_to_json(d)
    assert datum_from_json(doc) == d


def test_cocharacter_dimension_checked():
    c2 = build_datum("C", 2)
    with pytest.raises(ValueError):
        RationalCocharacter((F(1), F(0), F(0)), c2)
