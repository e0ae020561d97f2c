import random

import pytest

from tsuboi.lemmas import (ConstructionError, LEMMA_NAMES, ParityObstruction,
                           cycle_as_two_involutions, even_case_display,
                           gamma_from_iota, iota_from_gamma_pair,
                           iota_from_gamma_triple, iota_from_sigma,
                           n4_identity, pair_involution_product,
                           sigma_from_iota, three_conjugates_iota)
from tsuboi.perm import (CycleType, Permutation, canonical_gamma,
                         canonical_iota, compose_all, cycle_type,
                         parse_cycles)


def test_three_conjugates_pinned_instance():
    # l=1, k=3 on points 1..6: the closed-form triple multiplying to (1 2)
    lw = three_conjugates_iota(1, 3)
    assert lw.verify()
    w = lw.witness
    assert [f for f in w.factor_perms()] == [
        parse_cycles("(1 2)(3 4)(5 6)"),
        parse_cycles("(1 2)(3 5)(4 6)"),
        parse_cycles("(1 2)(3 6)(4 5)"),
    ]
    assert w.product() == parse_cycles("(1 2)")


def test_three_conjugates_degenerate():
    lw = three_conjugates_iota(4, 4)
    assert lw.verify()
    assert lw.witness.product() == canonical_iota(4)


def test_three_conjugates_parity_errors():
    with pytest.raises(ParityObstruction):
        three_conjugates_iota(1, 2)
    with pytest.raises(ValueError):
        three_conjugates_iota(5, 3)


def test_pair_involution_product():
    s, s2, prod = pair_involution_product(6, 2)
    assert cycle_type(s) == CycleType([6])
    assert cycle_type(s2) == CycleType([6])
    assert s * s2 == prod
    assert cycle_type(prod) == CycleType([2, 2])


def test_iota_from_gamma_pair_small():
    lw = iota_from_gamma_pair(6)
    assert lw.k == 2
    assert lw.verify()


def test_iota_from_gamma_pair_parity_obstruction():
    # two n-cycles multiply to an even permutation; odd k is impossible
    for n in (3, 9):
        with pytest.raises(ParityObstruction):
            iota_from_gamma_pair(n)


def test_iota_from_gamma_pair_explicit_even_k():
    lw = iota_from_gamma_pair(9, 2)
    assert lw.k == 2
    assert lw.verify()


def test_even_case_display():
    # (3 1 5 6)(1 2 3 4) = (1 2)(3 4 5 6) at m=2
    a, b, prod = even_case_display(2)
    assert a == parse_cycles("(3 1 5 6)")
    assert b == parse_cycles("(1 2 3 4)")
    assert a * b == prod == parse_cycles("(1 2)(3 4 5 6)")
    for m in range(2, 11):
        a, b, prod = even_case_display(m)
        assert a * b == prod
        assert cycle_type(prod) == CycleType([2 * m, 2])


def test_iota_from_gamma_triple_cases():
    lw = iota_from_gamma_triple(2)
    assert lw.k == 3
    assert lw.verify()
    assert lw.witness.factor_perms()[0].cycle_type() == CycleType([2])
    for n in range(2, 13):
        lw = iota_from_gamma_triple(n)
        assert lw.verify()
        assert lw.k >= -(-n // 6)
        for f in lw.witness.factor_perms():
            assert f.cycle_type() == CycleType([n])
        assert lw.witness.product().cycle_type() == CycleType([2] * lw.k)


def test_cycle_as_two_involutions():
    for m in range(2, 12):
        u, v = cycle_as_two_involutions(m)
        assert (u * v).cycle_type() == CycleType([m])
        assert all(l == 2 for l in u.cycle_type())
        assert all(l == 2 for l in v.cycle_type())


def test_gamma_from_iota_cases():
    lw = gamma_from_iota(2)
    assert lw.k == 1
    assert lw.witness.factor_perms() == [parse_cycles("(1 2)")] * 3
    for n in range(2, 13):
        lw = gamma_from_iota(n)
        assert lw.verify()
        assert lw.k <= n
        assert lw.witness.product().cycle_type() == CycleType([n])
        for f in lw.witness.factor_perms():
            assert f.cycle_type() == CycleType([2] * lw.k)


def test_iota_from_sigma_multicycle():
    sigma = parse_cycles("(1 2)(3 4 5)")
    lw = iota_from_sigma(sigma)
    assert lw.verify()
    assert lw.k >= 1  # ceil(5/6)
    for f in lw.witness.factor_perms():
        assert f.cycle_type() == sigma.cycle_type()


def test_sigma_from_iota_multicycle():
    sigma = parse_cycles("(1 2 3)(4 5 6 7)")
    lw = sigma_from_iota(sigma)
    assert lw.verify()
    assert lw.k <= 7
    assert lw.witness.product().cycle_type() == sigma.cycle_type()


def test_sigma_lemmas_random_sweep():
    rng = random.Random(42)
    for _ in range(40):
        n = rng.randint(2, 10)
        pts = list(range(1, 11))
        rng.shuffle(pts)
        chosen = pts[:n]
        img = chosen[1:] + chosen[:1]
        sigma = Permutation({a: b for a, b in zip(chosen, img) if a != b})
        if sigma.is_identity():
            continue
        nu = len(sigma.support)
        up = iota_from_sigma(sigma)
        assert up.verify() and up.k >= -(-nu // 6)
        down = sigma_from_iota(sigma)
        assert down.verify() and down.k <= nu


def test_sigma_rejects_identity():
    with pytest.raises(ValueError):
        iota_from_sigma(Permutation())
    with pytest.raises(ValueError):
        sigma_from_iota(Permutation())


def test_n4_identity_report():
    rep = n4_identity()
    assert rep["as_written_holds"] is True
    assert rep["reversed_holds"] is False
    assert rep["witness"].verify()
    assert rep["witness"].target_rep == parse_cycles("(3 4)")
    g = parse_cycles("(1 2 3 4)")
    assert g * g * parse_cycles("(1 3 2 4)") == parse_cycles("(3 4)")
    assert g * g == parse_cycles("(1 3)(2 4)")


def test_lemma_names_frozen():
    assert LEMMA_NAMES == ("three-conjugates", "iota-from-gamma-pair",
                           "iota-from-gamma-triple", "iota-from-sigma",
                           "gamma-from-iota", "sigma-from-iota",
                           "n4-identity")


def test_witness_json_has_bounds():
    lw = iota_from_gamma_triple(7)
    doc = lw.to_json_dict()
    assert doc["lemma"] == "iota-from-gamma-triple"
    assert all(doc["bounds"].values())
    assert doc["witness"]["verified"] is True
