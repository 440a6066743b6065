import json

import pytest

import polypair


def test_seed_pair():
    p = polypair.seed("P1")
    assert p.pair() == (7, 35)
    assert p.f_vector() == [7, 17, 18, 8]
    assert p.check()


def test_dual_round_trip():
    p = polypair.seed("P15")
    assert p.dual().pair() == (13, 55)
    assert p.dual().dual() == p


def test_membership():
    assert polypair.check("f0,f03", 6, 24)["verdict"] == "Exceptional"
    assert polypair.check("f1,f2", 27, 21)["verdict"] == "Exceptional"
    assert polypair.check("f0,f03", 7, 35)["witness"] == "P1"
    assert polypair.check_high(6, 8, 14)["verdict"] == "Exceptional"


def test_witness():
    recipe = json.loads(polypair.plan(10, 60))
    assert recipe["expected"] == [10, 60]
    p, ok = polypair.execute(json.dumps(recipe))
    assert ok and p.pair() == (10, 60)
    assert polypair.witness(12, 90).pair() == (12, 90)


def test_errors():
    with pytest.raises(polypair.PolypairError):
        polypair.plan(6, 24)
    with pytest.raises(polypair.PolypairError):
        polypair.parse("0 1 x\n")
    with pytest.raises(ValueError):
        polypair.check("f9,f9", 1, 1)


def test_families():
    assert polypair.generalized_stack(2, 8).pair() == (9, 96)
    assert polypair.delta_star(1, 4, 8).pair() == (9, 93)
    assert polypair.cyclic_facet_count(6, 11) == "77"
