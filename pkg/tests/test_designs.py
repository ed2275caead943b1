import pytest

from oracles import is_sts
from stsbicolor.designs import (
    DoublingAssociation,
    TripleSystem,
    admissible_order,
    bose_construction,
    cyclic_sts,
    double,
    find_subsystem,
    skolem_construction,
    validate_sts,
)
from stsbicolor.errors import InvalidFactorization, OrderNotAdmissible, SizeMismatch
from stsbicolor.factorization import OneFactorization, circle_factorization
from stsbicolor.fixtures import CYCLIC13, EXAMPLE12, EXAMPLE12_SUBSYSTEM, FANO, STS9


@pytest.mark.parametrize("v", [3, 9, 15, 21, 27, 33, 45])
def test_bose_orders(v):
    sts = bose_construction(v)
    assert validate_sts(sts)
    assert is_sts(v, sts.triples)
    assert len(sts) == v * (v - 1) // 6


@pytest.mark.parametrize("v", [7, 13, 19, 25, 31, 37, 43])
def test_skolem_orders(v):
    sts = skolem_construction(v)
    assert validate_sts(sts)
    assert is_sts(v, sts.triples)


@pytest.mark.parametrize("v", [5, 11, 17, 6])
def test_inadmissible_orders_raise(v):
    with pytest.raises(OrderNotAdmissible):
        bose_construction(v)
    with pytest.raises(OrderNotAdmissible):
        skolem_construction(v)


def test_admissible_order():
    assert [v for v in range(1, 26) if admissible_order(v)] == [1, 3, 7, 9, 13, 15, 19, 21, 25]


def test_fixtures_valid():
    for sts in (FANO, STS9, CYCLIC13, EXAMPLE12):
        assert validate_sts(sts)
        assert is_sts(sts.v, sts.triples)
    assert len(EXAMPLE12) == 57


def test_cyclic13_from_base_blocks():
    assert cyclic_sts(13, [(0, 1, 4), (0, 2, 7)]) == CYCLIC13
    assert len(CYCLIC13) == 26


def test_cyclic_short_orbit():
    # {0,1,3} mod 7 is the Fano plane; order 9 needs a short orbit
    assert validate_sts(cyclic_sts(7, [(0, 1, 3)]))
    assert validate_sts(cyclic_sts(15, [(0, 1, 4), (0, 2, 8)], short_orbit=True))


def test_duplicate_pair_reported():
    bad = list(FANO.triples[:-1]) + [(0, 1, 2)]
    r = validate_sts(7, bad)
    assert not r and r.reason == "duplicate-pair"
    assert r.witness in {(0, 1), (0, 2), (1, 2)}


def test_uncovered_pair_reported():
    r = validate_sts(7, FANO.triples[:-1])
    assert r.reason == "uncovered-pair"
    missing = set(FANO.triples[-1])
    assert set(r.witness) <= missing


def test_malformed_and_out_of_range():
    assert validate_sts(3, [(0, 0, 1)]).reason == "malformed-triple"
    assert validate_sts(3, [(0, 1, 5)]).reason == "point-out-of-range"
    assert validate_sts(0, []).reason == "bad-order"


def test_triple_system_roundtrip():
    assert TripleSystem.from_dict(EXAMPLE12.to_dict()) == EXAMPLE12
    third = FANO.third_point()
    assert third[(0, 1)] == 3 and third[(1, 3)] == 0


def test_doubling_fano():
    d = double(FANO, circle_factorization(8))
    assert d.v == 15 and validate_sts(d)
    assert find_subsystem(d, range(7))


def test_doubling_rejects_bad_input():
    with pytest.raises(SizeMismatch):
        double(FANO, circle_factorization(10))
    f = circle_factorization(8)
    broken = OneFactorization(8, [f.factors[0]] * 7)
    with pytest.raises(InvalidFactorization):
        double(FANO, broken)
    with pytest.raises(SizeMismatch):
        double(FANO, f, [0, 0, 1, 2, 3, 4, 5])


def test_association_inverse():
    a = DoublingAssociation([2, 0, 1])
    assert a.inverse() == (1, 2, 0)
    assert DoublingAssociation.identity(3) == (0, 1, 2)


def test_example12_subsystem():
    rep = find_subsystem(EXAMPLE12, EXAMPLE12_SUBSYSTEM)
    assert rep.found
    assert len(rep.witness.induced_triples) == 7
    assert validate_sts(rep.witness.reindexed())
    assert not find_subsystem(EXAMPLE12, range(7))
