import itertools
import json

import pytest

from oracles import counting_feasible, eq1_pairs, extension_exists
from stsbicolor.coloring import Coloring, enumerate_bicolorings, verify_bicoloring
from stsbicolor.designs import TripleSystem, double, validate_sts
from stsbicolor.errors import ConstructionUnverified, InstanceTooLarge, PreconditionViolated
from stsbicolor.extension import (
    ExtensionCertificate,
    corollary2_reason,
    counting_filter,
    enumerate_eq1_solutions,
    eq1_holds,
    factor_profiles,
    filter_corollary2,
    mirrored_factorization,
    new_class_coloring,
    ordered_and_unordered_counts,
    search_extension,
    search_factorization,
    split_pattern,
    theorem3_eligible,
    theorem3_extend,
    theorem4_conditions,
    theorem4_extend,
    trivial_doubling_colorings,
    type_assignments,
    verify_certificate,
)
from stsbicolor.fixtures import CYCLIC13, EXAMPLE12, EXAMPLE12_COLORING, FANO, STS9

FANO_COL = Coloring([0, 1, 2, 1, 2, 2, 2])


@pytest.fixture(scope="module")
def col13():
    return enumerate_bicolorings(CYCLIC13, 3).witnesses[(2, 5, 6)].by_size()


@pytest.fixture(scope="module")
def col9():
    return enumerate_bicolorings(STS9, 3).witnesses[(1, 4, 4)].by_size()


# -- pair-count equation


def test_eq1_order9():
    assert enumerate_eq1_solutions(9, (1, 4, 4)) == [(3, 2, 5), (3, 5, 2), (5, 0, 5), (5, 5, 0), (8, 0, 2), (8, 2, 0)]


def test_eq1_order13():
    assert set(enumerate_eq1_solutions(13, (2, 5, 6))) == {
        (4, 4, 6), (7, 1, 6), (4, 7, 3), (7, 7, 0), (10, 1, 3), (10, 4, 0)
    }


def test_eq1_fano_empty():
    assert enumerate_eq1_solutions(7, (1, 2, 4)) == []
    assert eq1_pairs(7, (1, 2, 4)) == []


@pytest.mark.parametrize(
    "v,n",
    [(9, (1, 4, 4)), (13, (2, 5, 6)), (7, (1, 2, 4)), (25, (5, 10, 10)), (25, (1, 4, 8, 12)),
     (45, (2, 8, 14, 21)), (45, (4, 6, 13, 22)), (49, (2, 8, 18, 21)), (49, (5, 6, 14, 24)),
     (19, (4, 6, 9)), (27, (1, 4, 10, 12)), (31, (1, 2, 4, 8, 16))],
)
def test_eq1_matches_cross_pair_oracle(v, n):
    assert enumerate_eq1_solutions(v, n) == eq1_pairs(v, n)


def test_eq1_five_colors_matches_oracle():
    assert enumerate_eq1_solutions(49, (1, 4, 4, 20, 20)) == eq1_pairs(49, (1, 4, 4, 20, 20))


def test_count_conventions():
    assert ordered_and_unordered_counts(49, (1, 4, 4, 20, 20)) == {"ordered": 84, "unordered": 24}
    assert ordered_and_unordered_counts(9, (1, 4, 4)) == {"ordered": 6, "unordered": 3}


# -- filters


def test_corollary2_order9():
    f = filter_corollary2(enumerate_eq1_solutions(9, (1, 4, 4)), (1, 4, 4), 9)
    assert f.survivors == [(3, 2, 5), (3, 5, 2)]
    assert len(f.eliminated) == 4


def test_corollary2_order13():
    f = filter_corollary2(enumerate_eq1_solutions(13, (2, 5, 6)), (2, 5, 6), 13)
    assert set(f.survivors) == {(4, 4, 6), (7, 1, 6), (4, 7, 3)}


def test_corollary2_concentrated_vector():
    assert "exceeds" in corollary2_reason((10, 0, 0), (1, 4, 4), 9)


def test_counting_order9():
    for c in [(3, 2, 5), (3, 5, 2)]:
        verdict = counting_filter(c, (1, 4, 4), 9)
        assert not verdict
        assert "monochromatic" in verdict.reason


def test_counting_order13():
    assert not counting_filter((4, 7, 3), (2, 5, 6), 13)
    ok = counting_filter((4, 4, 6), (2, 5, 6), 13)
    assert ok and ok.cross_totals is not None


def test_counting_precondition_and_size():
    with pytest.raises(PreconditionViolated):
        counting_filter((1, 1, 8), (1, 4, 4), 9)
    with pytest.raises(InstanceTooLarge):
        counting_filter((37, 34, 41), (1, 54, 56), 111)


def _small_instances():
    for v in range(3, 12):
        for k in (2, 3):
            for n in itertools.product(range(1, v + 1), repeat=k):
                if sum(n) == v and list(n) == sorted(n):
                    yield v, n


@pytest.mark.parametrize("v,n", list(_small_instances()))
def test_counting_matches_profile_enumeration(v, n):
    for c in enumerate_eq1_solutions(v, n):
        assert counting_filter(c, n, v).feasible == counting_feasible(c, n), c


def test_counting_totals_are_consistent():
    n, v = (2, 5, 6), 13
    verdict = counting_filter((4, 4, 6), n, v)
    T = verdict.cross_totals
    c = (4, 4, 6)
    for j in range(3):
        assert sum(T[j]) == n[j] * c[j]
        for m in range(3):
            if m != j:
                assert T[j][m] + T[m][j] == c[j] * c[m]


def test_factor_profiles():
    profs = factor_profiles((4, 4, 6), 2)
    assert all(sum(p.cross) == 6 for p in profs)
    assert all((4 - p.cross[m]) % 2 == 0 for p in profs for m in (0, 1))


def _instances_m8():
    for v in (3, 5, 7):
        for k in (2, 3):
            for n in itertools.product(range(1, v + 1), repeat=k):
                if sum(n) == v:
                    for c in enumerate_eq1_solutions(v, n):
                        yield n, c


@pytest.mark.parametrize("n,c", list(_instances_m8()))
def test_search_matches_brute_force(n, c):
    found = search_factorization(n, c)
    assert found.status in ("found", "exhausted")
    assert (found.status == "found") == extension_exists(n, c)
    # filters never reject anything the search realizes
    if found.status == "found":
        assert corollary2_reason(c, n, sum(n)) is None
        assert counting_filter(c, n, sum(n)).feasible


@pytest.mark.parametrize("v,n", [(9, (1, 4, 4)), (13, (2, 5, 6)), (19, (4, 6, 9)), (25, (1, 4, 8, 12))])
def test_counting_stronger_than_corollary2(v, n):
    for c in enumerate_eq1_solutions(v, n):
        if corollary2_reason(c, n, v) is not None:
            assert not counting_filter(c, n, v)


def test_type_assignments_cover_counts():
    n, c = (2, 5, 6), (4, 4, 6)
    for types in type_assignments(n, c):
        assert [types.count(j) for j in range(3)] == list(n)


# -- constructions


def test_theorem3_example12():
    cert = theorem3_extend(EXAMPLE12, EXAMPLE12_COLORING, 0, 1)
    assert cert.doubled.v == 39
    assert cert.extended_pattern == (9, 14, 16)
    assert verify_certificate(cert)
    assert cert.solution == (10, 10, 0)
    assert all(ok for _, ok in cert.transcript)


def test_theorem3_order13_odd_half(col13):
    with pytest.raises(PreconditionViolated):
        theorem3_extend(CYCLIC13, col13, 0, 1)


def test_theorem3_wrong_sizes():
    with pytest.raises(PreconditionViolated):
        theorem3_extend(EXAMPLE12, EXAMPLE12_COLORING, 0, 2)


def test_theorem3_eligible():
    n = (1, 2, 8, 16, 24)
    pairs = theorem3_eligible(n, 51)
    assert [(n[i], n[j]) for i, j in pairs] == [(2, 24)]
    n = (2, 5, 10, 34, 36)
    assert [(n[i], n[j]) for i, j in theorem3_eligible(n, 87)] == [(10, 34)]
    assert theorem3_eligible((6, 9, 12), 27) == []


def test_split_pattern():
    assert split_pattern((1, 4, 10, 12), 27, 1, 2) == (1, 12, 18, 24)


def test_theorem4_reduces_to_theorem3():
    a = theorem3_extend(EXAMPLE12, EXAMPLE12_COLORING, 0, 1)
    b = theorem4_extend(EXAMPLE12, EXAMPLE12_COLORING, (0, 1))
    assert a.doubled == b.doubled and a.extended == b.extended and a.factorization == b.factorization


def test_theorem4_three_levels():
    base = new_class_coloring(EXAMPLE12, EXAMPLE12_COLORING)
    assert sorted(base.coloring.class_sizes()) == [4, 6, 9, 20]
    cert = theorem4_extend(base.system, base.coloring, (0, 1, 3))
    assert cert.doubled.v == 79
    assert verify_certificate(cert)
    assert cert.extended_pattern == (9, 14, 16, 40)


def test_theorem4_literal_conditions_order43():
    n = (1, 4, 4, 10, 20)
    for p in range(2, 6):
        for seq in itertools.permutations(range(5), p):
            assert theorem4_conditions(n, 43, seq) is not None


def test_theorem4_bad_sequence():
    with pytest.raises(PreconditionViolated):
        theorem4_extend(EXAMPLE12, EXAMPLE12_COLORING, (0, 2))


def test_search_order13(col13):
    res = search_extension(CYCLIC13, col13, (4, 4, 6))
    assert res.status == "found"
    cert = res.certificate
    assert cert.extended_pattern == (6, 9, 12)
    assert verify_certificate(json.loads(json.dumps(cert.to_dict())))
    res = search_extension(CYCLIC13, col13, (7, 1, 6))
    assert res.status == "found" and res.certificate.extended_pattern == (6, 9, 12)


def test_search_order9_exhausted(col9):
    for c in [(3, 2, 5), (3, 5, 2)]:
        res = search_extension(STS9, col9, c)
        assert res.status == "exhausted" and res.certificate is None


def test_search_budget(col13):
    res = search_extension(CYCLIC13, col13, (4, 4, 6), budget=2)
    assert res.status == "budget-exhausted"


def test_search_rejects_non_solution(col13):
    with pytest.raises(PreconditionViolated):
        search_extension(CYCLIC13, col13, (4, 5, 5))


def test_search_deterministic(col13):
    a = search_extension(CYCLIC13, col13, (4, 4, 6)).certificate.to_dict()
    b = search_extension(CYCLIC13, col13, (4, 4, 6)).certificate.to_dict()
    assert json.dumps(a) == json.dumps(b)


def test_search_parallel_agrees(col13):
    a = search_extension(CYCLIC13, col13, (7, 1, 6)).certificate
    b = search_extension(CYCLIC13, col13, (7, 1, 6), jobs=2).certificate
    assert a.factorization == b.factorization


def test_order3_has_no_extension():
    sts = TripleSystem(3, [(0, 1, 2)])
    col = Coloring([0, 1, 1])
    assert verify_bicoloring(sts, col)
    assert enumerate_eq1_solutions(3, (1, 2)) == []
    assert not any(extension_exists((1, 2), c) for c in [(a, 4 - a) for a in range(5)])


# -- certificates


def test_certificate_tamper_detected(col13):
    cert = search_extension(CYCLIC13, col13, (4, 4, 6)).certificate
    d = cert.to_dict()
    d["extended_coloring"]["colors"][-1] = (d["extended_coloring"]["colors"][-1] + 1) % 3
    rep = verify_certificate(d)
    assert not rep
    d = cert.to_dict()
    d["solution"] = [4, 6, 4]
    assert "counts-equal-solution" in verify_certificate(d).failed()
    d = cert.to_dict()
    d["transcript"] = [{"check": "everything", "ok": True}]
    d["doubled"]["triples"][0] = [0, 1, 2]
    assert not verify_certificate(d)


def test_certificate_roundtrip(col13):
    cert = search_extension(CYCLIC13, col13, (4, 4, 6)).certificate
    again = ExtensionCertificate.from_dict(cert.to_dict())
    assert again.to_dict() == cert.to_dict()


# -- the two extensions that always exist


def test_new_class_order9(col9):
    a = new_class_coloring(STS9, col9)
    assert sorted(a.coloring.class_sizes()) == [1, 4, 4, 10]
    assert verify_bicoloring(a.system, a.coloring)


def test_mirrored_order13(col13):
    t = trivial_doubling_colorings(CYCLIC13, col13)
    assert sorted(t.mirrored.coloring.class_sizes()) == [1, 4, 10, 12]
    assert verify_bicoloring(t.mirrored.system, t.mirrored.coloring)
    assert validate_sts(t.mirrored.system)


def test_trivial_from_certificate(col13):
    cert = search_extension(CYCLIC13, col13, (4, 4, 6)).certificate
    t = trivial_doubling_colorings(cert)
    assert t.new_class.system == cert.doubled
    assert sorted(t.new_class.coloring.class_sizes()) == [2, 5, 6, 14]


def test_mirrored_factorization_valid():
    for sts in (FANO, STS9, CYCLIC13, EXAMPLE12):
        f = mirrored_factorization(sts)
        assert validate_sts(double(sts, f))


def test_mirrored_incompatible_factorization_reported():
    from stsbicolor.factorization import circle_factorization

    t = trivial_doubling_colorings(FANO, FANO_COL, circle_factorization(8))
    assert t.new_class is not None
    if t.mirrored is None:
        assert t.note
    else:
        assert verify_bicoloring(t.mirrored.system, t.mirrored.coloring)


def test_eq1_holds_basic():
    assert eq1_holds(13, (2, 5, 6), (4, 4, 6))
    assert not eq1_holds(13, (2, 5, 6), (4, 4, 5))
