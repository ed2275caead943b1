import pytest

from oracles import bicoloring_patterns, independence_number as brute_alpha
from stsbicolor.coloring import (
    Coloring,
    chromatic_bounds,
    enumerate_bicolorings,
    find_bicoloring,
    independence_number,
    max_colors_bound,
    pattern_of,
    verify_bicoloring,
)
from stsbicolor.designs import TripleSystem, bose_construction, double, skolem_construction
from stsbicolor.errors import SizeMismatch
from stsbicolor.factorization import circle_factorization
from stsbicolor.fixtures import CYCLIC13, EXAMPLE12, EXAMPLE12_COLORING, FANO, STS9


def test_fano_witness():
    # classes {0}, {1,3}, {2,4,5,6}
    col = Coloring([0, 1, 2, 1, 2, 2, 2])
    rep = verify_bicoloring(FANO, col)
    assert rep.ok and rep.pattern == (1, 2, 4)


def test_monochromatic_and_polychromatic():
    rep = verify_bicoloring(FANO, Coloring([0] * 7))
    assert rep.reason == "monochromatic"
    rep = verify_bicoloring(FANO, Coloring([0, 1, 2, 0, 1, 2, 0]))
    assert rep.reason in ("polychromatic", "monochromatic")
    assert rep.triple is not None


def test_unused_color():
    rep = verify_bicoloring(STS9, Coloring([0, 1, 1, 1, 1, 0, 0, 0, 0], k=3))
    assert not rep.ok


def test_size_mismatch():
    with pytest.raises(SizeMismatch):
        verify_bicoloring(FANO, Coloring([0, 1]))


@pytest.mark.parametrize("sts", [FANO, STS9], ids=["fano", "sts9"])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_enumeration_matches_brute_force(sts, k):
    assert enumerate_bicolorings(sts, k).patterns == bicoloring_patterns(sts.v, sts.triples, k)


def test_known_patterns():
    assert enumerate_bicolorings(FANO, 3).patterns == {(1, 2, 4)}
    assert enumerate_bicolorings(STS9, 3).patterns == {(1, 4, 4)}
    assert enumerate_bicolorings(CYCLIC13, 3).patterns == {(2, 5, 6)}
    assert enumerate_bicolorings(skolem_construction(13), 3).patterns == {(2, 5, 6)}
    assert enumerate_bicolorings(EXAMPLE12, 3).patterns == {(4, 6, 9)}
    assert not enumerate_bicolorings(EXAMPLE12, 4).patterns


def test_witnesses_verify():
    for sts in (FANO, STS9, CYCLIC13):
        for pattern, col in enumerate_bicolorings(sts, 3).witnesses.items():
            assert verify_bicoloring(sts, col).pattern == pattern


def test_find_with_pattern():
    out = find_bicoloring(CYCLIC13, 3, pattern=(6, 5, 2))
    assert out.status == "found" and pattern_of(out.coloring) == (2, 5, 6)
    assert find_bicoloring(CYCLIC13, 3, pattern=(1, 6, 6)).status == "exhausted"


def test_budget_exhausted():
    out = find_bicoloring(bose_construction(15), 4, budget=3)
    assert out.status == "budget-exhausted"
    res = enumerate_bicolorings(EXAMPLE12, 3, budget=5)
    assert not res.complete and res.status == "budget-exhausted"


def test_by_size_and_classes():
    col = EXAMPLE12_COLORING.by_size()
    assert col.class_sizes() == (4, 6, 9)
    assert Coloring.from_classes(19, col.classes()) == col
    assert Coloring.from_dict(col.to_dict()) == col
    assert col.restrict(7).v == 7


@pytest.mark.parametrize("v,bound", [(3, 2), (7, 3), (13, 3), (15, 4), (27, 4), (31, 5), (63, 6), (111, 6)])
def test_max_colors_bound(v, bound):
    assert max_colors_bound(v) == bound
    assert 2 ** bound - 1 <= v < 2 ** (bound + 1) - 1


def test_doubled_fano_has_four_colors():
    d = double(FANO, circle_factorization(8))
    assert enumerate_bicolorings(d, 4).patterns == {(1, 2, 4, 8)}


def test_chromatic_fano():
    b = chromatic_bounds(FANO)
    assert (b.chi, b.chi_bar) == (3, 3)
    assert b.complete and b.colorable


def test_chromatic_with_known_witness():
    b = chromatic_bounds(EXAMPLE12, witnesses=[EXAMPLE12_COLORING])
    assert b.chi == 3 and b.chi_bar == 3


@pytest.mark.parametrize("sts", [FANO, STS9], ids=["fano", "sts9"])
def test_independence_number(sts):
    res = independence_number(sts)
    assert res.complete
    assert res.alpha == brute_alpha(sts.v, sts.triples)
    chosen = set(res.independent_set)
    assert len(chosen) == res.alpha
    assert not any(set(t) <= chosen for t in sts.triples)


def test_independence_small_system():
    res = independence_number(TripleSystem(3, [(0, 1, 2)]))
    assert res.alpha == 2 and not res.implies_uncolorable
