import pytest

from stsbicolor.chain import ChainRecord, ChiGapCertificate, advance_chain, seed_certificate, verify_chain
from stsbicolor.coloring import Coloring, enumerate_bicolorings
from stsbicolor.designs import find_subsystem
from stsbicolor.errors import VerificationFailure
from stsbicolor.extension import ExtensionCertificate, search_extension, theorem3_extend
from stsbicolor.fixtures import CYCLIC13, EXAMPLE12, EXAMPLE12_COLORING


@pytest.fixture(scope="module")
def cert27():
    col = enumerate_bicolorings(CYCLIC13, 3).witnesses[(2, 5, 6)].by_size()
    return search_extension(CYCLIC13, col, (4, 4, 6)).certificate


def _pattern(c):
    return tuple(sorted(c.class_sizes()))


def test_seed27(cert27):
    g = seed_certificate(cert27)
    assert g.order == 27
    assert _pattern(g.coloring_low) == (6, 9, 12)
    assert _pattern(g.coloring_high) == (2, 5, 6, 14)
    assert g.verified()


def test_seed39():
    cert = theorem3_extend(EXAMPLE12, EXAMPLE12_COLORING, 0, 1)
    g = seed_certificate(cert)
    assert _pattern(g.coloring_low) == (9, 14, 16)
    assert _pattern(g.coloring_high) == (4, 6, 9, 20)
    chain = advance_chain(g, 1)
    assert chain.orders == [39, 79]


def test_seed_rejects_tampered(cert27):
    d = cert27.to_dict()
    d["extended_coloring"]["colors"][0] = (d["extended_coloring"]["colors"][0] + 1) % 3
    with pytest.raises(VerificationFailure):
        seed_certificate(ExtensionCertificate.from_dict(d))


def test_chain_two_steps(cert27):
    chain = advance_chain(seed_certificate(cert27), 2)
    assert chain.failure is None
    assert chain.orders == [27, 55, 111]
    assert [s.color_counts for s in chain.steps] == [(3, 4), (4, 5), (5, 6)]
    for t, s in enumerate(chain.steps):
        assert s.order == 2 ** t * 28 - 1
        assert s.verified()
    for a, b in zip(chain.steps, chain.steps[1:]):
        assert find_subsystem(b.system, range(a.order)).found
    assert verify_chain(chain)


def test_zero_steps(cert27):
    g = seed_certificate(cert27)
    chain = advance_chain(ChainRecord([g]), 0)
    assert chain.orders == [27]


def test_chain_roundtrip(cert27):
    chain = advance_chain(seed_certificate(cert27), 1)
    again = ChainRecord.from_dict(chain.to_dict())
    assert again.orders == chain.orders
    assert verify_chain(chain.to_dict())
    assert verify_chain(chain.to_dict()["steps"])


def test_chain_stops_on_bad_step(cert27):
    g = seed_certificate(cert27)
    bad = ChiGapCertificate(g.system, g.coloring_low, Coloring(g.coloring_low.colors, g.coloring_low.k + 1))
    out = advance_chain(ChainRecord([bad]), 2)
    assert out.failure and out.orders == [27]


def test_verify_chain_detects_wrong_order(cert27):
    chain = advance_chain(seed_certificate(cert27), 1)
    d = chain.to_dict()
    d["steps"] = d["steps"][1:] + d["steps"][:1]
    assert not verify_chain(d)
