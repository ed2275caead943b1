import json

import pytest

from stsbicolor.cli import main


def run(capsys, *argv):
    code = main(list(argv) + ["--quiet"])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_solve_eq1(capsys):
    code, data = run(capsys, "solve-eq1", "--v", "9", "--pattern", "1,4,4")
    assert code == 0 and len(data["solutions"]) == 6


def test_solve_eq1_filters(capsys):
    code, data = run(capsys, "solve-eq1", "--v", "13", "--pattern", "2,5,6", "--filter", "counting")
    assert code == 0
    assert sorted(map(tuple, data["survivors"])) == [(4, 4, 6), (7, 1, 6)]
    code, data = run(capsys, "solve-eq1", "--v", "9", "--pattern", "1,4,4", "--filter", "corollary2")
    assert data["survivors"] == [[3, 2, 5], [3, 5, 2]]


def test_solve_eq1_bad_input(capsys):
    assert main(["solve-eq1", "--v", "10", "--pattern", "1,4,4", "--quiet"]) == 5
    assert main(["solve-eq1", "--pattern", "a,b"]) == 5
    assert main(["bogus"]) == 5


def test_eligible(capsys):
    code, data = run(capsys, "eligible", "--v", "51", "--pattern", "1,2,8,16,24")
    assert [p["sizes"] for p in data["pairs"]] == [[2, 24]]


def test_construct_and_verify(capsys, tmp_path):
    out = tmp_path / "s.json"
    assert main(["construct", "bose", "--v", "15", "--output", str(out), "--quiet"]) == 0
    assert main(["verify", "sts", "--input", str(out), "--quiet"]) == 0
    data = json.loads(out.read_text())
    data["triples"][0] = data["triples"][1]
    out.write_text(json.dumps(data))
    assert main(["verify", "sts", "--input", str(out), "--quiet"]) == 2
    assert main(["construct", "skolem", "--v", "11", "--quiet"]) == 5


def test_construct_double(capsys):
    code, data = run(capsys, "construct", "double", "--fixture", "fano")
    assert code == 0 and data["v"] == 15


def test_extend_search_exhausted(capsys):
    code, data = run(capsys, "extend", "search", "--fixture", "sts9", "--coloring", "1,4,4", "--solution", "3,2,5")
    assert code == 3 and data["status"] == "exhausted"


def test_extend_search_budget(capsys):
    code, data = run(
        capsys, "extend", "search", "--fixture", "cyclic13", "--coloring", "2,5,6", "--solution", "4,4,6", "--budget", "2"
    )
    assert code == 4


def test_extend_search_found_and_verify(capsys, tmp_path):
    out = tmp_path / "cert.json"
    code = main(["extend", "search", "--fixture", "cyclic13", "--coloring", "2,5,6", "--solution", "4,4,6",
                 "--output", str(out), "--quiet"])
    assert code == 0
    cert = json.loads(out.read_text())
    assert cert["extended_pattern"] == [6, 9, 12]
    assert main(["verify", "certificate", "--input", str(out), "--quiet"]) == 0
    cert["extended_coloring"]["colors"][20] = (cert["extended_coloring"]["colors"][20] + 1) % 3
    out.write_text(json.dumps(cert))
    assert main(["verify", "certificate", "--input", str(out), "--quiet"]) == 2


def test_extend_theorem3(capsys):
    code, data = run(capsys, "extend", "theorem3", "--fixture", "example12", "--colors", "0,1")
    assert code == 0 and data["extended_pattern"] == [9, 14, 16]
    assert main(["extend", "theorem3", "--fixture", "example12", "--colors", "0,2", "--quiet"]) == 5


def test_extend_theorem4(capsys):
    code, data = run(capsys, "extend", "theorem4", "--fixture", "example12", "--colors", "0,1")
    assert code == 0 and data["extended_pattern"] == [9, 14, 16]


def test_verify_coloring(capsys):
    assert main(["verify", "coloring", "--fixture", "example12", "--quiet"]) == 0
    bad = ",".join(["0"] * 19)
    assert main(["verify", "coloring", "--fixture", "example12", "--coloring", bad, "--quiet"]) == 2


def test_chromatic(capsys):
    code, data = run(capsys, "chromatic", "--fixture", "fano")
    assert code == 0
    assert data["chromatic"]["chi"] == data["chromatic"]["chi_bar"] == 3
    assert data["independence"]["alpha"] == 4


def test_fixtures(capsys):
    code, data = run(capsys, "fixtures", "example12")
    assert len(data["system"]["triples"]) == 57 and data["subsystem"] == [0, 1, 2, 3, 9, 10, 15]
    code, data = run(capsys, "fixtures", "theorem9_table")
    assert len(data["rows"]) == 14
    assert main(["fixtures", "nope", "--quiet"]) == 5


def test_chain(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    main(["extend", "search", "--fixture", "cyclic13", "--coloring", "2,5,6", "--solution", "4,4,6",
          "--output", str(cert), "--quiet"])
    chain = tmp_path / "chain.json"
    assert main(["chain", "--input", str(cert), "--steps", "2", "--output", str(chain), "--quiet"]) == 0
    assert [s["order"] for s in json.loads(chain.read_text())["steps"]] == [27, 55, 111]
    assert main(["verify", "chain", "--input", str(chain), "--quiet"]) == 0


def test_reproduce_theorem5(capsys):
    code, data = run(capsys, "reproduce", "theorem5", "--solution", "4,4,6")
    assert code == 0 and data["pass"]
    assert data["data"]["certificate"]["extended_pattern"] == [6, 9, 12]


@pytest.mark.parametrize("case", ["sts9", "sts13", "example12", "theorem6", "sts45-solutions",
                                  "theorem8-patterns", "theorem9-table", "corollary11"])
def test_reproduce_cases_pass(capsys, case):
    code, data = run(capsys, "reproduce", case)
    assert code == 0 and data["pass"]


def test_reproduce_is_deterministic(capsys):
    _, a = run(capsys, "reproduce", "theorem5")
    _, b = run(capsys, "reproduce", "theorem5")
    assert json.dumps(a) == json.dumps(b)


def test_reproduce_unknown(capsys):
    assert main(["reproduce", "nope", "--quiet"]) == 5


def test_summary_goes_to_stderr(capsys):
    main(["solve-eq1", "--v", "9", "--pattern", "1,4,4"])
    captured = capsys.readouterr()
    assert "6 solutions" in captured.err
    json.loads(captured.out)
