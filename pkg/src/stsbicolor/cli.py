"""Command-line interface.

JSON goes to stdout (or ``--output``); a short summary goes to stderr
unless ``--quiet``. Exit codes: 0 success, 2 validation failure, 3 search
exhausted, 4 budget exhausted or undecided, 5 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import fixtures
from .chain import ChainRecord, advance_chain, seed_certificate, verify_chain
from .coloring import Coloring, chromatic_bounds, independence_number, verify_bicoloring
from .designs import TripleSystem, bose_construction, double, skolem_construction, validate_sts
from .errors import ConstructionUnverified, InstanceTooLarge, STSError, VerificationFailure
from .extension import (
    DEFAULT_BUDGET,
    ExtensionCertificate,
    counting_filter,
    enumerate_eq1_solutions,
    filter_corollary2,
    search_extension,
    split_pattern,
    theorem3_eligible,
    theorem3_extend,
    theorem4_extend,
    verify_certificate,
)
from .factorization import OneFactorization, SplitFactorization, circle_factorization, validate_factorization
from .reproduce import ALIASES, CASES, coloring_with_sizes, reproduce_case

OK, INVALID, EXHAUSTED, BUDGET, BAD_INPUT = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(BAD_INPUT, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _system(args) -> TripleSystem:
    if getattr(args, "fixture", None):
        return fixtures.sts(args.fixture)
    if getattr(args, "input", None):
        data = _load_json(args.input)
        return TripleSystem.from_dict(data.get("system", data))
    raise UsageError("give --fixture or --input")


def _coloring(args, sts: TripleSystem) -> Coloring:
    """From an explicit per-point list, a JSON file, a fixture, or a pattern to search for."""
    if getattr(args, "coloring_file", None):
        data = _load_json(args.coloring_file)
        return Coloring.from_dict(data.get("coloring", data))
    given = getattr(args, "coloring", None)
    if given is not None:
        if len(given) == sts.v:
            return Coloring(given)
        col = coloring_with_sizes(sts, given)
        if col is None:
            raise UsageError(f"no strict bicoloring with class sizes {given}")
        return col
    if getattr(args, "fixture", None) in fixtures.COLORINGS:
        return fixtures.COLORINGS[args.fixture]
    raise UsageError("give --coloring or --coloring-file")


def _emit(args, payload, summary: str) -> None:
    text = json.dumps(payload, indent=2, sort_keys=False)
    if getattr(args, "output", None):
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    if not getattr(args, "quiet", False):
        print(summary, file=sys.stderr)


# --------------------------------------------------------------------------


def cmd_construct(args) -> int:
    if args.kind in ("bose", "skolem") and args.v is None:
        raise UsageError(f"{args.kind} needs --v")
    if args.kind == "bose":
        sts = bose_construction(args.v)
    elif args.kind == "skolem":
        sts = skolem_construction(args.v)
    else:
        base = _system(args)
        if args.factorization:
            f = OneFactorization.from_dict(_load_json(args.factorization))
        else:
            f = circle_factorization(base.v + 1)
        sts = double(base, f, args.assoc)
    _emit(args, sts.to_dict(), f"STS({sts.v}) with {len(sts)} triples")
    return OK


def cmd_verify(args) -> int:
    what = args.what
    if what == "sts":
        report = validate_sts(_system(args))
        ok, payload = report.valid, report.to_dict()
    elif what == "factorization":
        data = _load_json(args.input)
        f = SplitFactorization.from_dict(data) if "layers" in data or "half1" in data else OneFactorization.from_dict(data)
        report = validate_factorization(f)
        ok, payload = report.valid, report.to_dict()
    elif what == "coloring":
        sts = _system(args)
        rep = verify_bicoloring(sts, _coloring(args, sts))
        ok, payload = rep.ok, rep.to_dict()
    elif what == "certificate":
        rep = verify_certificate(_load_json(args.input))
        ok, payload = rep.ok, rep.to_dict()
    else:
        rep = verify_chain(_load_json(args.input))
        ok, payload = rep.ok, rep.to_dict()
    _emit(args, payload, f"{what}: {'valid' if ok else 'INVALID'}")
    return OK if ok else INVALID


def cmd_solve_eq1(args) -> int:
    n = args.pattern
    v = args.v if args.v is not None else sum(n)
    if sum(n) != v:
        raise UsageError(f"pattern {n} sums to {sum(n)}, not v = {v}")
    sols = enumerate_eq1_solutions(v, n)
    payload: dict = {"v": v, "pattern": list(n), "solutions": [list(c) for c in sols]}
    code = OK
    if args.filter in ("corollary2", "counting"):
        f = filter_corollary2(sols, n, v)
        payload["corollary2"] = f.to_dict()
        survivors = f.survivors
        if args.filter == "counting":
            verdicts = {}
            kept = []
            for c in survivors:
                try:
                    verdict = counting_filter(c, n, v)
                    verdicts[str(list(c))] = verdict.to_dict()
                    if verdict.feasible:
                        kept.append(c)
                except InstanceTooLarge as exc:
                    verdicts[str(list(c))] = {"feasible": None, "reason": f"not decided: {exc}"}
                    kept.append(c)
                    code = BUDGET
            payload["counting"] = verdicts
            survivors = kept
        payload["survivors"] = [list(c) for c in survivors]
    _emit(args, payload, f"{len(sols)} solutions" + (f", {len(payload['survivors'])} survive" if args.filter else ""))
    return code


def cmd_eligible(args) -> int:
    n = args.pattern
    v = args.v if args.v is not None else sum(n)
    pairs = theorem3_eligible(n, v)
    payload = {
        "v": v,
        "pattern": list(n),
        "pairs": [
            {"colors": [i, j], "sizes": [n[i], n[j]], "extended_pattern": list(split_pattern(n, v, i, j))}
            for i, j in pairs
        ],
    }
    _emit(args, payload, f"{len(pairs)} eligible pair(s)")
    return OK


def cmd_extend(args) -> int:
    sts = _system(args)
    col = _coloring(args, sts)
    if args.method == "theorem3":
        if not args.colors or len(args.colors) != 2:
            raise UsageError("theorem3 needs --colors i,j")
        cert = theorem3_extend(sts, col, *args.colors)
    elif args.method == "theorem4":
        if not args.colors:
            raise UsageError("theorem4 needs --colors k1,k2,...")
        cert = theorem4_extend(sts, col, args.colors)
    else:
        if not args.solution:
            raise UsageError("search needs --solution c1,c2,...")
        res = search_extension(sts, col, args.solution, args.budget, args.jobs)
        payload = res.to_dict()
        if res.status != "found":
            _emit(args, payload, f"search {res.status} after {res.search.nodes} nodes")
            return EXHAUSTED if res.status == "exhausted" else BUDGET
        cert = res.certificate
    _emit(args, cert.to_dict(), f"STS({cert.doubled.v}) with extended pattern {cert.extended_pattern}")
    return OK


def cmd_chromatic(args) -> int:
    sts = _system(args)
    known = [fixtures.COLORINGS[args.fixture]] if getattr(args, "fixture", None) in fixtures.COLORINGS else []
    bounds = chromatic_bounds(sts, args.budget, known)
    alpha = independence_number(sts, args.budget)
    payload = {"chromatic": bounds.to_dict(), "independence": alpha.to_dict()}
    _emit(args, payload, f"chi in {bounds.chi_range}, chi_bar in {bounds.chi_bar_range}, alpha = {alpha.alpha}")
    return OK if bounds.complete and alpha.complete else BUDGET


def cmd_chain(args) -> int:
    data = _load_json(args.input)
    if data.get("kind") == "chain" or isinstance(data, list):
        record = ChainRecord.from_dict(data)
    else:
        record = ChainRecord([seed_certificate(ExtensionCertificate.from_dict(data))])
    out = advance_chain(record, args.steps)
    _emit(args, out.to_dict(), f"orders {out.orders}" + (f"; stopped: {out.failure}" if out.failure else ""))
    return INVALID if out.failure else OK


def cmd_fixtures(args) -> int:
    if args.name is None:
        _emit(args, {"fixtures": list(fixtures.NAMES)}, ", ".join(fixtures.NAMES))
        return OK
    if args.name not in fixtures.NAMES:
        raise UsageError(f"unknown fixture {args.name!r}; choose from {list(fixtures.NAMES)}")
    _emit(args, fixtures.dump(args.name), args.name)
    return OK


def cmd_reproduce(args) -> int:
    if args.case in (None, "list"):
        _emit(args, {"cases": sorted(CASES), "aliases": ALIASES}, ", ".join(sorted(CASES)))
        return OK
    names = sorted(CASES) if args.case == "all" else [args.case]
    reports = []
    for name in names:
        kwargs = {"budget": args.budget, "jobs": args.jobs}
        if args.solution and ALIASES.get(name, name) == "theorem5":
            kwargs["solution"] = args.solution
        try:
            reports.append(reproduce_case(name, **kwargs))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}")
        for c in r.checks:
            lines.append(f"  [{'ok' if c.passed else 'XX'}] {c.name}: expected {c.expected!r}, got {c.actual!r}")
        lines.extend(f"  note: {n}" for n in r.notes)
    payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
    _emit(args, payload, "\n".join(lines))
    if all(r.passed for r in reports):
        return OK
    if any(r.status == "budget-exhausted" for r in reports):
        return BUDGET
    return INVALID


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node budget")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for search")
    common.add_argument("--quiet", action="store_true", help="no summary on stderr")
    common.add_argument("--output", help="write JSON here instead of stdout")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--fixture", choices=sorted(fixtures.SYSTEMS))
    source.add_argument("--input", help="JSON file with a system (or a certificate/chain where relevant)")
    source.add_argument("--coloring", type=_ints, help="per-point colors, or class sizes to search for")
    source.add_argument("--coloring-file", help="JSON coloring file")

    p = _Parser(prog="stsbicolor", description="Bicolorings of Steiner triple systems under doubling.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common, source], help="build an STS")
    c.add_argument("kind", choices=["bose", "skolem", "double"])
    c.add_argument("--v", type=int)
    c.add_argument("--factorization", help="JSON 1-factorization for double (default: circle method)")
    c.add_argument("--assoc", type=_ints, help="factor index per base point (default: identity)")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("verify", parents=[common, source], help="check an object from raw data")
    c.add_argument("what", choices=["sts", "factorization", "coloring", "certificate", "chain"])
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("solve-eq1", parents=[common], help="enumerate new-point count vectors")
    c.add_argument("--v", type=int)
    c.add_argument("--pattern", type=_ints, required=True, help="class sizes by color")
    c.add_argument("--filter", choices=["corollary2", "counting"])
    c.set_defaults(func=cmd_solve_eq1)

    c = sub.add_parser("eligible", parents=[common], help="color pairs for the two-color extension")
    c.add_argument("--v", type=int)
    c.add_argument("--pattern", type=_ints, required=True)
    c.set_defaults(func=cmd_eligible)

    c = sub.add_parser("extend", parents=[common, source], help="extend a bicoloring to a doubling")
    c.add_argument("method", choices=["theorem3", "theorem4", "search"])
    c.add_argument("--colors", type=_ints, help="color indices for theorem3/theorem4")
    c.add_argument("--solution", type=_ints, help="new-point counts by color for search")
    c.set_defaults(func=cmd_extend)

    c = sub.add_parser("chromatic", parents=[common, source], help="chromatic numbers and independence number")
    c.set_defaults(func=cmd_chromatic)

    c = sub.add_parser("chain", parents=[common], help="extend a certificate into a doubling chain")
    c.add_argument("--input", required=True, help="extension certificate or chain JSON")
    c.add_argument("--steps", type=int, default=3)
    c.set_defaults(func=cmd_chain)

    c = sub.add_parser("fixtures", parents=[common], help="dump a built-in fixture")
    c.add_argument("name", nargs="?")
    c.set_defaults(func=cmd_fixtures)

    c = sub.add_parser("reproduce", parents=[common], help="run a named case analysis")
    c.add_argument("case", nargs="?", help="case name, 'all' or 'list'")
    c.add_argument("--solution", type=_ints)
    c.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT
    except (VerificationFailure, ConstructionUnverified) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return INVALID
    except InstanceTooLarge as exc:
        print(f"not decided: {exc}", file=sys.stderr)
        return BUDGET
    except (STSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


def run_command(argv: Sequence[str]) -> int:
    return main(argv)


if __name__ == "__main__":
    sys.exit(main())
