"""Chains of doublings carrying a k- and a (k+1)-bicoloring side by side.

Each step doubles the current system with the circle factorization and the
identity association and gives both colorings one fresh class on the new
points, so every step keeps two strict bicolorings with consecutive color
counts: ``chi <= k < k + 1 <= chi_bar``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, verify_bicoloring
from .designs import TripleSystem, double, find_subsystem, validate_sts
from .errors import VerificationFailure
from .extension import ExtensionCertificate, VerificationReport, new_class_coloring, verify_certificate
from .factorization import circle_factorization

DEFAULT_STEPS = 3


@dataclass(frozen=True)
class ChiGapCertificate:
    """One system with strict k- and (k+1)-bicolorings."""

    system: TripleSystem
    coloring_low: Coloring
    coloring_high: Coloring
    provenance: tuple[str, str] = ("", "")

    @property
    def order(self) -> int:
        return self.system.v

    @property
    def color_counts(self) -> tuple[int, int]:
        return self.coloring_low.k, self.coloring_high.k

    def check(self) -> list[tuple[str, bool, str]]:
        out = []
        r = validate_sts(self.system)
        out.append(("system-is-sts", r.valid, r.reason or ""))
        for label, col in (("low", self.coloring_low), ("high", self.coloring_high)):
            rep = verify_bicoloring(self.system, col)
            out.append((f"{label}-coloring-strict", rep.ok, rep.reason or ""))
        lo, hi = self.color_counts
        out.append(("consecutive-color-counts", hi == lo + 1, f"{lo} and {hi}"))
        return out

    def verified(self) -> bool:
        return all(ok for _, ok, _ in self.check())

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "system": self.system.to_dict(),
            "coloring_low": self.coloring_low.to_dict(),
            "coloring_high": self.coloring_high.to_dict(),
            "pattern_low": sorted(self.coloring_low.class_sizes()),
            "pattern_high": sorted(self.coloring_high.class_sizes()),
            "provenance": {"low": self.provenance[0], "high": self.provenance[1]},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChiGapCertificate":
        prov = data.get("provenance", {})
        return cls(
            TripleSystem.from_dict(data["system"]),
            Coloring.from_dict(data["coloring_low"]),
            Coloring.from_dict(data["coloring_high"]),
            (prov.get("low", ""), prov.get("high", "")),
        )


@dataclass
class ChainRecord:
    steps: list[ChiGapCertificate] = field(default_factory=list)
    failure: str | None = None

    @property
    def orders(self) -> list[int]:
        return [s.order for s in self.steps]

    def to_dict(self) -> dict:
        return {"kind": "chain", "steps": [s.to_dict() for s in self.steps], "failure": self.failure}

    @classmethod
    def from_dict(cls, data) -> "ChainRecord":
        if isinstance(data, list):
            return cls([ChiGapCertificate.from_dict(s) for s in data])
        return cls([ChiGapCertificate.from_dict(s) for s in data["steps"]], data.get("failure"))


def seed_certificate(ext: ExtensionCertificate) -> ChiGapCertificate:
    """Pair the extended coloring of ``ext`` with the fresh-class coloring of the same doubling."""
    report = verify_certificate(ext)
    if not report:
        raise VerificationFailure(f"extension certificate fails {report.failed()}")
    high = new_class_coloring(ext.base, ext.base_coloring, ext.factorization, ext.association)
    if high.system != ext.doubled:
        raise VerificationFailure("fresh-class coloring was built on a different system")
    gap = ChiGapCertificate(ext.doubled, ext.extended, high.coloring, ("extended", "new-class"))
    bad = [name for name, ok, _ in gap.check() if not ok]
    if bad:
        raise VerificationFailure(f"seed fails {bad}")
    return gap


def advance_chain(record: ChainRecord | ChiGapCertificate, steps: int = DEFAULT_STEPS) -> ChainRecord:
    """Append ``steps`` doublings to the chain.

    A failed check stops the chain; the steps built so far are returned
    with ``failure`` naming the order that failed.
    """
    if isinstance(record, ChiGapCertificate):
        record = ChainRecord([record])
    if not record.steps:
        raise VerificationFailure("empty chain")
    out = ChainRecord(list(record.steps), record.failure)
    last = out.steps[-1]
    if not last.verified():
        out.failure = f"step at order {last.order} does not verify"
        return out
    for _ in range(steps):
        w = last.order
        system = double(last.system, circle_factorization(w + 1))
        low = last.coloring_low.extend([last.coloring_low.k] * (w + 1), last.coloring_low.k + 1)
        high = last.coloring_high.extend([last.coloring_high.k] * (w + 1), last.coloring_high.k + 1)
        nxt = ChiGapCertificate(system, low, high, ("new-class", "new-class"))
        bad = [name for name, ok, _ in nxt.check() if not ok]
        if bad:
            out.failure = f"order {system.v}: {bad}"
            return out
        out.steps.append(nxt)
        last = nxt
    return out


def verify_chain(record: ChainRecord | dict | list) -> VerificationReport:
    """Re-check every step and the links between consecutive steps."""
    if not isinstance(record, ChainRecord):
        record = ChainRecord.from_dict(record)
    checks: list[tuple[str, bool, str]] = []
    if not record.steps:
        return VerificationReport(False, [("nonempty", False, "no steps")])
    base = record.steps[0].order
    for t, step in enumerate(record.steps):
        for name, ok, detail in step.check():
            checks.append((f"step{t}:{name}", ok, detail))
        want = (1 << t) * (base + 1) - 1
        checks.append((f"step{t}:order", step.order == want, f"{step.order}, expected {want}"))
        if t:
            prev = record.steps[t - 1]
            if prev.order >= step.order:
                checks.append((f"step{t}:contains-previous", False, f"order {step.order} after {prev.order}"))
                continue
            sub = find_subsystem(step.system, range(prev.order))
            same = sub.found and sub.witness.reindexed() == prev.system
            checks.append((f"step{t}:contains-previous", same, sub.reason))
            checks.append((
                f"step{t}:colorings-restrict",
                step.coloring_low.colors[: prev.order] == prev.coloring_low.colors
                and step.coloring_high.colors[: prev.order] == prev.coloring_high.colors,
                "",
            ))
    return VerificationReport(all(ok for _, ok, _ in checks), checks)
