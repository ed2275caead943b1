"""Built-in systems, colorings and pattern tables."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import Coloring
from .designs import TripleSystem, cyclic_sts

FANO = TripleSystem(7, [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)])

# lines of AG(2, 3), point (x, y) -> 3x + y
STS9 = TripleSystem(
    9,
    [
        (0, 1, 2), (3, 4, 5), (6, 7, 8),
        (0, 3, 6), (1, 4, 7), (2, 5, 8),
        (0, 4, 8), (1, 5, 6), (2, 3, 7),
        (0, 5, 7), (1, 3, 8), (2, 4, 6),
    ],
)

CYCLIC13 = cyclic_sts(13, [(0, 1, 4), (0, 2, 7)])

# STS(19) with a sub-STS(7) on {0, 1, 2, 3, 9, 10, 15}
EXAMPLE12 = TripleSystem(
    19,
    [
        (0, 1, 9), (2, 3, 9), (0, 2, 10), (1, 3, 10), (0, 3, 15), (1, 2, 15), (9, 10, 15),
        (0, 4, 11), (0, 5, 12), (0, 6, 13), (0, 7, 14), (0, 8, 16),
        (1, 4, 12), (1, 5, 11), (1, 6, 14), (1, 7, 13), (1, 8, 17),
        (2, 4, 13), (2, 5, 14), (2, 6, 11), (2, 7, 12), (2, 8, 18),
        (3, 4, 14), (3, 5, 16), (3, 6, 17), (3, 7, 18), (3, 8, 11),
        (4, 5, 9), (4, 6, 18), (4, 7, 16), (4, 8, 10),
        (5, 6, 10), (5, 7, 17), (5, 8, 13),
        (6, 7, 9), (6, 8, 12), (7, 8, 15),
        (9, 11, 16), (9, 12, 17), (9, 13, 18), (8, 9, 14),
        (7, 10, 11), (10, 12, 16), (10, 13, 17), (10, 14, 18),
        (11, 12, 18), (11, 13, 15), (11, 14, 17),
        (3, 12, 13), (12, 14, 15), (13, 14, 16),
        (6, 15, 16), (4, 15, 17), (5, 15, 18),
        (2, 16, 17), (1, 16, 18), (0, 17, 18),
    ],
)
EXAMPLE12_SUBSYSTEM = (0, 1, 2, 3, 9, 10, 15)
EXAMPLE12_COLORING = Coloring.from_classes(
    19, [range(15, 19), range(9, 15), range(0, 9)]
)


@dataclass(frozen=True)
class Theorem9Row:
    """One row of the table of extendable colorings of an STS(v).

    ``order`` is the doubled order ``2v + 1``; ``pair`` is the two class
    sizes that sum to ``(v + 1) / 2``.
    """

    order: int
    pattern: tuple[int, ...]
    pair: tuple[int, int]

    @property
    def v(self) -> int:
        return (self.order - 1) // 2


THEOREM9_TABLE: tuple[Theorem9Row, ...] = (
    Theorem9Row(103, (1, 2, 8, 16, 24), (2, 24)),
    Theorem9Row(111, (1, 2, 8, 20, 24), (8, 20)),
    Theorem9Row(127, (2, 14, 18, 29), (14, 18)),
    Theorem9Row(127, (4, 9, 22, 28), (4, 28)),
    Theorem9Row(127, (2, 5, 6, 20, 30), (2, 30)),
    Theorem9Row(135, (1, 2, 16, 16, 32), (2, 32)),
    Theorem9Row(151, (4, 12, 26, 33), (12, 26)),
    Theorem9Row(151, (1, 4, 10, 28, 32), (10, 28)),
    Theorem9Row(159, (4, 14, 25, 36), (4, 36)),
    Theorem9Row(159, (6, 10, 29, 34), (6, 34)),
    Theorem9Row(159, (1, 4, 12, 26, 36), (4, 36)),
    Theorem9Row(159, (1, 2, 16, 24, 36), (16, 24)),
    Theorem9Row(175, (4, 17, 26, 40), (4, 40)),
    Theorem9Row(175, (2, 5, 10, 34, 36), (10, 34)),
)


def sts(name: str) -> TripleSystem:
    try:
        return SYSTEMS[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(SYSTEMS)}") from None


SYSTEMS: dict[str, TripleSystem] = {
    "fano": FANO,
    "sts9": STS9,
    "cyclic13": CYCLIC13,
    "example12": EXAMPLE12,
}

COLORINGS: dict[str, Coloring] = {"example12": EXAMPLE12_COLORING}


def dump(name: str) -> dict:
    """JSON-ready description of one fixture."""
    if name == "theorem9_table":
        return {
            "name": name,
            "rows": [
                {"order": r.order, "v": r.v, "pattern": list(r.pattern), "pair": list(r.pair)}
                for r in THEOREM9_TABLE
            ],
        }
    out = {"name": name, "system": sts(name).to_dict()}
    if name in COLORINGS:
        out["coloring"] = COLORINGS[name].to_dict()
    if name == "example12":
        out["subsystem"] = list(EXAMPLE12_SUBSYSTEM)
    return out


NAMES = tuple(sorted(SYSTEMS)) + ("theorem9_table",)
