"""Strict bicolorings of triple systems and chromatic data."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels
from .designs import TripleSystem
from .errors import SizeMismatch

DEFAULT_BUDGET = 50_000_000

Pattern = tuple[int, ...]


@dataclass(frozen=True)
class Coloring:
    """Color index per point; ``k`` is the size of the palette."""

    colors: tuple[int, ...]
    k: int

    def __init__(self, colors: Iterable[int], k: int | None = None):
        cols = tuple(int(c) for c in colors)
        if k is None:
            k = max(cols) + 1 if cols else 0
        if any(c < 0 or c >= k for c in cols):
            raise ValueError(f"color indices must lie in 0..{k - 1}")
        object.__setattr__(self, "colors", cols)
        object.__setattr__(self, "k", int(k))

    @property
    def v(self) -> int:
        return len(self.colors)

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, point: int) -> int:
        return self.colors[point]

    def class_sizes(self) -> tuple[int, ...]:
        """Class size for each color index (not sorted)."""
        sizes = [0] * self.k
        for c in self.colors:
            sizes[c] += 1
        return tuple(sizes)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for p, c in enumerate(self.colors):
            out[c].append(p)
        return out

    def by_size(self) -> "Coloring":
        """Relabel colors so class sizes increase with the color index.

        Ties are broken by the smallest point in each class, so the result
        is unique. After relabeling, ``class_sizes()`` equals the pattern.
        """
        classes = self.classes()
        order = sorted(range(self.k), key=lambda c: (len(classes[c]), classes[c][0] if classes[c] else self.v))
        rank = {c: i for i, c in enumerate(order)}
        return Coloring([rank[c] for c in self.colors], self.k)

    def extend(self, colors: Iterable[int], k: int | None = None) -> "Coloring":
        """Append colors for new points, widening the palette if asked."""
        return Coloring(self.colors + tuple(colors), self.k if k is None else k)

    def restrict(self, v: int) -> "Coloring":
        return Coloring(self.colors[:v], self.k)

    def to_dict(self) -> dict:
        return {"v": self.v, "k": self.k, "colors": list(self.colors)}

    @classmethod
    def from_dict(cls, data: dict) -> "Coloring":
        col = cls(data["colors"], data.get("k"))
        if "v" in data and int(data["v"]) != col.v:
            raise SizeMismatch(f"coloring declares v={data['v']} but lists {col.v} colors")
        return col

    @classmethod
    def from_classes(cls, v: int, classes: Sequence[Iterable[int]]) -> "Coloring":
        colors = [-1] * v
        for c, members in enumerate(classes):
            for p in members:
                colors[p] = c
        if -1 in colors:
            raise ValueError(f"point {colors.index(-1)} is in no class")
        return cls(colors, len(classes))


def pattern_of(col: Coloring) -> Pattern:
    """Sorted class sizes ``(n_1 <= ... <= n_k)``; unused colors count as 0."""
    return tuple(sorted(col.class_sizes()))


@dataclass(frozen=True)
class BicoloringReport:
    ok: bool
    reason: str | None = None
    triple: tuple[int, int, int] | None = None
    triple_colors: tuple[int, ...] | None = None
    k: int = 0
    pattern: Pattern = ()

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "reason": self.reason,
            "triple": list(self.triple) if self.triple else None,
            "triple_colors": list(self.triple_colors) if self.triple_colors else None,
            "k": self.k,
            "pattern": list(self.pattern),
        }


def verify_bicoloring(sts: TripleSystem, col: Coloring) -> BicoloringReport:
    """Check that ``col`` is a strict ``col.k``-bicoloring of ``sts``.

    Triples are scanned in canonical order and the first bad one is
    reported; an unused color is reported only when every triple passes.
    """
    if col.v != sts.v:
        raise SizeMismatch(f"coloring has {col.v} points, system has {sts.v}")
    c = col.colors
    pattern = pattern_of(col)
    for t in sts.triples:
        seen = {c[t[0]], c[t[1]], c[t[2]]}
        if len(seen) != 2:
            reason = "monochromatic" if len(seen) == 1 else "polychromatic"
            return BicoloringReport(False, reason, t, tuple(c[x] for x in t), col.k, pattern)
    sizes = col.class_sizes()
    if 0 in sizes:
        return BicoloringReport(False, "color-unused", None, (sizes.index(0),), col.k, pattern)
    return BicoloringReport(True, None, None, None, col.k, pattern)


def _incidence(sts: TripleSystem) -> tuple[list[int], list[int]]:
    offsets = [0]
    pairs: list[int] = []
    for through in sts.triples_through():
        for q, r in through:
            pairs.extend((q, r))
        offsets.append(len(pairs) // 2)
    return offsets, pairs


@dataclass
class EnumerationResult:
    """Patterns realized by strict k-bicolorings, one canonical witness each.

    ``complete`` is False when the node budget ran out; the patterns listed
    are then only those found so far.
    """

    k: int
    witnesses: dict[Pattern, Coloring] = field(default_factory=dict)
    complete: bool = True
    nodes: int = 0

    @property
    def patterns(self) -> set[Pattern]:
        return set(self.witnesses)

    @property
    def status(self) -> str:
        return "complete" if self.complete else "budget-exhausted"


def _search(sts: TripleSystem, k: int, budget: int, mode: int, target: Pattern | None):
    offsets, pairs = _incidence(sts)
    return kernels.bicolor_search(sts.v, k, offsets, pairs, budget, mode, target)


def enumerate_bicolorings(sts: TripleSystem, k: int, budget: int = DEFAULT_BUDGET) -> EnumerationResult:
    """All patterns of strict k-bicolorings of ``sts``.

    Point 0 takes color 0 and colors first appear in increasing order, so
    each coloring is met once up to relabeling; the witness stored for a
    pattern is the lexicographically least such coloring.
    """
    if k < 1:
        raise ValueError("k must be positive")
    status, found, nodes = _search(sts, k, budget, 0, None)
    res = EnumerationResult(k, complete=status != kernels.BUDGET, nodes=nodes)
    for pattern, colors in found:
        res.witnesses[tuple(pattern)] = Coloring(colors, k)
    return res


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # "found" | "exhausted" | "budget-exhausted"
    coloring: Coloring | None
    nodes: int


def find_bicoloring(
    sts: TripleSystem, k: int, pattern: Sequence[int] | None = None, budget: int = DEFAULT_BUDGET
) -> SearchOutcome:
    """First strict k-bicoloring of ``sts`` (with the given pattern, if any)."""
    target = tuple(sorted(pattern)) if pattern is not None else None
    if target is not None and (len(target) != k or sum(target) != sts.v):
        return SearchOutcome("exhausted", None, 0)
    status, found, nodes = _search(sts, k, budget, 1 if target is None else 2, target)
    if status == kernels.FOUND:
        return SearchOutcome("found", Coloring(found[-1][1], k), nodes)
    return SearchOutcome("exhausted" if status == kernels.EXHAUSTED else "budget-exhausted", None, nodes)


def max_colors_bound(v: int) -> int:
    """Largest k with ``2**k - 1 <= v``; no STS(v) has a strict bicoloring with more colors."""
    if v < 1:
        raise ValueError("order must be positive")
    return (v + 1).bit_length() - 1


@dataclass
class ChromaticBounds:
    """Interval bounds on the lower and upper chromatic numbers.

    ``chi`` and ``chi_bar`` are set only when the corresponding interval has
    closed. ``colorable`` is None while undecided.
    """

    v: int
    chi_range: tuple[int, int]
    chi_bar_range: tuple[int, int]
    colorable: bool | None
    witnesses: dict[int, Coloring]
    complete: bool
    notes: list[str] = field(default_factory=list)

    @property
    def chi(self) -> int | None:
        lo, hi = self.chi_range
        return lo if lo == hi else None

    @property
    def chi_bar(self) -> int | None:
        lo, hi = self.chi_bar_range
        return lo if lo == hi else None

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "chi": self.chi,
            "chi_bar": self.chi_bar,
            "chi_range": list(self.chi_range),
            "chi_bar_range": list(self.chi_bar_range),
            "colorable": self.colorable,
            "complete": self.complete,
            "witnesses": {str(k): c.to_dict() for k, c in sorted(self.witnesses.items())},
            "notes": self.notes,
        }


def chromatic_bounds(
    sts: TripleSystem,
    budget: int = DEFAULT_BUDGET,
    witnesses: Iterable[Coloring] = (),
) -> ChromaticBounds:
    """Lower and upper chromatic numbers, exact where the budget allows.

    Known bicolorings in ``witnesses`` are verified and used instead of
    searching for their color counts. The remaining counts are searched
    from both ends; a search that runs out of budget leaves an interval.
    """
    bound = max_colors_bound(sts.v)
    have: dict[int, Coloring] = {}
    notes: list[str] = []
    for w in witnesses:
        if verify_bicoloring(sts, w):
            have.setdefault(w.k, w)
        else:
            notes.append(f"ignored a {w.k}-coloring that is not a strict bicoloring")
    status: dict[int, str] = {k: "found" for k in have}
    remaining = budget

    def decide(k: int) -> str:
        nonlocal remaining
        if k not in status:
            if remaining <= 0:
                status[k] = "budget-exhausted"
            else:
                out = find_bicoloring(sts, k, budget=remaining)
                remaining -= out.nodes
                status[k] = out.status
                if out.coloring is not None:
                    have[k] = out.coloring
        return status[k]

    # lower chromatic number: smallest k with a bicoloring
    chi_lo, chi_hi = 2, bound
    exact_low = True
    for k in range(2, bound + 1):
        st = decide(k)
        if st == "found":
            chi_hi = min(chi_hi, k)
            break
        if st == "exhausted" and exact_low:
            chi_lo = k + 1
        else:
            exact_low = False
    # upper chromatic number: largest k with a bicoloring
    bar_lo, bar_hi = 2, bound
    exact_high = True
    for k in range(bound, 1, -1):
        st = decide(k)
        if st == "found":
            bar_lo = max(bar_lo, k)
            break
        if st == "exhausted" and exact_high:
            bar_hi = k - 1
        else:
            exact_high = False
    if have:
        bar_lo = max(bar_lo, max(have))
        chi_hi = min(chi_hi, min(have))

    if have:
        colorable: bool | None = True
    elif all(status.get(k) == "exhausted" for k in range(2, bound + 1)):
        colorable = False
        notes.append("uncolorable: no strict bicoloring with any admissible number of colors")
    else:
        colorable = None
    if colorable is False:
        chi_range = bar_range = (0, 0)
    else:
        chi_range = (chi_lo, chi_hi)
        bar_range = (bar_lo, bar_hi)
    complete = colorable is False or (chi_range[0] == chi_range[1] and bar_range[0] == bar_range[1])
    return ChromaticBounds(sts.v, chi_range, bar_range, colorable, dict(sorted(have.items())), complete, notes)


@dataclass(frozen=True)
class IndependenceResult:
    v: int
    alpha: int
    independent_set: tuple[int, ...]
    complete: bool
    nodes: int

    @property
    def implies_uncolorable(self) -> bool:
        """``alpha <= v/3`` rules out every bicoloring (only meaningful when complete)."""
        return self.complete and 3 * self.alpha <= self.v

    def to_dict(self) -> dict:
        return {
            "v": self.v,
            "alpha": self.alpha,
            "independent_set": list(self.independent_set),
            "complete": self.complete,
            "implies_uncolorable": self.implies_uncolorable,
        }


def independence_number(sts: TripleSystem, budget: int = DEFAULT_BUDGET) -> IndependenceResult:
    """Largest point set containing no whole triple, by branch and bound."""
    v = sts.v
    through = sts.triples_through()
    chosen = [False] * v
    forbidden = [0] * v
    best: list[int] = []
    current: list[int] = []
    nodes = 0
    complete = True

    def rec(p: int) -> None:
        nonlocal nodes, best, complete
        if not complete:
            return
        nodes += 1
        if nodes > budget:
            complete = False
            return
        if len(current) + (v - p) <= len(best):
            return
        if p == v:
            best = list(current)
            return
        if forbidden[p] == 0:
            chosen[p] = True
            current.append(p)
            touched = []
            for q, r in through[p]:
                # q chosen -> r now forbidden, and vice versa
                if chosen[q] and r > p:
                    forbidden[r] += 1
                    touched.append(r)
                elif chosen[r] and q > p:
                    forbidden[q] += 1
                    touched.append(q)
            rec(p + 1)
            for r in touched:
                forbidden[r] -= 1
            current.pop()
            chosen[p] = False
        rec(p + 1)

    rec(0)
    return IndependenceResult(v, len(best), tuple(best), complete, nodes)
