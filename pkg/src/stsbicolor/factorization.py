"""1-factorizations of complete and complete bipartite graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .designs import ValidationReport
from .errors import OrderNotAdmissible, ParityError, SizeMismatch

Edge = tuple[int, int]
OneFactor = tuple[Edge, ...]


def _edge(x: int, y: int) -> Edge:
    x, y = int(x), int(y)
    return (x, y) if x < y else (y, x)


def _factor(edges: Iterable[Iterable[int]]) -> OneFactor:
    return tuple(sorted(_edge(*e) for e in edges))


@dataclass(frozen=True)
class OneFactorization:
    """An ordered list of perfect matchings of ``K_m`` on vertices ``0..m-1``."""

    m: int
    factors: tuple[OneFactor, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "factors", tuple(_factor(f) for f in self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def factor_of_edge(self) -> dict[Edge, int]:
        return {e: i for i, f in enumerate(self.factors) for e in f}

    def to_dict(self) -> dict:
        return {"m": self.m, "factors": [[list(e) for e in f] for f in self.factors]}

    @classmethod
    def from_dict(cls, data: dict) -> "OneFactorization":
        return cls(int(data["m"]), data["factors"])


@dataclass(frozen=True)
class CompleteGraph:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class BipartiteGraph:
    half_a: tuple[int, ...]
    half_b: tuple[int, ...]


@dataclass(frozen=True)
class SplitFactorization:
    """A factorization of ``K_{v+1}`` built from nested vertex blocks.

    ``layers[i]`` says which step produced factor ``i``: layer ``l`` for
    ``l < len(blocks) - 1`` means the factor crosses from block ``l`` to the
    union of the blocks after it; the last layer holds factors made only of
    within-block pairs. With two blocks this is the bipartite-then-combined
    shape used for a single pair of colors.
    """

    factorization: OneFactorization
    blocks: tuple[tuple[int, ...], ...]
    layers: tuple[int, ...]

    @property
    def half1(self) -> tuple[int, ...]:
        return self.blocks[0]

    @property
    def half2(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks[1:] for x in b)

    @property
    def bipartite_indices(self) -> tuple[int, ...]:
        return tuple(i for i, l in enumerate(self.layers) if l < len(self.blocks) - 1)

    @property
    def combined_indices(self) -> tuple[int, ...]:
        return tuple(i for i, l in enumerate(self.layers) if l == len(self.blocks) - 1)

    def layer_indices(self, layer: int) -> tuple[int, ...]:
        return tuple(i for i, l in enumerate(self.layers) if l == layer)

    def to_dict(self) -> dict:
        d = self.factorization.to_dict()
        d.update(
            half1=list(self.half1),
            half2=list(self.half2),
            bipartite_indices=list(self.bipartite_indices),
            blocks=[list(b) for b in self.blocks],
            layers=list(self.layers),
        )
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "SplitFactorization":
        f = OneFactorization.from_dict(data)
        if "blocks" in data:
            return cls(f, tuple(tuple(b) for b in data["blocks"]), tuple(data["layers"]))
        bip = set(data["bipartite_indices"])
        blocks = (tuple(data["half1"]), tuple(data["half2"]))
        return cls(f, blocks, tuple(0 if i in bip else 1 for i in range(len(f))))


def circle_factorization(m: int) -> OneFactorization:
    """Round-robin 1-factorization of ``K_m``.

    Factor ``r`` pairs vertex ``m-1`` with ``r`` and ``r+s`` with ``r-s``
    (mod ``m-1``) for ``s = 1 .. m/2 - 1``.
    """
    if m < 2 or m % 2:
        raise OrderNotAdmissible(f"K_{m} has no 1-factorization (need even m >= 2)")
    n = m - 1
    factors = []
    for r in range(n):
        f = [(r, n)]
        for s in range(1, m // 2):
            f.append(((r + s) % n, (r - s) % n))
        factors.append(f)
    return OneFactorization(m, factors)


def _circle_on(vertices: Sequence[int]) -> list[OneFactor]:
    if len(vertices) <= 1:
        return []
    base = circle_factorization(len(vertices))
    return [tuple(_edge(vertices[x], vertices[y]) for x, y in f) for f in base.factors]


def bipartite_factorization(half_a: Sequence[int], half_b: Sequence[int]) -> list[OneFactor]:
    """Cyclic 1-factorization of ``K_{m,m}``: factor ``s`` joins ``a_j`` to ``b_{j+s}``."""
    if len(half_a) != len(half_b):
        raise SizeMismatch(f"halves of sizes {len(half_a)} and {len(half_b)}")
    if set(half_a) & set(half_b):
        raise SizeMismatch("halves must be disjoint")
    m = len(half_a)
    return [_factor((half_a[j], half_b[(j + s) % m]) for j in range(m)) for s in range(m)]


def validate_factorization(f, graph: CompleteGraph | BipartiteGraph | None = None) -> ValidationReport:
    """Check that the factors partition the edges of ``graph`` into perfect matchings.

    ``f`` may be a :class:`OneFactorization` (default graph ``K_m``) or a
    plain list of factors together with an explicit ``graph``.
    """
    if isinstance(f, SplitFactorization):
        f = f.factorization
    if isinstance(f, OneFactorization):
        factors = f.factors
        if graph is None:
            graph = CompleteGraph(tuple(range(f.m)))
    else:
        factors = tuple(_factor(x) for x in f)
        if graph is None:
            raise ValueError("a graph descriptor is required for a bare factor list")

    if isinstance(graph, BipartiteGraph):
        a, b = set(graph.half_a), set(graph.half_b)
        vertices = a | b
        edges = [_edge(x, y) for x in graph.half_a for y in graph.half_b]
        expected = len(graph.half_a)
    else:
        vertices = set(graph.vertices)
        edges = [_edge(x, y) for x, y in combinations(sorted(vertices), 2)]
        expected = len(vertices) - 1
    allowed = set(edges)

    owner: dict[Edge, int] = {}
    for i, factor in enumerate(factors):
        touched: set[int] = set()
        for e in factor:
            if e not in allowed:
                return ValidationReport(False, "edge-not-in-graph", e, f"factor {i}")
            if e[0] in touched or e[1] in touched:
                return ValidationReport(False, "not-a-matching", e, f"factor {i} meets a vertex twice")
            touched.update(e)
            if e in owner:
                return ValidationReport(False, "duplicate-pair", e, f"factors {owner[e]} and {i}")
            owner[e] = i
        if touched != vertices:
            missing = min(vertices - touched)
            return ValidationReport(False, "not-perfect", (i, missing), f"factor {i} misses vertex {missing}")
    for e in edges:
        if e not in owner:
            return ValidationReport(False, "uncovered-pair", e)
    if len(factors) != expected:
        return ValidationReport(False, "factor-count", (len(factors), expected))
    return ValidationReport(True)


def _split(blocks: list[list[int]]) -> tuple[list[OneFactor], list[int]]:
    head = blocks[0]
    if len(blocks) == 2:
        tail = blocks[1]
        cross = bipartite_factorization(head, tail)
        combined = [tuple(sorted(g + h)) for g, h in zip(_circle_on(head), _circle_on(tail))]
        return cross + combined, [0] * len(cross) + [1] * len(combined)
    rest = [x for b in blocks[1:] for x in b]
    cross = bipartite_factorization(head, rest)
    deeper, deeper_layers = _split(blocks[1:])
    inner = _circle_on(head)
    combined = [tuple(sorted(g + h)) for g, h in zip(inner, deeper)]
    return cross + combined, [0] * len(cross) + [l + 1 for l in deeper_layers]


def theorem3_factorization(v: int) -> SplitFactorization:
    """Factorization of ``K_{v+1}`` for the two-color extension.

    ``Y1 = 0 .. h-1`` and ``Y2 = h .. v`` with ``h = (v+1)/2``. The first
    ``h`` factors are the cyclic bipartite factors between the halves, the
    other ``h - 1`` are ``G_i + H_i`` from circle factorizations of each
    half. Needs ``v + 1 = 0 (mod 4)``.
    """
    if v < 3 or (v + 1) % 4:
        raise OrderNotAdmissible(f"need v + 1 = 0 (mod 4), got v = {v}")
    return recursive_split_factorization(v + 1, [(v + 1) // 2, (v + 1) // 2])


def recursive_split_factorization(m: int, part_sizes: Sequence[int]) -> SplitFactorization:
    """Layered factorization of ``K_m`` over nested halving blocks.

    ``part_sizes`` must read ``m/2, m/4, ..., s, s``: every block but the
    last is as large as everything after it. Block ``l`` is crossed against
    the union of later blocks; the remaining factors pair a factor of the
    complete graph on block ``l`` with one built recursively from the rest.

    Raises:
        SizeMismatch: sizes do not sum to ``m`` or do not halve.
        ParityError: a block that needs its own 1-factorization is odd.
    """
    sizes = [int(s) for s in part_sizes]
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise SizeMismatch(f"need at least two positive block sizes, got {sizes}")
    if sum(sizes) != m:
        raise SizeMismatch(f"block sizes {sizes} sum to {sum(sizes)}, not {m}")
    if sizes[-1] != sizes[-2] or any(sizes[i] != sum(sizes[i + 1:]) for i in range(len(sizes) - 2)):
        raise SizeMismatch(f"block sizes {sizes} are not a halving sequence")
    for s in sizes[:-2]:
        if s % 2:
            raise ParityError(f"block of size {s} has no perfect matching")
    if sizes[-1] > 1 and sizes[-1] % 2:
        raise ParityError(f"innermost blocks of size {sizes[-1]} have no perfect matching")
    blocks, start = [], 0
    for s in sizes:
        blocks.append(list(range(start, start + s)))
        start += s
    factors, layers = _split(blocks)
    return SplitFactorization(
        OneFactorization(m, factors),
        tuple(tuple(b) for b in blocks),
        tuple(layers),
    )
