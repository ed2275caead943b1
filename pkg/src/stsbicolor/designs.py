"""Steiner triple systems: representation, validation, constructions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidFactorization, OrderNotAdmissible, SizeMismatch


Triple = tuple[int, int, int]


def _canonical(triples: Iterable[Iterable[int]]) -> tuple[Triple, ...]:
    return tuple(sorted(tuple(sorted(int(x) for x in t)) for t in triples))


def admissible_order(v: int) -> bool:
    """True when an STS(v) exists, i.e. v = 1 or 3 (mod 6)."""
    return v >= 1 and v % 6 in (1, 3)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a structural check.

    ``reason`` is ``None`` for a valid object; otherwise a short tag such as
    ``"duplicate-pair"`` with ``witness`` holding the offending pair. The
    report is truthy exactly when the object is valid.
    """

    valid: bool
    reason: str | None = None
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "reason": self.reason,
            "witness": list(self.witness) if self.witness is not None else None,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TripleSystem:
    """A point set ``0..v-1`` with a list of triples.

    Triples are stored sorted inside and lexicographically across, so equal
    systems compare and serialize identically. Construction does not check
    the Steiner property; call :func:`validate_sts` for that.
    """

    v: int
    triples: tuple[Triple, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "v", int(self.v))
        object.__setattr__(self, "triples", _canonical(self.triples))

    @property
    def order(self) -> int:
        return self.v

    def __len__(self) -> int:
        return len(self.triples)

    def triples_through(self) -> list[list[tuple[int, int]]]:
        """For each point, the pairs completing it to a triple."""
        through: list[list[tuple[int, int]]] = [[] for _ in range(self.v)]
        for a, b, c in self.triples:
            through[a].append((b, c))
            through[b].append((a, c))
            through[c].append((a, b))
        return through

    def third_point(self) -> dict[tuple[int, int], int]:
        """Map each covered pair ``(x, y)``, ``x < y``, to its third point."""
        third = {}
        for a, b, c in self.triples:
            third[(a, b)] = c
            third[(a, c)] = b
            third[(b, c)] = a
        return third

    def to_dict(self) -> dict:
        return {"v": self.v, "triples": [list(t) for t in self.triples]}

    @classmethod
    def from_dict(cls, data: dict) -> "TripleSystem":
        return cls(int(data["v"]), data["triples"])


def validate_sts(v: int, triples: Iterable[Iterable[int]] | None = None) -> ValidationReport:
    """Check that ``triples`` form a Steiner triple system on ``v`` points.

    Accepts either a :class:`TripleSystem` or a raw ``(v, triples)`` pair.
    The first problem found is reported: a malformed triple, then a
    duplicated pair, then the lexicographically first uncovered pair.
    """
    if isinstance(v, TripleSystem):
        triples = v.triples
        v = v.v
    blocks = [tuple(t) for t in (triples or ())]
    if v < 1:
        return ValidationReport(False, "bad-order", (v,), "order must be positive")
    seen: dict[tuple[int, int], tuple] = {}
    for t in blocks:
        if len(t) != 3 or len(set(t)) != 3:
            return ValidationReport(False, "malformed-triple", tuple(t))
        if any(not 0 <= x < v for x in t):
            return ValidationReport(False, "point-out-of-range", tuple(t))
        for x, y in combinations(sorted(t), 2):
            if (x, y) in seen:
                return ValidationReport(
                    False,
                    "duplicate-pair",
                    (x, y),
                    f"pair {{{x}, {y}}} lies in {list(seen[(x, y)])} and {sorted(t)}",
                )
            seen[(x, y)] = tuple(sorted(t))
    for x, y in combinations(range(v), 2):
        if (x, y) not in seen:
            return ValidationReport(False, "uncovered-pair", (x, y), f"pair {{{x}, {y}}} is in no triple")
    # exact pair coverage forces the count and the congruence
    return ValidationReport(True)


def bose_construction(v: int) -> TripleSystem:
    """Bose's STS(v) for v = 3 (mod 6).

    Uses the idempotent commutative quasigroup ``x o y = (n+1)(x+y)`` on
    ``Z_{2n+1}``; point ``(x, i)`` gets index ``i*(2n+1) + x``.
    """
    if v < 3 or v % 6 != 3:
        raise OrderNotAdmissible(f"Bose construction needs v = 3 (mod 6), got {v}")
    q = v // 3
    n = (q - 1) // 2

    def pt(x: int, i: int) -> int:
        return (i % 3) * q + x

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(q)]
    for i in range(3):
        for x, y in combinations(range(q), 2):
            triples.append((pt(x, i), pt(y, i), pt(((n + 1) * (x + y)) % q, i + 1)))
    return TripleSystem(v, triples)


def skolem_construction(v: int) -> TripleSystem:
    """Skolem's STS(v) for v = 1 (mod 6), v >= 7.

    Uses the half-idempotent commutative quasigroup on ``Z_{2n}``; point
    ``(x, i)`` gets index ``i*2n + x`` and the extra point is ``v - 1``.
    """
    if v < 7 or v % 6 != 1:
        raise OrderNotAdmissible(f"Skolem construction needs v = 1 (mod 6), v >= 7, got {v}")
    q = (v - 1) // 3
    n = q // 2
    inf = v - 1

    def op(x: int, y: int) -> int:
        s = (x + y) % q
        return s // 2 if s % 2 == 0 else (s + q - 1) // 2

    def pt(x: int, i: int) -> int:
        return (i % 3) * q + x

    triples = [(pt(x, 0), pt(x, 1), pt(x, 2)) for x in range(n)]
    for i in range(3):
        for x in range(n):
            triples.append((inf, pt(x + n, i), pt(x, i + 1)))
        for x, y in combinations(range(q), 2):
            triples.append((pt(x, i), pt(y, i), pt(op(x, y), i + 1)))
    return TripleSystem(v, triples)


def cyclic_sts(v: int, base_blocks: Sequence[Sequence[int]], short_orbit: bool = False) -> TripleSystem:
    """Develop base blocks modulo ``v``.

    With ``short_orbit`` the block ``{0, v/3, 2v/3}`` is added with its
    orbit of length ``v/3``.
    """
    blocks = set()
    for b in base_blocks:
        for s in range(v):
            blocks.add(tuple(sorted((x + s) % v for x in b)))
    if short_orbit:
        third = v // 3
        for s in range(third):
            blocks.add(tuple(sorted((s, s + third, s + 2 * third))))
    return TripleSystem(v, blocks)


class DoublingAssociation(tuple):
    """Bijection from base points ``0..v-1`` to factor indices.

    ``assoc[a]`` is the index of the factor whose pairs are joined to point
    ``a``.
    """

    def __new__(cls, mapping: Iterable[int]):
        values = tuple(int(x) for x in mapping)
        if sorted(values) != list(range(len(values))):
            raise SizeMismatch(f"association is not a bijection onto 0..{len(values) - 1}: {values}")
        return super().__new__(cls, values)

    @classmethod
    def identity(cls, v: int) -> "DoublingAssociation":
        return cls(range(v))

    def inverse(self) -> tuple[int, ...]:
        inv = [0] * len(self)
        for a, f in enumerate(self):
            inv[f] = a
        return tuple(inv)


def double(base: TripleSystem, factorization, assoc: Iterable[int] | None = None) -> TripleSystem:
    """The v -> 2v+1 doubling construction.

    New points are ``v .. 2v``; vertex ``x`` of the factorization becomes
    point ``v + x``. Base point ``a`` is joined to every pair of factor
    ``assoc[a]`` (identity when ``assoc`` is omitted).
    """
    from .factorization import validate_factorization

    v = base.v
    if factorization.m != v + 1:
        raise SizeMismatch(f"need a factorization of K_{v + 1}, got K_{factorization.m}")
    assoc = DoublingAssociation(range(v) if assoc is None else assoc)
    if len(assoc) != v:
        raise SizeMismatch(f"association has {len(assoc)} entries for {v} base points")
    report = validate_factorization(factorization)
    if not report:
        raise InvalidFactorization(f"{report.reason}: {report.detail or report.witness}")
    triples = list(base.triples)
    for a in range(v):
        for x, y in factorization.factors[assoc[a]]:
            triples.append((a, v + x, v + y))
    return TripleSystem(2 * v + 1, triples)


@dataclass(frozen=True)
class SubsystemWitness:
    point_subset: tuple[int, ...]
    induced_triples: tuple[Triple, ...]

    def reindexed(self) -> TripleSystem:
        index = {p: i for i, p in enumerate(self.point_subset)}
        return TripleSystem(len(self.point_subset), [[index[x] for x in t] for t in self.induced_triples])


@dataclass(frozen=True)
class SubsystemReport:
    found: bool
    witness: SubsystemWitness | None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.found


def find_subsystem(sts: TripleSystem, subset: Iterable[int]) -> SubsystemReport:
    """Decide whether ``subset`` carries a sub-STS of ``sts``."""
    points = tuple(sorted(set(int(p) for p in subset)))
    pset = set(points)
    if not pset <= set(range(sts.v)):
        raise ValueError(f"subset {points} is not inside 0..{sts.v - 1}")
    induced = tuple(t for t in sts.triples if pset.issuperset(t))
    witness = SubsystemWitness(points, induced)
    s = len(points)
    if s == 0:
        return SubsystemReport(False, None, "empty subset")
    expected = s * (s - 1) // 6
    if len(induced) != expected or not validate_sts(witness.reindexed()):
        return SubsystemReport(False, None, f"{len(induced)} induced triples, an STS({s}) needs {expected}")
    return SubsystemReport(True, witness)
