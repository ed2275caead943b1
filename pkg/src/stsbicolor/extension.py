"""Extended bicolorings of doubled Steiner triple systems.

A strict k-bicoloring of an STS(v) extends to the STS(2v+1) built by
doubling when the v+1 new points can be colored with the same k colors.
Whether a doubling admits such an extension depends only on the base class
sizes ``n`` and on the new-point counts ``c``: the factor joined to a base
point of color ``j`` may contain monochromatic pairs of any color other
than ``j`` and pairs joining a color-``j`` point to a point of another color.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import networkx as nx

from . import kernels
from .coloring import Coloring, verify_bicoloring
from .designs import DoublingAssociation, TripleSystem, double, find_subsystem, validate_sts
from .errors import ConstructionUnverified, InstanceTooLarge, PreconditionViolated
from .factorization import (
    OneFactorization,
    SplitFactorization,
    recursive_split_factorization,
    theorem3_factorization,
    validate_factorization,
)

SolutionVector = tuple[int, ...]

DEFAULT_BUDGET = 200_000_000
COUNTING_MAX_K = 6
COUNTING_MAX_V = 100


# --------------------------------------------------------------------------
# the pair-count equation


def eq1_holds(v: int, n: Sequence[int], c: Sequence[int]) -> bool:
    """``sum c_i^2 + 2 sum n_i c_i == (v+1)^2`` together with ``sum c_i == v+1``."""
    if len(n) != len(c) or sum(c) != v + 1 or min(c, default=0) < 0:
        return False
    return sum(x * x for x in c) + 2 * sum(a * b for a, b in zip(n, c)) == (v + 1) ** 2


def enumerate_eq1_solutions(v: int, n: Sequence[int]) -> list[SolutionVector]:
    """All non-negative ``c`` with ``sum c = v+1`` solving the pair-count equation.

    ``c[i]`` counts new points of the color whose base class has size
    ``n[i]``. Results are ordered tuples in lexicographic order.
    """
    n = [int(x) for x in n]
    k = len(n)
    total = v + 1
    target = total * total
    if k == 0:
        return []
    out: list[SolutionVector] = []
    nmin = [min(n[i:]) for i in range(k)]
    nmax = [max(n[i:]) for i in range(k)]
    prefix = [0] * k

    def rec(i: int, rem: int, acc: int) -> None:
        if i == k - 1:
            if acc + rem * rem + 2 * n[i] * rem == target:
                prefix[i] = rem
                out.append(tuple(prefix))
            return
        slots = k - i
        for x in range(rem + 1):
            a = acc + x * x + 2 * n[i] * x
            r = rem - x
            # bounds on what the remaining slots can add
            low = a + -(-r * r // (slots - 1)) + 2 * nmin[i + 1] * r
            high = a + r * r + 2 * nmax[i + 1] * r
            if low > target or high < target:
                continue
            prefix[i] = x
            rec(i + 1, r, a)

    rec(0, total, 0)
    return out


def ordered_and_unordered_counts(v: int, n: Sequence[int]) -> dict:
    """Solution counts under both conventions for repeated class sizes.

    ``ordered`` counts tuples indexed by color; ``unordered`` identifies
    tuples that differ by swapping colors of equal base class size.
    """
    sols = enumerate_eq1_solutions(v, n)
    groups: dict[int, list[int]] = {}
    for i, size in enumerate(n):
        groups.setdefault(size, []).append(i)
    canon = set()
    for c in sols:
        key = list(c)
        for idx in groups.values():
            vals = sorted(c[i] for i in idx)
            for i, val in zip(idx, vals):
                key[i] = val
        canon.add(tuple(key))
    return {"ordered": len(sols), "unordered": len(canon)}


# --------------------------------------------------------------------------
# feasibility filters


@dataclass(frozen=True)
class FilterResult:
    survivors: list[SolutionVector]
    eliminated: list[tuple[SolutionVector, str]]

    def to_dict(self) -> dict:
        return {
            "survivors": [list(c) for c in self.survivors],
            "eliminated": [{"c": list(c), "reason": r} for c, r in self.eliminated],
        }


def corollary2_reason(c: Sequence[int], n: Sequence[int], v: int) -> str | None:
    """Why ``c`` cannot extend, by the zero-count and half-size rules, else None."""
    for j, cj in enumerate(c):
        if cj == 0 and n[j] > 0 and any(x % 2 for x in c):
            odd = [i for i, x in enumerate(c) if x % 2]
            return f"c[{j}] = 0 forces all counts even, but c{odd} odd"
    for j, cj in enumerate(c):
        if n[j] > 0 and 2 * cj > v + 1:
            return f"c[{j}] = {cj} exceeds (v+1)/2 = {(v + 1) / 2:g}"
    return None


def filter_corollary2(solutions: Iterable[Sequence[int]], n: Sequence[int], v: int) -> FilterResult:
    survivors, eliminated = [], []
    for c in solutions:
        c = tuple(c)
        reason = corollary2_reason(c, n, v)
        if reason is None:
            survivors.append(c)
        else:
            eliminated.append((c, reason))
    return FilterResult(survivors, eliminated)


@dataclass(frozen=True)
class FactorProfile:
    """Pair counts inside one factor joined to a base point of color ``color``.

    ``cross[m]`` pairs join a color-``color`` new point to a color-``m``
    point; the other ``c[m] - cross[m]`` color-``m`` points are paired among
    themselves.
    """

    color: int
    cross: tuple[int, ...]

    def mono(self, c: Sequence[int]) -> tuple[int, ...]:
        return tuple(0 if m == self.color else (c[m] - self.cross[m]) // 2 for m in range(len(c)))


def factor_profiles(c: Sequence[int], j: int) -> list[FactorProfile]:
    """Every admissible profile for a factor of color ``j`` (small instances)."""
    k = len(c)
    others = [m for m in range(k) if m != j]
    out = []
    for t in itertools.product(*[range(c[m] % 2, c[m] + 1, 2) for m in others]):
        if sum(t) == c[j]:
            cross = [0] * k
            for m, x in zip(others, t):
                cross[m] = x
            out.append(FactorProfile(j, tuple(cross)))
    return out


@dataclass(frozen=True)
class CountingVerdict:
    """Outcome of the aggregate pair-count test.

    When feasible, ``cross_totals[j][m]`` is a consistent total number of
    color-(j, m) pairs placed in factors of color ``j``.
    """

    feasible: bool
    reason: str
    cross_totals: tuple[tuple[int, ...], ...] | None = None

    def __bool__(self) -> bool:
        return self.feasible

    def to_dict(self) -> dict:
        return {
            "feasible": self.feasible,
            "reason": self.reason,
            "cross_totals": [list(r) for r in self.cross_totals] if self.cross_totals else None,
        }


def counting_filter(
    c: Sequence[int],
    n: Sequence[int],
    v: int,
    max_k: int = COUNTING_MAX_K,
    max_v: int = COUNTING_MAX_V,
) -> CountingVerdict:
    """Decide whether the pair counts of ``c`` can be spread over the factors.

    Each of the ``n[j]`` factors of color ``j`` needs a profile (see
    :class:`FactorProfile`); summed over all factors, the color-(j, m)
    pairs must number exactly ``c[j] * c[m]`` and the color-``m``
    monochromatic pairs ``C(c[m], 2)``.

    Per color, the sums of ``n[j]`` profiles are exactly the lattice points
    ``T[j][m] = n[j]*(c[m] % 2) + 2*s`` with ``0 <= s <= n[j]*(c[m]//2)`` and
    ``sum_m T[j][m] = n[j]*c[j]`` (a box intersected with a hyperplane), so
    the decision reduces to a bounded integer flow, solved exactly.

    Raises:
        PreconditionViolated: ``c`` does not solve the pair-count equation.
        InstanceTooLarge: more than ``max_k`` colors or ``v > max_v``.
    """
    c = [int(x) for x in c]
    n = [int(x) for x in n]
    k = len(c)
    if not eq1_holds(v, n, c):
        raise PreconditionViolated(f"{tuple(c)} does not solve the pair-count equation for n={tuple(n)}, v={v}")
    if k > max_k or v > max_v:
        raise InstanceTooLarge(f"counting filter is run for k <= {max_k} and v <= {max_v}")

    par = [x % 2 for x in c]
    half = [x // 2 for x in c]
    active = [j for j in range(k) if n[j] > 0]

    # a single factor of each color must exist
    for j in active:
        need = c[j] - sum(par[m] for m in range(k) if m != j)
        room = sum(half[m] for m in range(k) if m != j)
        if need < 0 or need % 2 or need // 2 > room:
            return CountingVerdict(
                False, f"no factor of color {j}: its {c[j]} new points cannot all be matched to other colors"
            )

    # monochromatic pair bounds per color
    for m in range(k):
        lo = hi = 0
        for j in active:
            if j == m:
                continue
            rest = sum(par[q] for q in range(k) if q not in (j, m))
            rest_room = sum(half[q] for q in range(k) if q not in (j, m))
            t_max = min(c[m], c[j] - rest)
            t_max -= (t_max - par[m]) % 2
            t_min = max(par[m], c[j] - rest - 2 * rest_room)
            t_min += (t_min - par[m]) % 2
            lo += n[j] * ((c[m] - t_max) // 2)
            hi += n[j] * ((c[m] - t_min) // 2)
        need = comb(c[m], 2)
        if lo > need:
            return CountingVerdict(
                False, f"color {m} is forced into at least {lo} monochromatic pairs, only {need} exist"
            )
        if hi < need:
            return CountingVerdict(
                False, f"color {m} has {need} monochromatic pairs but the factors can hold at most {hi}"
            )

    # exact aggregate test: x = T[j][m] for j < m, T[m][j] = c_j c_m - x
    bounds = {}
    for j in range(k):
        for m in range(j + 1, k):
            prod = c[j] * c[m]
            lo = max(n[j] * par[m], prod - n[m] * c[j])
            hi = min(n[j] * c[m], prod - n[m] * par[j])
            p = (n[j] * c[m]) % 2
            if (prod - p) % 2 != (n[m] * c[j]) % 2:
                return CountingVerdict(False, f"parity of color-({j}, {m}) pairs is inconsistent")
            lo += (lo - p) % 2
            hi -= (hi - p) % 2
            if lo > hi:
                return CountingVerdict(False, f"no admissible total for color-({j}, {m}) pairs")
            bounds[(j, m)] = (p, (lo - p) // 2, (hi - p) // 2)

    # row j: sum_{m>j} (p + 2y_jm) + sum_{m<j} (c_m c_j - p - 2y_mj) = n_j c_j
    supply = []
    for j in range(k):
        const = sum(bounds[(j, m)][0] for m in range(j + 1, k))
        const += sum(c[m] * c[j] - bounds[(m, j)][0] for m in range(j))
        rhs = n[j] * c[j] - const
        if rhs % 2:
            return CountingVerdict(False, f"parity of the pairs in factors of color {j} is inconsistent")
        supply.append(rhs // 2)
    g = nx.DiGraph()
    g.add_nodes_from(["s", "t", *range(k)])
    for (j, m), (_, ylo, yhi) in bounds.items():
        supply[j] -= ylo
        supply[m] += ylo
        if yhi > ylo:
            g.add_edge(j, m, capacity=yhi - ylo)
    want = 0
    for j in range(k):
        if supply[j] > 0:
            g.add_edge("s", j, capacity=supply[j])
            want += supply[j]
        elif supply[j] < 0:
            g.add_edge(j, "t", capacity=-supply[j])
    if sum(supply) != 0:
        return CountingVerdict(False, "pair totals do not balance")
    value, flow = nx.maximum_flow(g, "s", "t") if want else (0, {})
    if value != want:
        return CountingVerdict(False, "no assignment of pair totals to factor colors balances every color")
    totals = [[0] * k for _ in range(k)]
    for (j, m), (p, ylo, _) in bounds.items():
        y = ylo + (flow.get(j, {}).get(m, 0) if want else 0)
        totals[j][m] = p + 2 * y
        totals[m][j] = c[j] * c[m] - totals[j][m]
    return CountingVerdict(True, "feasible", tuple(tuple(r) for r in totals))


# --------------------------------------------------------------------------
# certificates


@dataclass
class ExtensionCertificate:
    """A doubled system with an extended bicoloring, plus everything to re-check it.

    ``new_colors[x]`` is the color of new point ``v + x``; ``factorization``
    is on local vertices ``0..v`` and ``association[a]`` is the factor
    joined to base point ``a``.
    """

    base: TripleSystem
    base_coloring: Coloring
    solution: SolutionVector
    new_colors: tuple[int, ...]
    factorization: OneFactorization
    association: DoublingAssociation
    doubled: TripleSystem
    extended: Coloring
    method: str = ""
    transcript: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def v(self) -> int:
        return self.base.v

    @property
    def extended_pattern(self) -> tuple[int, ...]:
        return tuple(sorted(self.extended.class_sizes()))

    def to_dict(self) -> dict:
        return {
            "kind": "extension-certificate",
            "method": self.method,
            "base": self.base.to_dict(),
            "base_coloring": self.base_coloring.to_dict(),
            "solution": list(self.solution),
            "new_colors": list(self.new_colors),
            "factorization": self.factorization.to_dict(),
            "association": list(self.association),
            "doubled": self.doubled.to_dict(),
            "extended_coloring": self.extended.to_dict(),
            "extended_pattern": list(self.extended_pattern),
            "transcript": [{"check": name, "ok": ok} for name, ok in self.transcript],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ExtensionCertificate":
        return cls(
            base=TripleSystem.from_dict(data["base"]),
            base_coloring=Coloring.from_dict(data["base_coloring"]),
            solution=tuple(data["solution"]),
            new_colors=tuple(data["new_colors"]),
            factorization=OneFactorization.from_dict(data["factorization"]),
            association=DoublingAssociation(data["association"]),
            doubled=TripleSystem.from_dict(data["doubled"]),
            extended=Coloring.from_dict(data["extended_coloring"]),
            method=data.get("method", ""),
            transcript=[(t["check"], bool(t["ok"])) for t in data.get("transcript", [])],
        )


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    checks: list[tuple[str, bool, str]]

    def __bool__(self) -> bool:
        return self.ok

    def failed(self) -> list[str]:
        return [name for name, ok, _ in self.checks if not ok]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": [{"check": n, "ok": ok, "detail": d} for n, ok, d in self.checks]}


def verify_certificate(cert: ExtensionCertificate | dict) -> VerificationReport:
    """Re-check a certificate from its raw data; the stored transcript is ignored."""
    checks: list[tuple[str, bool, str]] = []

    def check(name: str, fn) -> bool:
        try:
            ok, detail = fn()
        except Exception as exc:  # malformed data is a failed check, not a crash
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        checks.append((name, bool(ok), detail))
        return bool(ok)

    if isinstance(cert, dict):
        try:
            cert = ExtensionCertificate.from_dict(cert)
        except Exception as exc:
            return VerificationReport(False, [("parse", False, f"{type(exc).__name__}: {exc}")])

    v = cert.base.v
    k = cert.base_coloring.k

    def _rep(r):
        return r.valid, r.reason or ""

    check("base-is-sts", lambda: _rep(validate_sts(cert.base)))
    check("base-coloring-strict", lambda: (bool(verify_bicoloring(cert.base, cert.base_coloring)), ""))
    check("factorization-valid", lambda: (cert.factorization.m == v + 1 and bool(validate_factorization(cert.factorization)), ""))
    check("association-bijective", lambda: (sorted(cert.association) == list(range(v)), ""))
    check("doubled-matches-construction", lambda: (double(cert.base, cert.factorization, cert.association) == cert.doubled, ""))
    check("doubled-is-sts", lambda: _rep(validate_sts(cert.doubled)))
    check("base-is-subsystem", lambda: (bool(find_subsystem(cert.doubled, range(v))), ""))

    def _ext():
        r = verify_bicoloring(cert.doubled, cert.extended)
        return r.ok and cert.extended.k == k, r.reason or ("palette grew" if cert.extended.k != k else "")

    check("extended-coloring-strict-same-k", _ext)
    check("restriction-equals-base", lambda: (cert.extended.colors[:v] == cert.base_coloring.colors, ""))
    check("new-colors-match", lambda: (cert.extended.colors[v:] == tuple(cert.new_colors), ""))

    def _counts():
        counts = [0] * k
        for col in cert.extended.colors[v:]:
            counts[col] += 1
        return tuple(counts) == tuple(cert.solution), f"recomputed {tuple(counts)}"

    check("counts-equal-solution", _counts)

    def _eq1():
        counts = [0] * k
        for col in cert.extended.colors[v:]:
            counts[col] += 1
        return eq1_holds(v, cert.base_coloring.class_sizes(), counts), ""

    check("recomputed-counts-solve-equation", _eq1)
    return VerificationReport(all(ok for _, ok, _ in checks), checks)


def _certify(base, col, new_colors, factorization, assoc, method) -> ExtensionCertificate:
    v = base.v
    doubled = double(base, factorization, assoc)
    extended = col.extend(new_colors)
    counts = [0] * col.k
    for x in new_colors:
        counts[x] += 1
    cert = ExtensionCertificate(
        base, col, tuple(counts), tuple(new_colors), factorization,
        DoublingAssociation(assoc), doubled, extended, method,
    )
    report = verify_certificate(cert)
    cert.transcript = [(name, ok) for name, ok, _ in report.checks]
    if not report:
        raise ConstructionUnverified(f"{method} on v={v}: failed checks {report.failed()}")
    return cert


def _require_bicoloring(sts: TripleSystem, col: Coloring) -> None:
    r = verify_bicoloring(sts, col)
    if not r:
        raise PreconditionViolated(f"base coloring is not a strict bicoloring ({r.reason})")


def _associate(col: Coloring, factor_types: Sequence[int]) -> list[int]:
    """Pair base points of each color with factors of that type, both ascending."""
    pools: dict[int, list[int]] = {}
    for f, t in enumerate(factor_types):
        pools.setdefault(t, []).append(f)
    assoc = []
    for p, color in enumerate(col.colors):
        pool = pools.get(color)
        if not pool:
            raise PreconditionViolated(f"no factor left for base point {p} of color {color}")
        assoc.append(pool.pop(0))
    return assoc


# --------------------------------------------------------------------------
# constructions


def theorem3_eligible(n: Sequence[int], v: int) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, with ``n_i + n_j = (v+1)/2`` and that value even."""
    if (v + 1) % 4:
        return []
    h = (v + 1) // 2
    return [(i, j) for i, j in itertools.combinations(range(len(n)), 2) if n[i] + n[j] == h]


def split_pattern(n: Sequence[int], v: int, i: int, j: int) -> tuple[int, ...]:
    """Sorted class sizes after the two-color extension on colors ``i`` and ``j``."""
    h = (v + 1) // 2
    out = list(n)
    out[i] += h
    out[j] += h
    return tuple(sorted(out))


def theorem3_extend(sts: TripleSystem, col: Coloring, i: int, j: int) -> ExtensionCertificate:
    """Extend a bicoloring using two colors whose classes fill half the new points.

    New points ``0..h-1`` (``h = (v+1)/2``) get color ``i`` and the rest
    color ``j``. The ``h`` bipartite factors go to base points colored ``i``
    or ``j``, in increasing order of point and factor index; the combined
    factors go to the other base points.
    """
    _require_bicoloring(sts, col)
    v = sts.v
    n = col.class_sizes()
    if i == j or not (0 <= i < col.k and 0 <= j < col.k):
        raise PreconditionViolated(f"need two distinct colors, got {i} and {j}")
    if (v + 1) % 2 or n[i] + n[j] != (v + 1) // 2:
        raise PreconditionViolated(f"n[{i}] + n[{j}] = {n[i] + n[j]} but (v+1)/2 = {(v + 1) / 2:g}")
    if ((v + 1) // 2) % 2:
        raise PreconditionViolated(f"(v+1)/2 = {(v + 1) // 2} is odd")
    split = theorem3_factorization(v)
    h = (v + 1) // 2
    new_colors = [i] * h + [j] * h
    types = [("ij" if layer == 0 else "rest") for layer in split.layers]
    assoc = _associate_layers(col, types, {i: "ij", j: "ij"})
    return _certify(sts, col, new_colors, split.factorization, assoc, f"two-color split on colors {i},{j}")


def _associate_layers(col: Coloring, factor_labels: Sequence[str], label_of_color: dict[int, str]) -> list[int]:
    pools: dict[str, list[int]] = {}
    for f, label in enumerate(factor_labels):
        pools.setdefault(label, []).append(f)
    assoc = []
    for p, color in enumerate(col.colors):
        label = label_of_color.get(color, "rest")
        pool = pools.get(label)
        if not pool:
            raise PreconditionViolated(f"no factor left in layer {label!r} for base point {p}")
        assoc.append(pool.pop(0))
    return assoc


def theorem4_conditions(n: Sequence[int], v: int, seq: Sequence[int]) -> str | None:
    """None if the nested-halving hypotheses hold for color sequence ``seq``, else why not."""
    p = len(seq)
    if p < 2:
        return "need at least two colors in the sequence"
    if len(set(seq)) != p or any(not 0 <= s < len(n) for s in seq):
        return f"sequence {tuple(seq)} must list distinct colors"
    if (v + 1) % (1 << (p - 1)):
        return f"v+1 = {v + 1} is not divisible by 2^{p - 1}"
    inner = (v + 1) >> (p - 1)
    if n[seq[0]] + n[seq[1]] != inner:
        return f"n[{seq[0]}] + n[{seq[1]}] = {n[seq[0]] + n[seq[1]]}, need (v+1)/2^{p - 1} = {inner}"
    if inner % 2:
        return f"(v+1)/2^{p - 1} = {inner} is odd"
    for i in range(3, p + 1):
        size = (v + 1) >> (p - i + 1)
        if (v + 1) % (1 << (p - i + 1)) or n[seq[i - 1]] != size:
            return f"n[{seq[i - 1]}] = {n[seq[i - 1]]}, need (v+1)/2^{p - i + 1} = {size}"
        if size % 2:
            return f"(v+1)/2^{p - i + 1} = {size} is odd"
    return None


def theorem4_extend(sts: TripleSystem, col: Coloring, seq: Sequence[int]) -> ExtensionCertificate:
    """Extend along a sequence of colors whose classes halve the new points repeatedly.

    ``seq = (k_1, ..., k_p)``. The outermost block of ``(v+1)/2`` new points
    takes color ``k_p``, the next ``(v+1)/4`` take ``k_{p-1}`` and so on down
    to ``k_3``; the two innermost blocks take ``k_1`` and ``k_2``. Cross
    factors at each level go to the base points of that level's color.

    Raises:
        PreconditionViolated: the size hypotheses fail.
        ConstructionUnverified: the construction did not pass the checker;
            fall back to :func:`search_extension`.
    """
    _require_bicoloring(sts, col)
    v = sts.v
    n = col.class_sizes()
    why = theorem4_conditions(n, v, seq)
    if why:
        raise PreconditionViolated(why)
    p = len(seq)
    sizes = [(v + 1) >> (l + 1) for l in range(p - 1)]
    sizes.append(sizes[-1])
    split = recursive_split_factorization(v + 1, sizes)
    block_colors = [seq[p - 1 - l] for l in range(p - 2)] + [seq[0], seq[1]]
    new_colors = [color for b, color in zip(split.blocks, block_colors) for _ in b]
    labels = [f"L{layer}" for layer in split.layers]
    label_of_color = {seq[p - 1 - l]: f"L{l}" for l in range(p - 2)}
    label_of_color[seq[0]] = label_of_color[seq[1]] = f"L{p - 2}"
    rest_label = f"L{p - 1}"
    labels = ["rest" if x == rest_label else x for x in labels]
    try:
        assoc = _associate_layers(col, labels, label_of_color)
        return _certify(sts, col, new_colors, split.factorization, assoc, f"nested split on colors {tuple(seq)}")
    except PreconditionViolated as exc:
        raise ConstructionUnverified(str(exc)) from exc


# --------------------------------------------------------------------------
# exhaustive search


def canonical_new_colors(c: Sequence[int]) -> list[int]:
    """New-point colors as contiguous blocks in color order."""
    return [color for color, count in enumerate(c) for _ in range(count)]


def type_assignments(n: Sequence[int], c: Sequence[int]) -> list[tuple[int, ...]]:
    """Color types of the factors, factor ``x - 1`` being the one through new points 0 and ``x``.

    New points of one color other than point 0 are interchangeable, so
    within each color class the types are listed in nondecreasing order.
    """
    colors = canonical_new_colors(c)
    a = colors[0]
    k = len(c)
    others = [m for m in range(k) if m != a]
    ranges = [range(0, min(c[m], n[m]) + 1) for m in others]
    out = []
    for us in itertools.product(*ranges):
        u = dict(zip(others, us))
        if sum(c[m] - u[m] for m in others) != n[a]:
            continue
        rest = {m: n[m] - u[m] for m in others}
        if any(x < 0 for x in rest.values()) or sum(rest.values()) != c[a] - 1:
            continue
        types = [0] * (len(colors) - 1)
        partners: dict[int, list[int]] = {}
        for x in range(1, len(colors)):
            partners.setdefault(colors[x], []).append(x)
        for m in others:
            for idx, x in enumerate(partners.get(m, [])):
                types[x - 1] = m if idx < u[m] else a
        same = partners.get(a, [])
        seq = [m for m in others for _ in range(rest[m])]
        for x, t in zip(same, seq):
            types[x - 1] = t
        out.append(tuple(types))
    return sorted(out)


def _allowed(t: int, cu: int, cw: int) -> bool:
    if cu == cw:
        return cu != t
    return t == cu or t == cw


def _cover_instance(colors: Sequence[int], types: Sequence[int]):
    """Exact-cover rows for completing a factorization with fixed factor types."""
    m = len(colors)
    edges = [(u, w) for u in range(1, m) for w in range(u + 1, m)]
    edge_id = {e: i for i, e in enumerate(edges)}
    n_f = m - 1
    slot: dict[tuple[int, int], int] = {}
    for f in range(n_f):
        partner = f + 1
        for u in range(1, m):
            if u != partner:
                slot[(f, u)] = len(edges) + len(slot)
    # factors of the type with most new points first
    order = sorted(range(n_f), key=lambda f: (-sum(1 for x in colors if x == types[f]), types[f], f))
    offsets = [0]
    items: list[int] = []
    rows: list[tuple[int, tuple[int, int]]] = []
    for f in order:
        partner = f + 1
        t = types[f]
        for (u, w) in edges:
            if u == partner or w == partner:
                continue
            if not _allowed(t, colors[u], colors[w]):
                continue
            items.extend((edge_id[(u, w)], slot[(f, u)], slot[(f, w)]))
            offsets.append(len(items))
            rows.append((f, (u, w)))
    first_edges_ok = all(_allowed(types[x - 1], colors[0], colors[x]) for x in range(1, m))
    return len(edges) + len(slot), offsets, items, rows, first_edges_ok


def _run_assignment(colors, types, budget, backend=None):
    n_items, offsets, items, rows, ok = _cover_instance(colors, types)
    if not ok:
        return kernels.EXHAUSTED, None, 0
    solver = kernels.exact_cover if backend is None else kernels.backends()[backend].exact_cover
    status, chosen, nodes = solver(n_items, offsets, items, budget)
    if status != kernels.FOUND:
        return status, None, nodes
    factors: list[list[tuple[int, int]]] = [[(0, f + 1)] for f in range(len(colors) - 1)]
    for o in chosen:
        f, e = rows[o]
        factors[f].append(e)
    return status, factors, nodes


def _worker(args):
    colors, types, budget = args
    return _run_assignment(colors, types, budget)


@dataclass
class FactorizationSearch:
    """Result of searching for a factorization compatible with ``(n, c)``.

    ``status`` is ``"found"``, ``"exhausted"`` (no such factorization
    exists) or ``"budget-exhausted"`` (undecided).
    """

    status: str
    new_colors: tuple[int, ...]
    factorization: OneFactorization | None
    factor_types: tuple[int, ...] | None
    nodes: int
    assignments: int
    assignments_done: int


def search_factorization(
    n: Sequence[int], c: Sequence[int], budget: int = DEFAULT_BUDGET, jobs: int = 1, backend: str | None = None
) -> FactorizationSearch:
    """Find a 1-factorization of ``K_{v+1}`` with factor types realizing ``(n, c)``.

    Factor types are enumerated up to symmetry (:func:`type_assignments`)
    and each assignment is completed by exact cover: every pair lies in one
    factor, every factor is a perfect matching, and a factor of type ``t``
    only holds monochromatic pairs of colors other than ``t`` or pairs with
    exactly one endpoint of color ``t``.

    With ``jobs > 1`` assignments run in worker processes, each with the
    full remaining budget; the reported factorization is still the one from
    the first successful assignment in the fixed order.
    """
    n = tuple(int(x) for x in n)
    c = tuple(int(x) for x in c)
    colors = tuple(canonical_new_colors(c))
    assignments = type_assignments(n, c) if colors else []
    nodes = 0
    done = 0
    undecided = False
    if jobs > 1 and len(assignments) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_worker, (colors, t, budget)) for t in assignments]
            for types, fut in zip(assignments, futures):
                status, factors, used = fut.result()
                nodes += used
                done += 1
                if status == kernels.FOUND:
                    for other in futures:
                        other.cancel()
                    return FactorizationSearch(
                        "found", colors, OneFactorization(len(colors), factors), types, nodes, len(assignments), done
                    )
                if status == kernels.BUDGET:
                    undecided = True
    else:
        for types in assignments:
            remaining = budget - nodes
            if remaining <= 0:
                undecided = True
                break
            status, factors, used = _run_assignment(colors, types, remaining, backend)
            nodes += used
            done += 1
            if status == kernels.FOUND:
                return FactorizationSearch(
                    "found", colors, OneFactorization(len(colors), factors), types, nodes, len(assignments), done
                )
            if status == kernels.BUDGET:
                undecided = True
                break
    return FactorizationSearch(
        "budget-exhausted" if undecided else "exhausted", colors, None, None, nodes, len(assignments), done
    )


@dataclass
class ExtensionSearchResult:
    status: str  # "found" | "exhausted" | "budget-exhausted"
    certificate: ExtensionCertificate | None
    search: FactorizationSearch

    def to_dict(self) -> dict:
        s = self.search
        return {
            "status": self.status,
            "nodes": s.nodes,
            "type_assignments": s.assignments,
            "type_assignments_completed": s.assignments_done,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }


def search_extension(
    sts: TripleSystem, col: Coloring, c: Sequence[int], budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> ExtensionSearchResult:
    """Search for a doubling of ``sts`` on which ``col`` extends with counts ``c``.

    ``c[i]`` is the number of new points of color ``i`` (color indices of
    ``col``). ``"exhausted"`` proves that no doubling of this system admits
    such an extension.
    """
    _require_bicoloring(sts, col)
    n = col.class_sizes()
    c = tuple(int(x) for x in c)
    if len(c) != col.k or not eq1_holds(sts.v, n, c):
        raise PreconditionViolated(f"{c} does not solve the pair-count equation for n={n}, v={sts.v}")
    found = search_factorization(n, c, budget, jobs)
    if found.status != "found":
        return ExtensionSearchResult(found.status, None, found)
    assoc = _associate(col, found.factor_types)
    cert = _certify(sts, col, found.new_colors, found.factorization, assoc, "exact-cover search")
    return ExtensionSearchResult("found", cert, found)


# --------------------------------------------------------------------------
# the two extensions that always exist


@dataclass(frozen=True)
class DoubledColoring:
    system: TripleSystem
    coloring: Coloring
    factorization: OneFactorization
    association: DoublingAssociation

    def to_dict(self) -> dict:
        return {
            "system": self.system.to_dict(),
            "coloring": self.coloring.to_dict(),
            "pattern": list(sorted(self.coloring.class_sizes())),
            "factorization": self.factorization.to_dict(),
            "association": list(self.association),
        }


def mirrored_factorization(base: TripleSystem) -> OneFactorization:
    """Factor ``a`` pairs ``v`` with ``a`` and ``x`` with ``y`` for each base triple ``{a, x, y}``."""
    v = base.v
    factors: list[list[tuple[int, int]]] = [[(a, v)] for a in range(v)]
    for a, b, c in base.triples:
        factors[a].append((b, c))
        factors[b].append((a, c))
        factors[c].append((a, b))
    return OneFactorization(v + 1, factors)


def new_class_coloring(
    base: TripleSystem, col: Coloring, factorization: OneFactorization | None = None, assoc=None
) -> DoubledColoring:
    """All new points in one fresh color: a (k+1)-bicoloring of any doubling."""
    from .factorization import circle_factorization

    f = factorization or circle_factorization(base.v + 1)
    assoc = DoublingAssociation(range(base.v) if assoc is None else assoc)
    system = double(base, f, assoc)
    ext = col.extend([col.k] * (base.v + 1), col.k + 1)
    if not verify_bicoloring(system, ext):
        raise ConstructionUnverified("fresh-class coloring failed verification")
    return DoubledColoring(system, ext, f, assoc)


def mirrored_coloring(
    base: TripleSystem, col: Coloring, factorization: OneFactorization | None = None, assoc=None
) -> DoubledColoring:
    """Class sizes ``(2n_1, ..., 2n_k, 1)``: each base point's color is copied to a new point.

    Without a factorization the mirrored one is used, which always works.
    With a given factorization every new point is tried as the singleton
    ``z``; base point ``a`` then copies its color to the partner of ``z`` in
    its factor.
    """
    v = base.v
    if factorization is None:
        factorization, assoc = mirrored_factorization(base), None
    assoc = DoublingAssociation(range(v) if assoc is None else assoc)
    system = double(base, factorization, assoc)
    for z in sorted(range(v + 1), key=lambda x: (x != v, x)):
        new = [-1] * (v + 1)
        new[z] = col.k
        ok = True
        for a in range(v):
            partner = next(y if x == z else x for x, y in factorization.factors[assoc[a]] if z in (x, y))
            if new[partner] != -1:
                ok = False
                break
            new[partner] = col.colors[a]
        if not ok or -1 in new:
            continue
        ext = col.extend(new, col.k + 1)
        if verify_bicoloring(system, ext):
            return DoubledColoring(system, ext, factorization, assoc)
    raise ConstructionUnverified("no new point works as the singleton class for this factorization")


@dataclass(frozen=True)
class TrivialColorings:
    new_class: DoubledColoring
    mirrored: DoubledColoring | None
    note: str = ""


def trivial_doubling_colorings(
    base: TripleSystem | ExtensionCertificate,
    col: Coloring | None = None,
    factorization: OneFactorization | None = None,
    assoc=None,
) -> TrivialColorings:
    """The fresh-class and mirrored (k+1)-bicolorings of a doubling of ``base``.

    ``base`` may be a certificate, whose doubling is then reused. When the
    mirrored coloring does not fit a supplied factorization, ``mirrored``
    is None and ``note`` says so.
    """
    if isinstance(base, ExtensionCertificate):
        base, col, factorization, assoc = base.base, base.base_coloring, base.factorization, base.association
    if col is None:
        raise PreconditionViolated("a base coloring is required")
    _require_bicoloring(base, col)
    a = new_class_coloring(base, col, factorization, assoc)
    try:
        b = mirrored_coloring(base, col, factorization, assoc)
        note = ""
    except ConstructionUnverified as exc:
        b, note = None, str(exc)
    return TrivialColorings(a, b, note)
