"""Closed-form characterizations of extremal sets on paths, cycles and DDR graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .cycles import CyclicSet, multispectrum_clockwise, multispectrum_geodesic
from .energy import Kernel, distance_histogram, energy, kernel_identity, kernel_reciprocal
from .graphs import Graph, is_distance_degree_regular, vertex_set
from .search import Objective, brute_force_extremal

__all__ = [
    "ArcPartition",
    "wiener_path_formula",
    "path_wiener_maximizers",
    "cycle_wiener_max_spectral",
    "cycle_wiener_max_full",
    "equitable_arc_partitions",
    "is_balanced",
    "is_weakly_balanced",
    "complement_energy_identity",
    "formal_complement_check",
    "DDRReport",
    "verify_ddr_equivalence",
]


# --- paths --------------------------------------------------------------------

def wiener_path_formula(A: Sequence[int]) -> int:
    """Wiener index of a vertex set of a path from its consecutive gaps.

    The gap between the i-th and (i+1)-th smallest members is crossed by
    ``i * (m - i)`` pairs.
    """
    a = sorted(A)
    m = len(a)
    if m < 2 or len(set(a)) != m:
        raise ValueError("need at least two distinct vertices")
    return sum(i * (m - i) * (a[i] - a[i - 1]) for i in range(1, m))


def path_wiener_maximizers(n: int, m: int) -> list[tuple[int, ...]]:
    """All Wiener maximizers of size ``m`` on ``P_n`` (vertices ``0..n-1``).

    Even ``m``: the ``m/2`` leftmost plus the ``m/2`` rightmost vertices.
    Odd ``m``: ``h = (m-1)/2`` vertices at each end plus any single vertex
    ``j`` with ``h <= j <= n-1-h``.  (1-indexed, the free vertex satisfies
    ``h < j < n-h+1``.)
    """
    if not 2 <= m <= n:
        raise ValueError(f"need 2 <= m <= n, got n={n}, m={m}")
    h = m // 2
    left = tuple(range(h))
    right = tuple(range(n - h, n))
    if m % 2 == 0:
        return [left + right]
    return [left + (j,) + right for j in range(h, n - h)]


# --- cycles -------------------------------------------------------------------

def cycle_wiener_max_spectral(A: CyclicSet) -> bool:
    """Top-span test: look only at the clockwise multispectrum at span ``floor(m/2)``."""
    n, m = A.n, A.m
    if m < 2:
        raise ValueError("need |A| >= 2")
    top = multispectrum_clockwise(A, m // 2)
    if m % 2 == 1:
        return all(1 <= x <= n // 2 for x in top)
    return set(top) <= {n // 2, (n + 1) // 2}


def cycle_wiener_max_full(A: CyclicSet) -> bool:
    n, m = A.n, A.m
    if m < 2:
        raise ValueError("need |A| >= 2")
    for k in range(1, (m + 1) // 2):
        if multispectrum_geodesic(A, k) != multispectrum_clockwise(A, k):
            return False
    if m % 2 == 0:
        return set(multispectrum_geodesic(A, m // 2)) == {n // 2}
    return True


@dataclass(frozen=True)
class ArcPartition:
    """``P`` is the clockwise arc of ``floor(n/2)`` vertices from ``start``; ``Q`` is the rest."""

    n: int
    start: int
    P: frozenset[int] = field(init=False)
    Q: frozenset[int] = field(init=False)

    def __post_init__(self):
        half = self.n // 2
        P = frozenset((self.start + i) % self.n for i in range(half))
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "Q", frozenset(range(self.n)) - P)


def equitable_arc_partitions(n: int) -> list[ArcPartition]:
    """Unordered splits of ``C_n`` into two arcs of sizes ``floor(n/2)`` and ``ceil(n/2)``."""
    if n < 2:
        raise ValueError("need n >= 2")
    seen = set()
    out = []
    for s in range(n):
        part = ArcPartition(n, s)
        key = frozenset({part.P, part.Q})
        if key not in seen:
            seen.add(key)
            out.append(part)
    return out


def is_balanced(A: CyclicSet) -> bool:
    members = set(A.members)
    for part in equitable_arc_partitions(A.n):
        if abs(len(members & part.P) - len(members & part.Q)) > 1:
            return False
    return True


def is_weakly_balanced(A: CyclicSet) -> bool:
    members = set(A.members)
    for part in equitable_arc_partitions(A.n):
        p, q = len(members & part.P), len(members & part.Q)
        if abs(p - q) > 2:
            return False
        if abs(p - q) == 2:
            heavy, light = (part.P, part.Q) if p > q else (part.Q, part.P)
            if len(heavy) <= len(light):
                return False
    return True


# --- complements on distance-degree-regular graphs ----------------------------

def complement_energy_identity(G: Graph, A: Iterable[int], g: Kernel) -> tuple[Fraction, Fraction, bool]:
    """Both sides of ``E(A) - E(V \\ A) = (2|A|/|G| - 1) E(V)``."""
    A = vertex_set(A, G.n)
    if not A:
        raise ValueError("A must be non-empty")
    inside = set(A)
    rest = [v for v in range(G.n) if v not in inside]
    lhs = energy(G, A, g) - energy(G, rest, g)
    rhs = (Fraction(2 * len(A), G.n) - 1) * energy(G, range(G.n), g)
    return lhs, rhs, lhs == rhs


def formal_complement_check(G: Graph) -> bool:
    """Complements of singletons all share one distance histogram.

    This is the complement condition for a kernel whose values are linearly
    independent over the rationals: such a kernel separates distinct
    histograms, so equal energies means equal histograms.
    """
    hists = {distance_histogram(G, [v for v in range(G.n) if v != u]) for u in range(G.n)}
    return len(hists) == 1


@dataclass
class DDRReport:
    is_ddr: bool
    identity_holds: bool
    complements_closed: bool
    formal_check: bool
    identity_counterexample: tuple | None = None
    complement_counterexample: tuple | None = None

    @property
    def consistent(self) -> bool:
        return self.is_ddr == self.identity_holds == self.complements_closed == self.formal_check


def _complement(n: int, A: Sequence[int]) -> tuple[int, ...]:
    inside = set(A)
    return tuple(v for v in range(n) if v not in inside)


def verify_ddr_equivalence(G: Graph, kernels: Sequence[Kernel] | None = None) -> DDRReport:
    """Check DDR against the complement identity and complement closure of extremal sets.

    Exhaustive over all subsets, so only for small graphs.  Counterexamples
    are ``(A, kernel name)`` for the identity and
    ``(kernel name, direction, m, witness)`` for closure.
    """
    D = max(1, G.diameter)
    if kernels is None:
        kernels = [kernel_reciprocal(D), kernel_identity(D)]
    n = G.n

    identity_cx = None
    for m in range(1, n + 1):
        for A in combinations(range(n), m):
            for g in kernels:
                if not complement_energy_identity(G, A, g)[2]:
                    identity_cx = (A, g.name)
                    break
            if identity_cx:
                break
        if identity_cx:
            break

    closure_cx = None
    for g in kernels:
        for direction in ("min", "max"):
            obj = Objective.energy(g, direction)
            reports = {m: brute_force_extremal(G, obj, m) for m in range(n + 1)}
            for m in range(1, n):
                optimal = set(reports[n - m].witnesses)
                for W in reports[m].witnesses:
                    if _complement(n, W) not in optimal:
                        closure_cx = (g.name, direction, m, W)
                        break
                if closure_cx:
                    break
            if closure_cx:
                break
        if closure_cx:
            break

    return DDRReport(
        is_ddr=is_distance_degree_regular(G),
        identity_holds=identity_cx is None,
        complements_closed=closure_cx is None,
        formal_check=formal_complement_check(G),
        identity_counterexample=identity_cx,
        complement_counterexample=closure_cx,
    )
