"""Exact extremal-set search: brute force, perturbations and local search.

Objective values are compared exactly.  For speed the brute-force and local
search loops score sets with integers (kernel tables are rescaled to a common
denominator); reported optima are converted back to :class:`Fraction`.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .cycles import CyclicSet
from .energy import Kernel, kernel_identity, kernel_reciprocal
from .graphs import Graph, vertex_set

__all__ = [
    "EnumerationCapError",
    "Objective",
    "ExtremalReport",
    "DEFAULT_ENUM_CAP",
    "enumeration_cap",
    "perturbations",
    "is_local_minimizer",
    "is_local_maximizer",
    "brute_force_extremal",
    "local_search_path",
    "descending_local_search",
    "ascending_local_search",
    "canonical_cycle_class",
    "cycle_classes",
]

DEFAULT_ENUM_CAP = 10**8
MAX_BRUTE_FORCE_VERTICES = 32
KINDS = ("energy", "wiener", "harary", "distance_product")


class EnumerationCapError(RuntimeError):
    """Brute force would exceed the configured number of subsets."""


def enumeration_cap() -> int:
    raw = os.environ.get("EXTREMAL_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class Objective:
    kind: str
    direction: str = "min"
    kernel: Kernel | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown objective kind {self.kind!r}")
        if self.direction not in ("min", "max"):
            raise ValueError(f"direction must be 'min' or 'max', got {self.direction!r}")
        if (self.kind == "energy") != (self.kernel is not None):
            raise ValueError("a kernel is required for, and only for, kind='energy'")

    @classmethod
    def wiener(cls, direction: str = "max") -> "Objective":
        return cls("wiener", direction)

    @classmethod
    def harary(cls, direction: str = "min") -> "Objective":
        return cls("harary", direction)

    @classmethod
    def energy(cls, kernel: Kernel, direction: str = "min") -> "Objective":
        return cls("energy", direction, kernel)

    @property
    def label(self) -> str:
        return f"energy:{self.kernel.name}" if self.kernel is not None else self.kind

    def scorer(self, G: Graph) -> "_Scorer":
        D = max(1, G.diameter)
        if self.kind == "distance_product":
            return _Scorer(G.distances.d, None, 1, product=True)
        kernel = {
            "wiener": lambda: kernel_identity(D),
            "harary": lambda: kernel_reciprocal(D),
            "energy": lambda: self.kernel,
        }[self.kind]()
        if kernel.max_distance < G.diameter:
            raise ValueError(f"kernel {kernel.name!r} does not cover diameter {G.diameter}")
        scale, weights = kernel.scaled()
        return _Scorer(G.distances.d, weights, scale)

    def value(self, G: Graph, A: Iterable[int]) -> Fraction:
        s = self.scorer(G)
        return s.exact(s(tuple(sorted(A))))

    def better(self, a, b) -> bool:
        """Strict improvement of score ``a`` over ``b`` in this direction."""
        return a < b if self.direction == "min" else a > b


class _Scorer:
    """Picklable integer-valued scorer; ``exact`` maps a score to its true value."""

    def __init__(self, d, weights, scale, product=False):
        self.d = d
        self.weights = weights
        self.scale = scale
        self.product = product

    def __call__(self, A: tuple[int, ...]) -> int:
        d = self.d
        if self.product:
            return math.prod(d[u][v] for u, v in combinations(A, 2))
        w = self.weights
        return sum(w[d[u][v]] for u, v in combinations(A, 2))

    def exact(self, score: int) -> Fraction:
        return Fraction(score, self.scale)


@dataclass(frozen=True)
class ExtremalReport:
    m: int
    optimum: Fraction
    witnesses: tuple[tuple[int, ...], ...]
    classes: tuple[tuple[int, ...], ...] | None = None


# --- perturbations and local optimality --------------------------------------

def perturbations(G: Graph, A: Iterable[int]) -> list[tuple[int, ...]]:
    """Sets obtained by moving one member to an adjacent non-member, ordered by (u, v)."""
    A = vertex_set(A, G.n)
    inside = set(A)
    out = []
    for u in A:
        for v in G.adjacency[u]:
            if v not in inside:
                out.append(tuple(sorted((inside - {u}) | {v})))
    return out


def _is_local(G: Graph, A, objective: Objective, want: str) -> bool:
    obj = Objective(objective.kind, want, objective.kernel)
    score = obj.scorer(G)
    A = vertex_set(A, G.n)
    here = score(A)
    return not any(obj.better(score(B), here) for B in perturbations(G, A))


def is_local_minimizer(G: Graph, A: Iterable[int], objective: Objective) -> bool:
    return _is_local(G, A, objective, "min")


def is_local_maximizer(G: Graph, A: Iterable[int], objective: Objective) -> bool:
    return _is_local(G, A, objective, "max")


# --- brute force ----------------------------------------------------------------

def _best_in(scorer: _Scorer, direction: str, combos: Iterable[tuple[int, ...]]):
    best = None
    witnesses: list[tuple[int, ...]] = []
    for A in combos:
        s = scorer(A)
        if best is None or (s < best if direction == "min" else s > best):
            best, witnesses = s, [A]
        elif s == best:
            witnesses.append(A)
    return best, witnesses


def _chunk(args):
    scorer, direction, n, m, first = args
    combos = ((first,) + rest for rest in combinations(range(first + 1, n), m - 1))
    return _best_in(scorer, direction, combos)


def brute_force_extremal(
    G: Graph,
    objective: Objective,
    m: int,
    *,
    cap: int | None = None,
    workers: int = 1,
) -> ExtremalReport:
    """Score every ``m``-subset; return the optimum and all sets attaining it.

    ``workers > 1`` splits the subsets by smallest member across processes;
    the merged report is identical to the sequential one.
    """
    n = G.n
    if not 0 <= m <= n:
        raise ValueError(f"m must lie in 0..{n}, got {m}")
    if n > MAX_BRUTE_FORCE_VERTICES:
        raise EnumerationCapError(f"brute force is limited to {MAX_BRUTE_FORCE_VERTICES} vertices")
    cap = enumeration_cap() if cap is None else cap
    total = math.comb(n, m)
    if total > cap:
        raise EnumerationCapError(f"C({n},{m}) = {total} subsets exceeds the cap {cap}")
    scorer = objective.scorer(G)

    if workers <= 1 or m == 0:
        best, witnesses = _best_in(scorer, objective.direction, combinations(range(n), m))
    else:
        tasks = [(scorer, objective.direction, n, m, first) for first in range(n - m + 1)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk, tasks))
        best, witnesses = None, []
        for b, w in parts:
            if b is None:
                continue
            if best is None or objective.better(b, best):
                best, witnesses = b, list(w)
            elif b == best:
                witnesses.extend(w)

    witnesses = sorted(witnesses)
    classes = None
    if G.is_labeled_cycle():
        classes = cycle_classes(CyclicSet(n, w) for w in witnesses)
    return ExtremalReport(m, scorer.exact(best), tuple(witnesses), classes)


# --- local search -----------------------------------------------------------------

def local_search_path(G: Graph, objective: Objective, start: Iterable[int]) -> Iterator[tuple[int, ...]]:
    """Yield the successive sets visited by first-improvement local search.

    Each step moves to the first perturbation (in :func:`perturbations` order)
    that strictly improves the objective; the last set yielded is locally
    optimal.
    """
    score = objective.scorer(G)
    X = vertex_set(start, G.n)
    here = score(X)
    yield X
    while True:
        for B in perturbations(G, X):
            s = score(B)
            if objective.better(s, here):
                X, here = B, s
                yield X
                break
        else:
            return


def _run(G, objective, start, direction):
    obj = Objective(objective.kind, direction, objective.kernel)
    X = None
    for X in local_search_path(G, obj, start):
        pass
    return X


def descending_local_search(G: Graph, objective: Objective, start: Iterable[int]) -> tuple[int, ...]:
    return _run(G, objective, start, "min")


def ascending_local_search(G: Graph, objective: Objective, start: Iterable[int]) -> tuple[int, ...]:
    return _run(G, objective, start, "max")


# --- cycle symmetry ---------------------------------------------------------------

def canonical_cycle_class(A: CyclicSet) -> CyclicSet:
    """Lexicographically least image of ``A`` under the dihedral group of ``C_n``."""
    images = []
    for base in (A, A.reflect()):
        images.extend(base.rotate(s).members for s in range(A.n))
    return CyclicSet(A.n, min(images))


def cycle_classes(sets: Iterable[CyclicSet]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted({canonical_cycle_class(A).members for A in sets}))
