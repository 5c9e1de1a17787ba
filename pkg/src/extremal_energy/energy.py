"""Kernels ``g`` and the vertex-set functionals built on pairwise distances.

All arithmetic is exact: kernel tables hold :class:`fractions.Fraction` values
and energies are returned as fractions (Wiener index and distance product as
ints).  Functions accept either a :class:`Graph` or its :class:`DistanceMatrix`.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Union

from .graphs import DistanceMatrix, Graph

__all__ = [
    "Kernel",
    "kernel_identity",
    "kernel_reciprocal",
    "kernel_reciprocal_square",
    "kernel_from_table",
    "parse_kernel",
    "format_rational",
    "distance_multiset",
    "cross_distance_multiset",
    "distance_histogram",
    "energy",
    "energy_from_multiset",
    "wiener",
    "harary",
    "distance_product",
]

Distances = Union[Graph, DistanceMatrix]


def _matrix(obj: Distances) -> DistanceMatrix:
    return obj.distances if isinstance(obj, Graph) else obj


def format_rational(x: Fraction | int) -> str:
    """Serialize as ``"p/q"`` (always with a denominator)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Kernel:
    """Exact table ``g(1), ..., g(D)``; ``values[i - 1]`` is ``g(i)``.

    Shape flags are computed from finite differences on ``1..D``, the only
    points where distances can land.  With ``D == 1`` every flag holds
    vacuously.
    """

    name: str
    values: tuple[Fraction, ...]
    is_increasing: bool = field(init=False)
    is_decreasing: bool = field(init=False)
    is_convex: bool = field(init=False)
    is_strictly_convex: bool = field(init=False)

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if not vals:
            raise ValueError("kernel table must cover at least distance 1")
        object.__setattr__(self, "values", vals)
        first = [b - a for a, b in zip(vals, vals[1:])]
        second = [b - a for a, b in zip(first, first[1:])]
        object.__setattr__(self, "is_increasing", all(d > 0 for d in first))
        object.__setattr__(self, "is_decreasing", all(d < 0 for d in first))
        object.__setattr__(self, "is_convex", all(d >= 0 for d in second))
        object.__setattr__(self, "is_strictly_convex", all(d > 0 for d in second))

    @property
    def max_distance(self) -> int:
        return len(self.values)

    def __call__(self, r: int) -> Fraction:
        if not 1 <= r <= len(self.values):
            raise ValueError(f"kernel {self.name!r} undefined at distance {r}")
        return self.values[r - 1]

    def scaled(self) -> tuple[int, tuple[int, ...]]:
        """``(L, w)`` with ``w[r] == L * g(r)`` integral; ``w[0]`` is 0.

        Lets hot loops accumulate integers and divide once.
        """
        lcm = math.lcm(*(v.denominator for v in self.values))
        return lcm, (0,) + tuple(int(v * lcm) for v in self.values)


def kernel_identity(D: int) -> Kernel:
    return kernel_from_table("identity", range(1, D + 1))


def kernel_reciprocal(D: int) -> Kernel:
    return kernel_from_table("reciprocal", (Fraction(1, r) for r in range(1, D + 1)))


def kernel_reciprocal_square(D: int) -> Kernel:
    return kernel_from_table("reciprocal-square", (Fraction(1, r * r) for r in range(1, D + 1)))


def kernel_from_table(name: str, values: Iterable) -> Kernel:
    if isinstance(values, (str, bytes)):
        raise TypeError("kernel values must be an iterable of numbers")
    vals = tuple(Fraction(v) for v in values)
    if not vals:
        raise ValueError("kernel table must be non-empty")
    return Kernel(name, vals)


def parse_kernel(text: str, name: str = "table") -> Kernel:
    """Parse lines ``"i p/q"`` for ``i = 1..D`` in order."""
    values: list[Fraction] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ValueError(f"line {lineno}: expected 'i p/q'")
        try:
            i = int(tok[0])
            v = Fraction(tok[1])
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"line {lineno}: cannot parse {line!r}") from None
        if i != len(values) + 1:
            raise ValueError(f"line {lineno}: expected distance {len(values) + 1}, got {i}")
        values.append(v)
    if not values:
        raise ValueError("kernel file defines no values")
    return Kernel(name, tuple(values))


# --- distance multisets -----------------------------------------------------

def distance_multiset(dm: Distances, A: Iterable[int]) -> tuple[int, ...]:
    d = _matrix(dm).d
    A = sorted(A)
    return tuple(sorted(d[u][v] for u, v in combinations(A, 2)))


def cross_distance_multiset(dm: Distances, A: Iterable[int], B: Iterable[int]) -> tuple[int, ...]:
    d = _matrix(dm).d
    A, B = list(A), list(B)
    if set(A) & set(B):
        raise ValueError("A and B must be disjoint")
    return tuple(sorted(d[u][v] for u in A for v in B))


def distance_histogram(dm: Distances, A: Iterable[int]) -> tuple[int, ...]:
    """Multiplicities of distances ``1..diam`` in ``D(A)``."""
    mat = _matrix(dm)
    counts = Counter(distance_multiset(mat, A))
    return tuple(counts.get(i, 0) for i in range(1, mat.diameter + 1))


# --- functionals -------------------------------------------------------------

def energy_from_multiset(distances: Iterable[int], g: Kernel) -> Fraction:
    return sum((g(x) for x in distances), Fraction(0))


def energy(dm: Distances, A: Iterable[int], g: Kernel) -> Fraction:
    mat = _matrix(dm)
    if g.max_distance < mat.diameter:
        raise ValueError(
            f"kernel {g.name!r} covers distances up to {g.max_distance}, graph diameter is {mat.diameter}"
        )
    return energy_from_multiset(distance_multiset(mat, A), g)


def wiener(dm: Distances, A: Iterable[int]) -> int:
    return sum(distance_multiset(dm, A))


def harary(dm: Distances, A: Iterable[int]) -> Fraction:
    return energy(dm, A, kernel_reciprocal(max(1, _matrix(dm).diameter)))


def distance_product(dm: Distances, A: Iterable[int]) -> int:
    return math.prod(distance_multiset(dm, A))
