"""Clockwise/geodesic distances, spans and k-multispectra on the cycle ``C_n``.

Clockwise means increasing label order mod ``n``.  Multisets are represented
as sorted tuples, so equality of two multisets is plain tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "CyclicSet",
    "multiset",
    "support",
    "clockwise_distance",
    "geodesic_distance_cycle",
    "span",
    "multispectrum_clockwise",
    "multispectrum_geodesic",
]

Multiset = tuple[int, ...]


def multiset(values: Iterable[int]) -> Multiset:
    return tuple(sorted(values))


def support(values: Iterable[int]) -> frozenset[int]:
    return frozenset(values)


@dataclass(frozen=True)
class CyclicSet:
    """A vertex set of ``C_n``; ``members`` is strictly increasing."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cycle size must be positive")
        members = tuple(sorted(set(int(a) for a in self.members)))
        if members and (members[0] < 0 or members[-1] >= self.n):
            raise ValueError(f"members {members} not in 0..{self.n - 1}")
        object.__setattr__(self, "members", members)

    @property
    def m(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members

    def complement(self) -> "CyclicSet":
        inside = set(self.members)
        return CyclicSet(self.n, tuple(v for v in range(self.n) if v not in inside))

    def rotate(self, s: int) -> "CyclicSet":
        return CyclicSet(self.n, tuple((a + s) % self.n for a in self.members))

    def reflect(self) -> "CyclicSet":
        return CyclicSet(self.n, tuple((-a) % self.n for a in self.members))


def clockwise_distance(n: int, u: int, v: int) -> int:
    return (v - u) % n


def geodesic_distance_cycle(n: int, u: int, v: int) -> int:
    c = (v - u) % n
    return min(c, n - c)


def span(A: CyclicSet, u: int, v: int) -> int:
    """Diatonic length of the clockwise run of ``A`` from ``u`` to ``v``; needs ``u != v``."""
    if u == v:
        raise ValueError("span is only defined for distinct members")
    idx = {a: i for i, a in enumerate(A.members)}
    try:
        i, j = idx[u], idx[v]
    except KeyError:
        raise ValueError(f"{u} or {v} is not a member of the set") from None
    return (j - i) % A.m


def _check_k(A: CyclicSet, k: int) -> None:
    if A.m < 2 or not 1 <= k <= A.m - 1:
        raise ValueError(f"k must lie in 1..m-1 (m={A.m}), got {k}")


def multispectrum_clockwise(A: CyclicSet, k: int) -> Multiset:
    _check_k(A, k)
    a, m, n = A.members, A.m, A.n
    return multiset((a[(i + k) % m] - a[i]) % n for i in range(m))


def multispectrum_geodesic(A: CyclicSet, k: int) -> Multiset:
    n = A.n
    return multiset(min(x, n - x) for x in multispectrum_clockwise(A, k))
