"""Majorization orders and the Up / Robin Hood transfers on finite multisets.

Inputs are arbitrary finite sequences of ints or fractions; they are sorted on
entry, so every order here is insensitive to the input ordering.
"""

from __future__ import annotations

from itertools import accumulate
from numbers import Rational
from typing import Sequence

__all__ = [
    "majorizes",
    "weakly_submajorizes",
    "weakly_supermajorizes",
    "up_transfer",
    "robin_hood_transfer",
    "reduce_to_consecutive",
]


def _pair(x: Sequence, y: Sequence) -> tuple[list, list]:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sorted(x), sorted(y)


def majorizes(x: Sequence[Rational], y: Sequence[Rational]) -> bool:
    """``x ≺ y``: ``x`` is majorized by ``y``."""
    xs, ys = _pair(x, y)
    if sum(xs) != sum(ys):
        return False
    return weakly_submajorizes(xs, ys)


def weakly_submajorizes(x: Sequence[Rational], y: Sequence[Rational]) -> bool:
    """``x ≺_w y``: every prefix sum of the largest entries of ``x`` is at most that of ``y``."""
    xs, ys = _pair(x, y)
    return all(a <= b for a, b in zip(accumulate(reversed(xs)), accumulate(reversed(ys))))


def weakly_supermajorizes(x: Sequence[Rational], y: Sequence[Rational]) -> bool:
    """``x ≺^w y``: every prefix sum of the smallest entries of ``x`` is at least that of ``y``."""
    xs, ys = _pair(x, y)
    return all(a >= b for a, b in zip(accumulate(xs), accumulate(ys)))


def up_transfer(x: Sequence[Rational]) -> tuple:
    """Add one to a minimal entry."""
    xs = sorted(x)
    if xs:
        xs[0] += 1
    return tuple(sorted(xs))


def robin_hood_transfer(x: Sequence[Rational]) -> tuple:
    """Move one unit from a maximal entry to a minimal entry.

    Multisets with spread at most 1 are fixed: for them the move only permutes
    entries (spread 1) or would widen the spread (spread 0).
    """
    xs = sorted(x)
    if len(xs) >= 2 and xs[-1] - xs[0] > 1:
        xs[0] += 1
        xs[-1] -= 1
    return tuple(sorted(xs))


def reduce_to_consecutive(x: Sequence[int], S: int) -> tuple[int, int, tuple[int, ...]]:
    """Apply Up until the sum reaches ``S``, then Robin Hood until stable.

    Returns ``(ups, robin_hoods, result)``; ``result`` has the same size as
    ``x``, sums to ``S`` and has spread at most 1.
    """
    if not x:
        raise ValueError("x must be non-empty")
    cur = tuple(sorted(x))
    if sum(cur) > S:
        raise ValueError(f"sum(x) = {sum(cur)} exceeds S = {S}")
    ups = S - sum(cur)
    for _ in range(ups):
        cur = up_transfer(cur)
    rhs = 0
    while True:
        nxt = robin_hood_transfer(cur)
        if nxt == cur:
            return ups, rhs, cur
        cur = nxt
        rhs += 1
