"""J-representations and maximal evenness on cycles."""

from __future__ import annotations

from dataclasses import dataclass

from .cycles import CyclicSet, multispectrum_clockwise, multispectrum_geodesic

__all__ = [
    "JSpec",
    "j_representation",
    "is_maximally_even_definitional",
    "is_maximally_even_spectral",
    "is_maximally_even",
    "enumerate_maximally_even",
    "complement_jrep",
    "consecutive_multiset",
    "jrep_spectrum_support",
    "jrep_spectrum_sum",
]


@dataclass(frozen=True)
class JSpec:
    n: int
    m: int
    r: int = 0

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got n={self.n}, m={self.m}")
        if not 0 <= self.r <= self.n - 1:
            raise ValueError(f"need 0 <= r <= n-1, got r={self.r}")


def j_representation(spec: JSpec) -> CyclicSet:
    n, m, r = spec.n, spec.m, spec.r
    return CyclicSet(n, tuple((n * i + r) // m for i in range(m)))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def is_maximally_even_definitional(A: CyclicSet) -> bool:
    """Every clockwise k-multispectrum is supported on one value or two consecutive ones."""
    for k in range(1, A.m):
        spec = multispectrum_clockwise(A, k)
        if spec[-1] - spec[0] > 1:
            return False
    return True


def _expected_support(n: int, m: int, k: int) -> frozenset[int]:
    if 2 * k == m and n % 2 == 1:
        return frozenset({n // 2})
    return frozenset({(n * k) // m, _ceil_div(n * k, m)})


def _expected_sum(n: int, m: int, k: int) -> int:
    return (n - 1) * k if 2 * k == m and n % 2 == 1 else n * k


def is_maximally_even_spectral(A: CyclicSet) -> bool:
    """Geodesic test: only ``k <= m/2`` needs checking.

    Each ``sigma_k(A)`` must equal ``D(m, S_k)`` as a multiset, where ``S_k``
    is the J-representation's spectrum sum.  Matching supports alone is not
    enough: on ``C_5`` the set ``{0, 1, 2}`` has ``sigma_1 = [1, 1, 2]`` with
    the right support, but its clockwise spectrum ``[1, 1, 3]`` is not even.
    Folding a clockwise distance above ``n/2`` keeps the support and lowers
    the sum, so the sum is what catches it.
    """
    n, m = A.n, A.m
    for k in range(1, m // 2 + 1):
        if multispectrum_geodesic(A, k) != consecutive_multiset(m, _expected_sum(n, m, k)):
            return False
    return True


is_maximally_even = is_maximally_even_definitional


def enumerate_maximally_even(n: int, m: int) -> list[CyclicSet]:
    """All maximally even ``m``-subsets of ``C_n``, sorted by membership."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got n={n}, m={m}")
    found = {j_representation(JSpec(n, m, r)).members for r in range(n)}
    return [CyclicSet(n, members) for members in sorted(found)]


def complement_jrep(spec: JSpec) -> JSpec:
    if spec.m >= spec.n:
        raise ValueError("complement of the whole cycle is empty")
    if spec.r > spec.m - 1:
        raise ValueError(f"complement identity is stated for 0 <= r <= m-1, got r={spec.r}")
    return JSpec(spec.n, spec.n - spec.m, spec.n - spec.r - 1)


def consecutive_multiset(m: int, S: int) -> tuple[int, ...]:
    """The unique ``m``-element integer multiset with sum ``S`` and spread at most 1."""
    if m < 1:
        raise ValueError("m must be positive")
    q, rem = divmod(S, m)
    return (q,) * (m - rem) + (q + 1,) * rem


def _check_k(spec: JSpec, k: int) -> None:
    if not 1 <= k <= spec.m // 2:
        raise ValueError(f"k must lie in 1..floor(m/2), got {k}")


def jrep_spectrum_support(spec: JSpec, k: int) -> frozenset[int]:
    _check_k(spec, k)
    return _expected_support(spec.n, spec.m, k)


def jrep_spectrum_sum(spec: JSpec, k: int) -> int:
    _check_k(spec, k)
    return _expected_sum(spec.n, spec.m, k)
