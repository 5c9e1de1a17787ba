"""Exhaustive small-case checks of the characterization results.

Each ``check_*`` function compares a closed-form characterization against a
brute-force oracle over a bounded range and returns a :class:`Check`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .characterize import (
    cycle_wiener_max_full,
    cycle_wiener_max_spectral,
    is_balanced,
    is_weakly_balanced,
    path_wiener_maximizers,
    verify_ddr_equivalence,
)
from .cycles import CyclicSet, multispectrum_geodesic
from .energy import kernel_reciprocal, kernel_reciprocal_square
from .graphs import (
    build_cycle,
    build_hypercube,
    build_mobius_ladder,
    build_path,
    build_petersen,
    build_star,
    cartesian_product,
)
from .maxeven import (
    JSpec,
    complement_jrep,
    enumerate_maximally_even,
    j_representation,
    jrep_spectrum_sum,
    jrep_spectrum_support,
)
from .search import Objective, ascending_local_search, brute_force_extremal, is_local_maximizer

__all__ = ["Check", "CHECKS", "run_checks"]


@dataclass
class Check:
    name: str
    passed: bool
    cases: int
    failure: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" first failure: {self.failure}" if self.failure else ""
        return f"{status} {self.name} ({self.cases} cases){tail}"


def check_cycle_minimizers(max_n: int = 14) -> Check:
    cases = 0
    for n in range(3, max_n + 1):
        G = build_cycle(n)
        D = G.diameter
        for kernel in (kernel_reciprocal(D), kernel_reciprocal_square(D)):
            for m in range(1, n + 1):
                cases += 1
                got = set(brute_force_extremal(G, Objective.energy(kernel), m).witnesses)
                want = {A.members for A in enumerate_maximally_even(n, m)}
                if got != want:
                    return Check("cycle-min", False, cases, f"n={n} m={m} kernel={kernel.name}")
    return Check("cycle-min", True, cases)


def check_jrep_spectra(max_n: int = 24) -> Check:
    cases = 0
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            for r in range(n):
                spec = JSpec(n, m, r)
                J = j_representation(spec)
                for k in range(1, m // 2 + 1):
                    cases += 1
                    sigma = multispectrum_geodesic(J, k)
                    if set(sigma) != jrep_spectrum_support(spec, k) or sum(sigma) != jrep_spectrum_sum(spec, k):
                        return Check("jrep-spectra", False, cases, f"n={n} m={m} r={r} k={k}")
    return Check("jrep-spectra", True, cases)


def check_jrep_complement(max_n: int = 24) -> Check:
    cases = 0
    for n in range(2, max_n + 1):
        for m in range(1, n):
            for r in range(m):
                cases += 1
                spec = JSpec(n, m, r)
                if j_representation(spec).complement() != j_representation(complement_jrep(spec)):
                    return Check("jrep-complement", False, cases, f"n={n} m={m} r={r}")
    return Check("jrep-complement", True, cases)


def ddr_corpus() -> dict:
    P2 = build_path(2)
    return {
        **{f"cycle:{n}": build_cycle(n) for n in range(5, 9)},
        "mobius:3": build_mobius_ladder(3),
        "mobius:4": build_mobius_ladder(4),
        "hypercube:3": build_hypercube(3),
        "petersen": build_petersen(),
        "product:path:2,cycle:5": cartesian_product(P2, build_cycle(5)),
        "path:4": build_path(4),
        "path:5": build_path(5),
        "star:4": build_star(4),
    }


def check_ddr_equivalence() -> Check:
    cases = 0
    for name, G in ddr_corpus().items():
        cases += 1
        rep = verify_ddr_equivalence(G)
        if not rep.consistent:
            return Check("ddr-equivalence", False, cases, f"{name}: {rep}")
        if not rep.is_ddr and (rep.identity_counterexample is None or rep.complement_counterexample is None):
            return Check("ddr-equivalence", False, cases, f"{name}: missing counterexample")
    return Check("ddr-equivalence", True, cases)


def check_path_maximizers(max_n: int = 12) -> Check:
    cases = 0
    W = Objective.wiener()
    for n in range(2, max_n + 1):
        G = build_path(n)
        for m in range(2, n + 1):
            cases += 1
            brute = set(brute_force_extremal(G, W, m).witnesses)
            formula = set(path_wiener_maximizers(n, m))
            local = {A for A in combinations(range(n), m) if is_local_maximizer(G, A, W)}
            if not brute == formula == local:
                return Check("path-max", False, cases, f"n={n} m={m}")
    return Check("path-max", True, cases)


def check_cycle_maximizers(max_n: int = 12) -> Check:
    cases = 0
    W = Objective.wiener()
    for n in range(3, max_n + 1):
        G = build_cycle(n)
        for m in range(2, n + 1):
            cases += 1
            brute = set(brute_force_extremal(G, W, m).witnesses)
            sets = [CyclicSet(n, A) for A in combinations(range(n), m)]
            spectral = {A.members for A in sets if cycle_wiener_max_spectral(A)}
            full = {A.members for A in sets if cycle_wiener_max_full(A)}
            weak = {A.members for A in sets if is_weakly_balanced(A)}
            balanced = {A.members for A in sets if is_balanced(A)}
            ok = brute == spectral == full == weak
            if n % 2 == 0 or m % 2 == 1:
                ok = ok and balanced == brute
            else:
                ok = ok and not (balanced & brute)
            if not ok:
                return Check("cycle-max", False, cases, f"n={n} m={m}")
    return Check("cycle-max", True, cases)


def check_ascent(max_n: int = 10) -> Check:
    cases = 0
    W = Objective.wiener()
    for build in (build_path, build_cycle):
        for n in range(3 if build is build_cycle else 2, max_n + 1):
            G = build(n)
            for m in range(2, n + 1):
                best = set(brute_force_extremal(G, W, m).witnesses)
                for A in combinations(range(n), m):
                    cases += 1
                    if ascending_local_search(G, W, A) not in best:
                        return Check("ascent", False, cases, f"{G.name} start={A}")
    return Check("ascent", True, cases)


CHECKS = {
    "cycle-min": check_cycle_minimizers,
    "jrep-spectra": check_jrep_spectra,
    "jrep-complement": check_jrep_complement,
    "ddr": check_ddr_equivalence,
    "path-max": check_path_maximizers,
    "cycle-max": check_cycle_maximizers,
    "ascent": check_ascent,
}


def run_checks(names=None) -> list[Check]:
    names = list(CHECKS) if names is None else names
    return [CHECKS[name]() for name in names]
