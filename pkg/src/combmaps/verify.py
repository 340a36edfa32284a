"""Exhaustive and seeded checks of the counting and structure theorems."""

import random
from dataclasses import dataclass
from math import factorial

from .classes import (
    DEFAULT_BOUND,
    EMatchingClass,
    all_matchings,
    census,
    class_count,
    class_size,
    coset_map,
    enumerate_selfconjugate,
    is_selfconjugate,
    rho_of_product,
)
from .knot import check_knot, decompose, knot_map, knot_of
from .maps import CombMap, e_matching, identity_map, multiply, normal_matching, reverse
from .perm import Permutation, all_permutations, conjugate

__all__ = ["CheckResult", "random_permutation", "random_map", "run_suite", "format_results"]

DEFAULT_SEED = 1994


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_permutation(n, rng):
    return Permutation([x + 1 for x in rng.sample(range(n), n)], check=False)


def random_map(pi, rng):
    return CombMap(random_permutation(len(pi), rng), pi)


def check_census(m):
    table = census(m, bound=None)
    want_k, want_s = class_count(m), class_size(m)
    ok = len(table) == want_k and all(c == want_s for c in table.values())
    ok = ok and sum(table.values()) == factorial(2 * m)
    sizes = sorted(set(table.values()))
    return CheckResult(
        "census",
        ok,
        f"expected {want_k} classes of {want_s} = {factorial(2 * m)}; got {len(table)} classes of sizes {sizes}",
    )


def check_count_identity(m):
    lhs = class_count(m) * class_size(m)
    return CheckResult(
        "count identity",
        lhs == factorial(2 * m),
        f"(2m-1)!! * m! * 2^m = {class_count(m)} * {class_size(m)} = {lhs}, (2m)! = {factorial(2 * m)}",
    )


def check_selfconjugate_group(m):
    pi = normal_matching(m)
    K = list(enumerate_selfconjugate(m, pi, bound=None))
    Kset = set(K)
    brute = {CombMap(P, pi) for P in all_permutations(2 * m) if conjugate(P, pi) == P}
    ok = len(K) == len(Kset) == class_size(m) and Kset == brute
    ok = ok and identity_map(pi) in Kset
    ok = ok and all(reverse(S) in Kset for S in K)
    ok = ok and all(multiply(S, T) in Kset for S in K for T in K)
    return CheckResult(
        "selfconjugate subgroup",
        ok,
        f"expected |K_pi| = m! 2^m = {class_size(m)}; enumerated {len(Kset)}, brute-force {len(brute)}",
    )


def check_knots(m):
    pi = normal_matching(m)
    bad = 0
    total = 0
    for P in all_permutations(2 * m):
        total += 1
        try:
            check_knot(knot_of(CombMap(P, pi)))
        except AssertionError:
            bad += 1
    return CheckResult("knot pi^mu = rho", bad == 0, f"{total} maps, {bad} failures")


def check_decomposition(m):
    pi = normal_matching(m)
    bad = 0
    total = 0
    for P in all_permutations(2 * m):
        total += 1
        M = CombMap(P, pi)
        K, A = decompose(M)
        if multiply(knot_map(K), A) != M or not is_selfconjugate(A):
            bad += 1
    return CheckResult("knot x selfconjugate decomposition", bad == 0, f"{total} maps, {bad} failures")


def check_product_rule(m, rng, pairs=1000):
    pi = normal_matching(m)
    bad = 0
    for _ in range(pairs):
        S, T = random_map(pi, rng), random_map(pi, rng)
        if rho_of_product(S, T) != e_matching(multiply(S, T)):
            bad += 1
    return CheckResult("product edge-matching rule", bad == 0, f"{pairs} random pairs, {bad} failures")


def check_coset_law(m, rng, samples=20):
    pi = normal_matching(m)
    sigmas = list(all_matchings(2 * m))
    if m <= 3:
        maps = [CombMap(P, pi) for P in all_permutations(2 * m)]
    else:
        maps = [random_map(pi, rng) for _ in range(samples)]
    classes = {s: set(EMatchingClass(s, pi).members()) for s in sigmas}
    bad = 0
    for M in maps:
        for s in sigmas:
            image = {multiply(M, Q) for Q in classes[s]}
            if image != classes[coset_map(M, s)]:
                bad += 1
    return CheckResult(
        "coset law P K_sigma = K_sigma^(P^-1)",
        bad == 0,
        f"{len(maps)} maps x {len(sigmas)} matchings, {bad} failures",
    )


def run_suite(m, seed=DEFAULT_SEED, bound=DEFAULT_BOUND):
    """Run every check at order ``2m``; returns a list of :class:`CheckResult`."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if bound is not None and m > bound:
        raise ValueError(f"m = {m} exceeds the enumeration bound {bound}")
    rng = random.Random(seed)
    return [
        check_census(m),
        check_count_identity(m),
        check_selfconjugate_group(m),
        check_knots(m),
        check_decomposition(m),
        check_product_rule(m, rng),
        check_coset_law(m, rng),
    ]


def format_results(results):
    return "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results)
