r"""
Fixed-edge classes of maps.

For a fixed next-edge matching ``pi`` the class ``K_rho`` holds every map
whose edge matching is ``rho``. ``K_pi`` is the subgroup of selfconjugate
maps (those commuting with ``pi``); every other ``K_rho`` is a left coset
of it. There are ``(2m-1)!!`` classes, each of size ``m! * 2^m``.

Elements of ``K_pi`` are encoded as signed permutations: a permutation of
the ``m`` pairs of ``pi`` plus one flip bit per pair.
"""

from dataclasses import dataclass
from itertools import permutations, product
from math import factorial

import numpy as np

from .maps import CombMap, MatchingMismatch, e_matching, matching_pairs, normal_matching
from .perm import Permutation, all_permutations, conjugate, format_cycles, inverse, is_matching

__all__ = [
    "DEFAULT_BOUND",
    "SignedPermutation",
    "EMatchingClass",
    "is_selfconjugate",
    "rho_of_product",
    "encode_signed",
    "decode_signed",
    "enumerate_selfconjugate",
    "double_factorial",
    "class_count",
    "class_size",
    "all_matchings",
    "census",
    "census_bruteforce",
    "format_census",
    "coset_map",
]

#: largest m enumerated by default; (2m)! = 40320 maps at m = 4
DEFAULT_BOUND = 4


def _check_bound(m, bound):
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if bound is not None and m > bound:
        raise ValueError(f"m = {m} exceeds the enumeration bound {bound}")


@dataclass(frozen=True)
class SignedPermutation:
    """
    ``pair_perm`` sends pair index ``i`` to ``j`` (1-based); ``flips[i-1]``
    says whether the smaller corner of pair ``i`` goes to the larger
    corner of pair ``j``.
    """

    pair_perm: Permutation
    flips: tuple

    def __post_init__(self):
        if len(self.flips) != len(self.pair_perm):
            raise ValueError("one flip per pair required")


def is_selfconjugate(M):
    """True iff ``P^pi = P``, i.e. the edge matching equals ``pi``."""
    return conjugate(M.p, M.pi) == M.p


def rho_of_product(S, T):
    """Edge matching of ``S*T`` predicted as ``rho_T^{S^{-1}}``."""
    if S.pi != T.pi:
        raise MatchingMismatch("maps over different matchings")
    return conjugate(e_matching(T), inverse(S.p))


def encode_signed(M):
    if not is_selfconjugate(M):
        raise ValueError(f"{M!r} is not selfconjugate")
    pairs = matching_pairs(M.pi)
    index = {}
    for j, (a, b) in enumerate(pairs, 1):
        index[a] = (j, False)
        index[b] = (j, True)
    perm = []
    flips = []
    for a, _ in pairs:
        j, big = index[M.p(a)]
        perm.append(j)
        flips.append(big)
    return SignedPermutation(Permutation(perm), tuple(flips))


def decode_signed(sp, pi):
    pairs = matching_pairs(pi)
    if len(pairs) != len(sp.pair_perm):
        raise ValueError("signed permutation does not fit the matching")
    img = [0] * len(pi)
    for i, (a, b) in enumerate(pairs, 1):
        c, d = pairs[sp.pair_perm(i) - 1]
        if sp.flips[i - 1]:
            c, d = d, c
        img[a - 1] = c
        img[b - 1] = d
    return CombMap(Permutation(img, check=False), pi)


def enumerate_selfconjugate(m, pi=None, bound=DEFAULT_BOUND):
    """
    Yield the ``m! * 2^m`` selfconjugate maps over ``pi`` (normal matching
    by default) by decoding every signed permutation.
    """
    _check_bound(m, bound)
    if pi is None:
        pi = normal_matching(m)
    for perm in permutations(range(1, m + 1)):
        pp = Permutation(perm, check=False)
        for flips in product((False, True), repeat=m):
            yield decode_signed(SignedPermutation(pp, flips), pi)


def double_factorial(k):
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def class_count(m):
    """Number of fixed-edge classes, ``(2m-1)!!``."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return double_factorial(2 * m - 1)


def class_size(m):
    """Size of each class, ``m! * 2^m``."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return factorial(m) * 2**m


def all_matchings(n):
    """Every perfect matching on ``n`` corners, in lexicographic pair order."""

    def rec(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for k in range(1, len(rest)):
            for tail in rec(rest[1:k] + rest[k + 1:]):
                yield [(a, rest[k])] + tail

    for pairs in rec(list(range(1, n + 1))):
        img = [0] * n
        for a, b in pairs:
            img[a - 1], img[b - 1] = b, a
        yield Permutation(img, check=False)


class EMatchingClass:
    """The class ``K_rho`` of maps over ``pi`` whose edge matching is ``rho``."""

    def __init__(self, rho, pi):
        if len(rho) != len(pi) or not is_matching(rho):
            raise ValueError(f"{format_cycles(rho)} is not a matching of order {len(pi)}")
        self.rho = rho
        self.pi = pi

    def __len__(self):
        return class_size(len(self.pi) // 2)

    def __contains__(self, M):
        return M.pi == self.pi and e_matching(M) == self.rho

    def representative(self):
        """A map in the class; its inverse sends ``pi``-pairs onto ``rho``-pairs."""
        src = matching_pairs(self.pi)
        dst = matching_pairs(self.rho)
        img = [0] * len(self.pi)
        # A = P^{-1} must map pi-pairs to rho-pairs
        for (a, b), (c, d) in zip(src, dst):
            img[a - 1], img[b - 1] = c, d
        return CombMap(inverse(Permutation(img, check=False)), self.pi)

    def members(self):
        """Yield ``R * K_pi`` for a representative ``R``."""
        R = self.representative()
        for A in enumerate_selfconjugate(len(self.pi) // 2, self.pi, bound=None):
            yield R * A


def coset_map(M, sigma):
    """The class that ``M * K_sigma`` lands in: ``sigma^{P^{-1}}``."""
    if len(sigma) != M.n or not is_matching(sigma):
        raise ValueError(f"{format_cycles(sigma)} is not a matching of order {M.n}")
    return conjugate(sigma, inverse(M.p))


def census(m, pi=None, bound=DEFAULT_BOUND):
    """
    Enumerate all ``(2m)!`` maps over ``pi`` and count them by edge matching.

    Returns a dict ``{rho: count}`` ordered by the canonical cycle string
    of ``rho``.
    """
    _check_bound(m, bound)
    if pi is None:
        pi = normal_matching(m)
    n = 2 * m
    dtype = np.int8 if n < 127 else np.int32
    P = np.array(list(permutations(range(n))), dtype=dtype)
    Pinv = np.empty_like(P)
    rows = np.arange(P.shape[0])[:, None]
    Pinv[rows, P] = np.arange(n, dtype=dtype)
    pi0 = np.array([x - 1 for x in pi.images], dtype=np.intp)
    # c^rho = ((c^P)^pi)^{P^{-1}}
    rho = np.take_along_axis(Pinv, pi0[P.astype(np.intp)], axis=1)
    keys, counts = np.unique(rho, axis=0, return_counts=True)
    table = {
        Permutation([int(x) + 1 for x in k], check=False): int(c) for k, c in zip(keys, counts)
    }
    return _sorted_table(table)


def census_bruteforce(m, pi=None, bound=DEFAULT_BOUND):
    """Same table as :func:`census`, one map at a time."""
    _check_bound(m, bound)
    if pi is None:
        pi = normal_matching(m)
    table = {}
    for P in all_permutations(2 * m):
        rho = e_matching(CombMap(P, pi))
        table[rho] = table.get(rho, 0) + 1
    return _sorted_table(table)


def _sorted_table(table):
    return dict(sorted(table.items(), key=lambda kv: format_cycles(kv[0])))


def format_census(table, fmt="text"):
    if fmt == "lines":
        return "\n".join(f"{format_cycles(r)}\t{c}" for r, c in table.items())
    width = max(len(format_cycles(r)) for r in table)
    out = [f"{'rho':<{width}}  count"]
    out += [f"{format_cycles(r):<{width}}  {c}" for r, c in table.items()]
    out.append(f"classes={len(table)} total={sum(table.values())}")
    return "\n".join(out)
