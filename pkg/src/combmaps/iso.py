r"""
Isomorphism of maps as simultaneous conjugacy.

``(P, P*pi1)`` and ``(Q, Q*pi2)`` are isomorphic when some ``A`` satisfies
``pi2^A = pi1`` and ``Q^A = P``. Equivalently ``A`` carries the corner
structure of the second map onto the first: ``A(c^Q) = A(c)^P`` and
``A(c^pi2) = A(c)^pi1``. The witness ``A`` lies in the selfconjugate
subgroup of ``pi1`` exactly when the two maps share their matching.
"""

from itertools import permutations, product

from .maps import matching_pairs
from .perm import Permutation, conjugate, cycle_type, cycles

__all__ = [
    "DEFAULT_MAX_ORDER",
    "matching_conjugators",
    "are_isomorphic",
    "is_witness",
    "same_class_criterion",
]

DEFAULT_MAX_ORDER = 12


def matching_conjugators(pi2, pi1):
    """
    Yield every ``A`` with ``pi2^A = pi1``: a bijection of pairs plus an
    orientation per pair, ``m! * 2^m`` in all.
    """
    src = matching_pairs(pi2)
    dst = matching_pairs(pi1)
    m = len(src)
    for perm in permutations(range(m)):
        for flips in product((False, True), repeat=m):
            img = [0] * len(pi1)
            for (a, b), j, f in zip(src, perm, flips):
                c, d = dst[j]
                if f:
                    c, d = d, c
                img[a - 1], img[b - 1] = c, d
            yield Permutation(img, check=False)


def is_witness(M1, M2, A):
    return conjugate(M2.pi, A) == M1.pi and conjugate(M2.p, A) == M1.p


def _vertex_face_sizes(M):
    # per corner: (length of its vertex cycle, length of its face cycle)
    sizes = [[0, 0] for _ in range(M.n)]
    for k, perm in enumerate((M.p, M.q)):
        for c in cycles(perm):
            for x in c:
                sizes[x - 1][k] = len(c)
    return [tuple(s) for s in sizes]


def _propagate_search(M1, M2):
    n = M1.n
    P, Pinv, pi1 = M1.p._img, (~M1.p)._img, M1.pi._img
    Q, Qinv, pi2 = M2.p._img, (~M2.p)._img, M2.pi._img
    gens = ((Q, P), (Qinv, Pinv), (pi2, pi1))
    lab1 = _vertex_face_sizes(M1)
    lab2 = _vertex_face_sizes(M2)
    A = [-1] * n
    used = [False] * n

    def extend(c, t, trail):
        stack = [(c, t)]
        while stack:
            x, y = stack.pop()
            if A[x] == y:
                continue
            if A[x] != -1 or used[y] or lab2[x] != lab1[y]:
                return False
            A[x] = y
            used[y] = True
            trail.append(x)
            for g2, g1 in gens:
                stack.append((g2[x], g1[y]))
        return True

    def search():
        try:
            c = A.index(-1)
        except ValueError:
            return True
        for t in range(n):
            if used[t] or lab1[t] != lab2[c]:
                continue
            trail = []
            if extend(c, t, trail) and search():
                return True
            for x in trail:
                used[A[x]] = False
                A[x] = -1
        return False

    if search():
        return Permutation._from_zero(tuple(A))
    return None


def are_isomorphic(M1, M2, max_order=DEFAULT_MAX_ORDER, strategy="propagate"):
    """
    Return a conjugator ``A`` with ``M2.pi^A = M1.pi`` and ``M2.p^A = M1.p``,
    or ``None`` when the maps are not isomorphic.

    ``strategy="propagate"`` fixes the image of one corner per connected
    piece and propagates it; ``strategy="coset"`` scans all ``m! 2^m``
    conjugators of the matchings. Maps of different orders raise
    ``ValueError``, as do orders above ``max_order``.
    """
    if M1.n != M2.n:
        raise ValueError(f"maps of different orders {M1.n} and {M2.n}")
    if max_order is not None and M1.n > max_order:
        raise ValueError(f"order {M1.n} exceeds the search cap {max_order}")
    if cycle_type(M1.p) != cycle_type(M2.p) or cycle_type(M1.q) != cycle_type(M2.q):
        return None
    if strategy == "propagate":
        return _propagate_search(M1, M2)
    if strategy == "coset":
        for A in matching_conjugators(M2.pi, M1.pi):
            if conjugate(M2.p, A) == M1.p:
                return A
        return None
    raise ValueError(f"unknown strategy {strategy!r}")


def same_class_criterion(M1, M2, A):
    """
    Whether the witness ``A`` commutes with ``M1.pi``.

    The answer is cross-checked against ``M1.pi == M2.pi``; a disagreement
    raises ``AssertionError``.
    """
    if not is_witness(M1, M2, A):
        raise ValueError("A does not conjugate the second map onto the first")
    commutes = conjugate(M1.pi, A) == M1.pi
    same = M1.pi == M2.pi
    if commutes != same:
        raise AssertionError("witness membership disagrees with matching equality")
    return commutes
