r"""
Combinatorial maps over a fixed next-edge matching.

A map is stored as ``(P, pi)``: ``P`` is the vertex rotation and ``pi`` a
fixed-point-free involution (the next-edge matching). The face permutation
``Q = P*pi`` is derived. For a fixed ``pi`` every permutation ``P`` is a map
and maps multiply like their vertex permutations, so the maps over ``pi``
form a copy of the symmetric group on ``2m`` corners.

    >>> from combmaps.maps import make_map, normal_matching, e_matching
    >>> from combmaps.perm import parse_cycles, format_cycles
    >>> M = make_map(parse_cycles("(1 3)", 4), normal_matching(2))
    >>> format_cycles(M.q), format_cycles(e_matching(M))
    ('(1 4 3 2)', '(1 4)(2 3)')
"""

import json

from .perm import (
    compose,
    cycle_to_transpositions,
    conjugate,
    cycles,
    format_cycles,
    from_cycles,
    identity,
    inverse,
    is_matching,
    parse_cycles,
    transposition,
)

__all__ = [
    "CombMap",
    "MatchingMismatch",
    "make_map",
    "normal_matching",
    "identity_map",
    "face_permutation",
    "dual",
    "reverse",
    "multiply",
    "e_matching",
    "edges",
    "next_edges",
    "matching_pairs",
    "apply_transposition",
    "build_from_transpositions",
    "transposition_sequence",
    "map_to_dict",
    "map_from_dict",
    "dumps",
    "loads",
]


class MatchingMismatch(ValueError):
    """Two maps with different next-edge matchings were combined."""


class CombMap:
    """
    A combinatorial map ``(P, P*pi)``.

    Use :func:`make_map` for validated construction.
    """

    __slots__ = ("p", "pi")

    def __init__(self, p, pi):
        if len(p) != len(pi):
            raise ValueError(f"vertex permutation has order {len(p)}, matching has order {len(pi)}")
        if len(pi) % 2:
            raise ValueError(f"odd order {len(pi)}")
        if not is_matching(pi):
            raise ValueError(f"{format_cycles(pi)} is not a matching")
        q = compose(p, pi)
        # P and Q must be differing permutations
        assert all(p(i) != q(i) for i in range(1, len(p) + 1))
        self.p = p
        self.pi = pi

    @property
    def q(self):
        """The face permutation ``P*pi``."""
        return compose(self.p, self.pi)

    @property
    def n(self):
        return len(self.p)

    @property
    def m(self):
        return len(self.p) // 2

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, CombMap):
            return NotImplemented
        return self.p == other.p and self.pi == other.pi

    def __hash__(self):
        return hash((self.p, self.pi))

    def __repr__(self):
        return f"CombMap(p={format_cycles(self.p)!r}, pi={format_cycles(self.pi)!r})"


def make_map(p, pi):
    return CombMap(p, pi)


def normal_matching(m):
    """
    The matching ``(1 2)(3 4)...(2m-1 2m)``.

    >>> str(normal_matching(3))
    '(1 2)(3 4)(5 6)'
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return from_cycles([(2 * i - 1, 2 * i) for i in range(1, m + 1)], 2 * m)


def identity_map(pi):
    """``(I, pi)``: ``m`` isolated edges."""
    return CombMap(identity(len(pi)), pi)


def face_permutation(M):
    return M.q


def dual(M):
    """The map ``(Q, P)``; its vertex permutation is ``P*pi``."""
    return CombMap(M.q, M.pi)


def reverse(M):
    """The reversed map ``(P^{-1}, P^{-1}*pi)``."""
    return CombMap(inverse(M.p), M.pi)


def multiply(S, T):
    """
    Product of two maps sharing a next-edge matching.

    ``(S1, S2)*(T1, T2) = (S1*T1, S1*T1*pi)``.
    """
    if S.pi != T.pi:
        raise MatchingMismatch(
            f"maps over different matchings {format_cycles(S.pi)} and {format_cycles(T.pi)}"
        )
    return CombMap(compose(S.p, T.p), S.pi)


def e_matching(M):
    """
    Edge matching ``rho = P*pi*P^{-1}``; the unique matching with
    ``rho*P = P*pi``.
    """
    return conjugate(M.pi, inverse(M.p))


def matching_pairs(sigma):
    """Transpositions of an involution as ``(a, b)``, ``a < b``, sorted."""
    return tuple(c for c in cycles(sigma) if len(c) == 2)


def edges(M):
    return matching_pairs(e_matching(M))


def next_edges(M):
    return matching_pairs(M.pi)


def apply_transposition(a, b, M):
    """
    Return the map with vertex permutation ``(a b)*P``.

    Joins the vertices at corners ``a`` and ``b`` or, if one vertex holds
    both corners, splits it.
    """
    t = transposition(a, b, M.n)
    out = CombMap(compose(t, M.p), M.pi)
    before = len(cycles(M.p))
    after = len(cycles(out.p))
    assert abs(after - before) == 1
    return out


def build_from_transpositions(ts, pi):
    """
    Chain ``P_0 = I``, ``P_k = (a_k b_k)*P_{k-1}``; returns all ``l+1`` maps.
    """
    chain = [identity_map(pi)]
    for a, b in ts:
        chain.append(apply_transposition(a, b, chain[-1]))
    return chain


def transposition_sequence(P):
    """
    Pairs ``(a_1 b_1), ..., (a_l b_l)`` whose chain from
    :func:`build_from_transpositions` ends at ``P``.
    """
    factors = []
    for c in cycles(P):
        factors.extend(cycle_to_transpositions(c))
    # P = (a_l b_l)...(a_1 b_1), so the chain consumes the factors in reverse
    return factors[::-1]


def map_to_dict(M):
    return {"n": M.n, "p": format_cycles(M.p), "pi": format_cycles(M.pi)}


def map_from_dict(d):
    n = int(d["n"])
    pi = parse_cycles(d["pi"], n) if d.get("pi") else normal_matching(n // 2)
    return make_map(parse_cycles(d.get("p", ""), n), pi)


def dumps(M):
    return json.dumps(map_to_dict(M))


def loads(text):
    return map_from_dict(json.loads(text))

