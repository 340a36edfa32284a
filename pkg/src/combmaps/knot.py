r"""
Well colorings and combinatorial knots.

Starting from a corner ``c1`` the alternating walk ``c2 = c1^pi``,
``c3 = c2^rho``, ``c4 = c3^pi``, ... closes after an even number of steps.
Coloring odd positions ``C1`` and even positions ``C2`` gives a well
coloring: every ``pi``-pair and every ``rho``-pair is bichromatic. The knot
``mu`` follows ``pi`` on ``C1`` and ``rho`` on ``C2``; its cycles are the
walks, it depends only on ``pi`` and ``rho``, and ``pi^mu = rho``.

    >>> from combmaps.maps import make_map, normal_matching
    >>> from combmaps.perm import parse_cycles
    >>> K = knot_of(make_map(parse_cycles("(1 3)", 4), normal_matching(2)))
    >>> str(K.mu), K.coloring.colors
    ('(1 2 3 4)', (1, 2, 1, 2))
"""

from dataclasses import dataclass

from .maps import CombMap, e_matching
from .perm import Permutation, compose, conjugate, cycles, inverse

__all__ = [
    "C1",
    "C2",
    "WellColoring",
    "Knot",
    "well_coloring_of",
    "well_color",
    "knot_from_matchings",
    "knot_of",
    "check_knot",
    "reverse_knot_cycle",
    "decompose",
    "knot_map",
]

C1 = 1
C2 = 2


@dataclass(frozen=True)
class WellColoring:
    """``colors[c-1]`` is ``C1`` or ``C2``; ``walks`` are the traversal cycles."""

    colors: tuple
    walks: tuple

    def color(self, c):
        return self.colors[c - 1]

    def part(self, which):
        return tuple(i for i, k in enumerate(self.colors, 1) if k == which)


@dataclass(frozen=True)
class Knot:
    mu: Permutation
    coloring: WellColoring
    pi: Permutation
    rho: Permutation


def well_coloring_of(pi, rho):
    """
    Alternating ``pi``/``rho`` traversal. Each walk starts at the smallest
    uncolored corner, which goes to ``C1``.
    """
    n = len(pi)
    colors = [0] * n
    walks = []
    for start in range(1, n + 1):
        if colors[start - 1]:
            continue
        walk = []
        c = start
        while True:
            walk.append(c)
            colors[c - 1] = C1
            d = pi(c)
            walk.append(d)
            colors[d - 1] = C2
            c = rho(d)
            if c == start:
                break
            if colors[c - 1]:
                raise AssertionError(f"walk from {start} re-entered corner {c}")
        walks.append(tuple(walk))
    return WellColoring(tuple(colors), tuple(walks))


def well_color(M):
    return well_coloring_of(M.pi, e_matching(M))


def _mu(pi, rho, colors):
    return Permutation(
        [pi(c) if colors[c - 1] == C1 else rho(c) for c in range(1, len(pi) + 1)],
        check=False,
    )


def knot_from_matchings(pi, rho):
    wc = well_coloring_of(pi, rho)
    return Knot(_mu(pi, rho, wc.colors), wc, pi, rho)


def knot_of(M):
    """The canonical knot of ``M``; identical across its fixed-edge class."""
    return knot_from_matchings(M.pi, e_matching(M))


def check_knot(K):
    """Raise ``AssertionError`` unless ``K`` satisfies every knot invariant."""
    pi, rho, col = K.pi, K.rho, K.coloring.colors
    for a, b in ((c, pi(c)) for c in range(1, len(pi) + 1)):
        assert col[a - 1] != col[b - 1], f"pi-pair ({a} {b}) is monochromatic"
    for a, b in ((c, rho(c)) for c in range(1, len(rho) + 1)):
        assert col[a - 1] != col[b - 1], f"rho-pair ({a} {b}) is monochromatic"
    for w in K.coloring.walks:
        assert len(w) % 2 == 0, f"odd walk {w}"
        assert all(col[c - 1] == (C1 if i % 2 == 0 else C2) for i, c in enumerate(w))
    assert K.mu == _mu(pi, rho, col)
    assert conjugate(pi, K.mu) == rho


def reverse_knot_cycle(K, index):
    """
    Reverse the orientation of one cycle of ``K.mu``, indexed in canonical
    cycle order (0-based). Colors on that cycle swap.
    """
    cyc = cycles(K.mu)
    if not 0 <= index < len(cyc):
        raise IndexError(f"knot has {len(cyc)} cycles, no cycle {index}")
    target = set(cyc[index])
    colors = tuple(
        (C2 if k == C1 else C1) if c in target else k for c, k in enumerate(K.coloring.colors, 1)
    )
    walks = []
    for w in K.coloring.walks:
        if w[0] in target:
            # reversed walk, restarted at its (new) C1 corner w[1]
            w = (w[1], w[0]) + tuple(reversed(w[2:]))
        walks.append(w)
    wc = WellColoring(colors, tuple(walks))
    return Knot(_mu(K.pi, K.rho, colors), wc, K.pi, K.rho)


def knot_map(K):
    """The knot as a map over ``pi``."""
    return CombMap(K.mu, K.pi)


def decompose(M):
    """
    Split ``M`` as ``mu * A`` with ``mu`` its knot and ``A`` selfconjugate.

    Returns ``(knot, A)``.
    """
    K = knot_of(M)
    A = CombMap(compose(inverse(K.mu), M.p), M.pi)
    return K, A
