"""
Maps as permutations
====================

A map is a vertex rotation P over a fixed next-edge matching pi. Every
permutation of the 2m corners is a map, and maps multiply like permutations.
"""

from combmaps import (
    apply_transposition,
    build_from_transpositions,
    dual,
    e_matching,
    edges,
    identity_map,
    make_map,
    multiply,
    normal_matching,
    parse_cycles,
    reverse,
)
from combmaps.maps import transposition_sequence

# Products are read left to right: c^(P*Q) = (c^P)^Q.
pi = normal_matching(2)
print("pi =", pi)

M = make_map(parse_cycles("(1 3)", 4), pi)
print("P =", M.p, " faces P*pi =", M.q)

# The edge matching rho = P*pi*P^-1 holds the edges of the map.
print("rho =", e_matching(M), " edges:", edges(M))

# The identity map (I, pi) is m isolated edges; its dual (pi, I) is m loops.
I = identity_map(pi)
print("identity:", I, " dual:", dual(I))

# Multiplying by the reversed map gives back the identity.
print("M * reverse(M) =", multiply(M, reverse(M)))

# (a b)*P joins two vertices at corners a, b or splits the vertex holding both.
print("join 2 and 4:", apply_transposition(2, 4, M).p)

# Any map grows out of the identity by such joins and splits.
P = parse_cycles("(1 5 2)(3 6 4)", 6)
chain = build_from_transpositions(transposition_sequence(P), normal_matching(3))
for step in chain:
    print("  ", step.p)
