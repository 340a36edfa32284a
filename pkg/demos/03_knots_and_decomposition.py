"""
Knots and the knot x selfconjugate decomposition
================================================

Walking alternately along pi and rho colors the corners in two colors so that
every edge and next edge is bichromatic. The knot mu follows pi on the first
color and rho on the second, and pi^mu = rho.
"""

import random

from combmaps import conjugate, decompose, e_matching, knot_of, make_map, normal_matching, parse_cycles
from combmaps.knot import reverse_knot_cycle
from combmaps.verify import random_map

pi = normal_matching(2)
M = make_map(parse_cycles("(1 3)", 4), pi)
K = knot_of(M)
print("walks:", K.coloring.walks, " colors:", K.coloring.colors)
print("mu =", K.mu, " pi^mu =", conjugate(pi, K.mu), " rho =", e_matching(M))

# Reversing a walk gives another knot of the same map.
R = reverse_knot_cycle(K, 0)
print("reversed mu =", R.mu, " still pi^mu = rho:", conjugate(pi, R.mu) == K.rho)

# Every map is its knot times a selfconjugate map.
K, A = decompose(M)
print("P =", M.p, "=", K.mu, "*", A.p)

rng = random.Random(0)
M = random_map(normal_matching(6), rng)
K, A = decompose(M)
print("random P =", M.p)
print("  mu =", K.mu)
print("  A  =", A.p, " commutes with pi:", conjugate(A.p, A.pi) == A.p)
