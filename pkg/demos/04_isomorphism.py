"""
Isomorphism as simultaneous conjugacy
=====================================

Two maps are isomorphic when one permutation A conjugates both the matching
and the rotation of the second map onto the first. A lies in the
selfconjugate subgroup exactly when both maps share their matching.
"""

import random

from combmaps import are_isomorphic, conjugate, inverse, make_map, normal_matching, same_class_criterion
from combmaps.verify import random_map, random_permutation

rng = random.Random(3)
pi = normal_matching(4)
M1 = random_map(pi, rng)

# Relabel M1 by a random permutation; the search recovers some witness.
A = random_permutation(8, rng)
M2 = make_map(conjugate(M1.p, inverse(A)), conjugate(pi, inverse(A)))
W = are_isomorphic(M1, M2)
print("M1 =", M1)
print("M2 =", M2)
print("witness =", W, " same matching:", same_class_criterion(M1, M2, W))

# Cycle types of vertices and faces must agree; these two maps differ.
M3 = random_map(pi, rng)
print("M1 ~ M3:", are_isomorphic(M1, M3))
