"""
Classes with fixed edges
========================

Grouping all (2m)! maps by their edge matching gives (2m-1)!! classes of
equal size m! 2^m. The class of pi itself is the subgroup of selfconjugate
maps; the others are its left cosets.
"""

from math import factorial

from combmaps import census, class_count, class_size, encode_signed, enumerate_selfconjugate
from combmaps.classes import format_census

for m in (1, 2, 3, 4):
    k, s = class_count(m), class_size(m)
    print(f"m={m}: {k} classes x {s} maps = {k * s} = {2 * m}! = {factorial(2 * m)}")

# The census enumerates every map at m=3 and buckets it.
print(format_census(census(3)))

# Selfconjugate maps are signed permutations of the pairs of pi.
for M in list(enumerate_selfconjugate(2))[:8]:
    sp = encode_signed(M)
    print(f"{str(M.p):<14} pairs {sp.pair_perm.images} flips {[int(f) for f in sp.flips]}")
