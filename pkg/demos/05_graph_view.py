"""
Reading a map as an embedded graph
==================================

Vertices are cycles of P, faces are cycles of P*pi and edges are pairs of
rho. Per connected component V - E + F = 2 - 2g.
"""

from collections import Counter

from combmaps import export_graph, genus, identity_map, make_map, normal_matching, parse_cycles, view
from combmaps.perm import all_permutations

pi = normal_matching(2)
for text in ["()", "(1 2)(3 4)", "(1 3)", "(1 3 2 4)"]:
    M = make_map(parse_cycles(text, 4), pi)
    v = view(M)
    print(f"P={text:<12} V={len(v.vertices)} E={len(v.edge_pairs)} F={len(v.faces)} genus={genus(M)}")

print(export_graph(make_map(parse_cycles("(1 3)", 4), pi)))
print(export_graph(identity_map(pi), "dot"))

# Genus distribution of connected maps with 3 edges.
pi = normal_matching(3)
dist = Counter()
for P in all_permutations(6):
    M = make_map(P, pi)
    g = genus(M)
    if len(g) == 1:
        dist[g[0]] += 1
print("connected maps at m=3 by genus:", dict(sorted(dist.items())))
