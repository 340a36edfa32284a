r"""
Graph reading of a map.

Vertices are the cycles of ``P``, faces the cycles of ``P*pi`` and edges the
pairs of the edge matching ``rho``. Connected components are the orbits of
the group generated by ``P`` and ``rho``. Each component is a cellularly
embedded graph, so ``V - E + F = 2 - 2g`` for a genus ``g >= 0``.

    >>> from combmaps.maps import identity_map, normal_matching
    >>> v = view(identity_map(normal_matching(2)))
    >>> len(v.vertices), len(v.faces), len(v.edge_pairs), len(v.components)
    (4, 2, 2, 2)
"""

from dataclasses import dataclass

from .maps import e_matching, matching_pairs
from .perm import cycles

__all__ = ["GraphView", "view", "component_counts", "euler_characteristic", "genus", "export_graph"]


@dataclass(frozen=True)
class GraphView:
    vertices: tuple
    faces: tuple
    edge_pairs: tuple
    components: tuple


def _orbits(n, gens):
    comp = [0] * n
    out = []
    for start in range(1, n + 1):
        if comp[start - 1]:
            continue
        k = len(out) + 1
        orbit = []
        stack = [start]
        comp[start - 1] = k
        while stack:
            c = stack.pop()
            orbit.append(c)
            for g in gens:
                d = g(c)
                if not comp[d - 1]:
                    comp[d - 1] = k
                    stack.append(d)
        out.append(tuple(sorted(orbit)))
    return tuple(out)


def view(M):
    rho = e_matching(M)
    return GraphView(
        vertices=cycles(M.p),
        faces=cycles(M.q),
        edge_pairs=matching_pairs(rho),
        components=_orbits(M.n, (M.p, rho)),
    )


def component_counts(M):
    """``(V, E, F)`` per component, in component order."""
    v = view(M)
    where = {}
    for k, comp in enumerate(v.components):
        for c in comp:
            where[c] = k
    counts = [[0, 0, 0] for _ in v.components]
    for cyc in v.vertices:
        counts[where[cyc[0]]][0] += 1
    for a, _ in v.edge_pairs:
        counts[where[a]][1] += 1
    for cyc in v.faces:
        counts[where[cyc[0]]][2] += 1
    return [tuple(c) for c in counts]


def euler_characteristic(M):
    out = []
    for V, E, F in component_counts(M):
        chi = V - E + F
        assert chi % 2 == 0 and chi <= 2, f"bad Euler characteristic {chi}"
        out.append(chi)
    return out


def genus(M):
    return [(2 - chi) // 2 for chi in euler_characteristic(M)]


def export_graph(M, format="edge-list"):
    """
    Text export of the underlying graph.

    ``edge-list``: a ``#`` header (one line per component with V/E/F/chi/genus)
    then one ``v_i v_j`` line per edge. ``dot``: a Graphviz ``graph`` block.
    Vertex ``v_i`` is the ``i``-th vertex cycle in canonical order.
    """
    v = view(M)
    vertex_of = {}
    for i, cyc in enumerate(v.vertices, 1):
        for c in cyc:
            vertex_of[c] = i
    lines = [tuple(sorted((vertex_of[a], vertex_of[b]))) for a, b in v.edge_pairs]
    if format == "edge-list":
        out = [f"# V={len(v.vertices)} E={len(v.edge_pairs)} F={len(v.faces)}"]
        for k, ((V, E, F), chi) in enumerate(zip(component_counts(M), euler_characteristic(M)), 1):
            out.append(f"# component {k}: V={V} E={E} F={F} chi={chi} genus={(2 - chi) // 2}")
        out += [f"v{i} v{j}" for i, j in lines]
        return "\n".join(out)
    if format == "dot":
        out = ["graph map {"]
        for i, cyc in enumerate(v.vertices, 1):
            out.append(f'  v{i} [label="({" ".join(map(str, cyc))})"];')
        out += [f"  v{i} -- v{j};" for i, j in lines]
        out.append("}")
        return "\n".join(out)
    raise ValueError(f"unknown format {format!r}")
