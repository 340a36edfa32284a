"""Combinatorial maps as pairs of permutations."""

from .perm import (
    Permutation,
    compose,
    conjugate,
    cycle_to_transpositions,
    cycles,
    format_cycles,
    from_cycles,
    identity,
    inverse,
    is_involution,
    is_matching,
    parse_cycles,
)
from .maps import (
    CombMap,
    MatchingMismatch,
    apply_transposition,
    build_from_transpositions,
    dual,
    e_matching,
    edges,
    face_permutation,
    identity_map,
    make_map,
    multiply,
    next_edges,
    normal_matching,
    reverse,
)
from .classes import (
    EMatchingClass,
    SignedPermutation,
    census,
    class_count,
    class_size,
    coset_map,
    decode_signed,
    encode_signed,
    enumerate_selfconjugate,
    is_selfconjugate,
    rho_of_product,
)
from .knot import Knot, WellColoring, decompose, knot_of, reverse_knot_cycle, well_color
from .iso import are_isomorphic, same_class_criterion
from .graph import GraphView, euler_characteristic, export_graph, genus, view

__version__ = "0.1.0"
