from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combmaps.perm import (
    Permutation,
    all_permutations,
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
from oracle import as_dict, dict_from_cycles, inv, then


@st.composite
def perms(draw, n=None):
    if n is None:
        n = draw(st.integers(1, 9))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_triples(draw):
    n = draw(st.integers(1, 9))
    return draw(perms(n)), draw(perms(n)), draw(perms(n))


def test_compose_worked_example():
    P = parse_cycles("(1 3)", 4)
    Q = parse_cycles("(1 2)(3 4)", 4)
    expected = then(dict_from_cycles([(1, 3)], 4), dict_from_cycles([(1, 2), (3, 4)], 4))
    assert expected == {1: 4, 2: 1, 3: 2, 4: 3}
    R = compose(P, Q)
    assert as_dict(R) == expected
    assert format_cycles(R) == "(1 4 3 2)"
    assert P * Q == R


def test_compose_identity_and_inverse():
    P = parse_cycles("(1 3 2)(4 5)", 6)
    assert compose(P, identity(6)) == P
    assert compose(identity(6), P) == P
    assert compose(P, inverse(P)) == identity(6)


def test_compose_order_mismatch():
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))
    with pytest.raises(ValueError):
        conjugate(identity(3), identity(4))


@pytest.mark.parametrize(
    "text, n, expected",
    [("(1 2 3)", 3, "(1 3 2)"), ("", 4, "()"), ("(1 2)(3 4)", 4, "(1 2)(3 4)"), ("(1 4)(2 3)(5 6)", 6, "(1 4)(2 3)(5 6)")],
)
def test_inverse(text, n, expected):
    assert format_cycles(inverse(parse_cycles(text, n))) == expected


def test_conjugate_examples():
    P = parse_cycles("(1 2)(3 4)", 4)
    assert conjugate(P, identity(4)) == P
    Q = parse_cycles("(1 2 3 4)", 4)
    # relabel (1 2)(3 4) through 1->2, 2->3, 3->4, 4->1
    assert conjugate(P, Q) == from_cycles([(2, 3), (4, 1)], 4)
    assert P ^ Q == conjugate(P, Q)


@given(perm_triples())
def test_conjugate_matches_definition(t):
    P, Q, _ = t
    expected = then(inv(as_dict(Q)), as_dict(P), as_dict(Q))
    assert as_dict(conjugate(P, Q)) == expected


@given(perm_triples())
def test_group_axioms(t):
    P, Q, R = t
    e = identity(len(P))
    assert (P * Q) * R == P * (Q * R)
    assert P * e == e * P == P
    assert P * ~P == ~P * P == e


@given(perm_triples())
def test_conjugation_laws(t):
    P, Q, R = t
    assert conjugate(conjugate(P, Q), R) == conjugate(P, compose(Q, R))
    assert conjugate(compose(P, Q), R) == compose(conjugate(P, R), conjugate(Q, R))


@given(perm_triples())
def test_conjugation_relabels_cycles(t):
    P, Q, _ = t
    relabelled = {tuple(sorted(Q(c) for c in cyc)) for cyc in cycles(P)}
    assert relabelled == {tuple(sorted(cyc)) for cyc in cycles(conjugate(P, Q))}
    for cyc in cycles(P):
        img = [Q(c) for c in cyc]
        R = conjugate(P, Q)
        assert all(R(img[i]) == img[(i + 1) % len(img)] for i in range(len(img)))


def test_cycles_examples():
    assert cycles(identity(4)) == ((1,), (2,), (3,), (4,))
    assert cycles(Permutation([2, 1, 4, 3])) == ((1, 2), (3, 4))
    assert cycles(Permutation([4, 1, 2, 3])) == ((1, 4, 3, 2),)
    assert format_cycles(identity(4)) == "()"


def test_round_trip_exhaustive_n4():
    for P in all_permutations(4):
        assert parse_cycles(format_cycles(P), 4) == P
        assert from_cycles(cycles(P), 4) == P


@given(perms())
def test_round_trip_sampled(P):
    assert parse_cycles(format_cycles(P), len(P)) == P
    assert Permutation(P.images) == P


def test_parse_cycles():
    assert parse_cycles("(1 2)(3 4)", 4).images == (2, 1, 4, 3)
    assert parse_cycles("", 4) == identity(4)
    assert parse_cycles("()", 4) == identity(4)
    assert parse_cycles(" (1,2) ( 3  4 ) ", 4) == parse_cycles("(1 2)(3 4)", 4)
    assert parse_cycles("(3)", 4) == identity(4)


@pytest.mark.parametrize("text", ["(1 2)(2 3)", "(1 5)", "(0 1)", "(1 2", "1 2", "(a b)", "(1 2)x", "((1 2))"])
def test_parse_cycles_errors(text):
    with pytest.raises(ValueError):
        parse_cycles(text, 4)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        Permutation([1, 4, 2])


def test_involution_and_matching():
    pi = parse_cycles("(1 2)(3 4)", 4)
    assert is_involution(pi) and is_matching(pi)
    t = parse_cycles("(1 2)", 4)
    assert is_involution(t) and not is_matching(t)
    c = parse_cycles("(1 2 3)", 3)
    assert not is_involution(c) and not is_matching(c)
    assert not is_matching(parse_cycles("(1 2)", 3))
    assert inverse(pi) == pi


def test_cycle_to_transpositions_formula():
    assert cycle_to_transpositions(("a", "b", "c")) == [("c", "b"), ("b", "a")]
    assert cycle_to_transpositions((7,)) == []


@pytest.mark.parametrize("k", range(1, 9))
def test_cycle_to_transpositions_recomposes(k):
    # every k-cycle on k corners, up to rotation
    for rest in permutations(range(2, k + 1)):
        cyc = (1,) + rest
        ts = cycle_to_transpositions(cyc)
        assert len(ts) == k - 1
        d = {c: c for c in range(1, k + 1)}
        for a, b in ts:
            d = then(d, dict_from_cycles([(a, b)], k))
        assert d == dict_from_cycles([cyc], k)
        if k > 6:
            break
