from itertools import permutations, product
from math import factorial

import pytest

from combmaps.classes import (
    EMatchingClass,
    SignedPermutation,
    all_matchings,
    census,
    census_bruteforce,
    class_count,
    class_size,
    coset_map,
    decode_signed,
    double_factorial,
    encode_signed,
    enumerate_selfconjugate,
    format_census,
    is_selfconjugate,
    rho_of_product,
)
from combmaps.maps import e_matching, identity_map, make_map, multiply, normal_matching, reverse
from combmaps.perm import Permutation, all_permutations, compose, format_cycles, identity, parse_cycles
from combmaps.verify import random_map
from oracle import as_dict

PI = parse_cycles("(1 2)(3 4)", 4)


def m(text, pi=PI):
    return make_map(parse_cycles(text, len(pi)), pi)


def commutes_with(P, pi):
    p, q = as_dict(P), as_dict(pi)
    return all(q[p[c]] == p[q[c]] for c in p)


def test_is_selfconjugate_examples():
    assert is_selfconjugate(identity_map(PI))
    assert is_selfconjugate(m("(1 2)(3 4)"))
    assert not is_selfconjugate(m("(1 3)"))
    assert is_selfconjugate(m("(1 3)(2 4)"))


def test_is_selfconjugate_agrees_with_commutant_n6():
    pi = normal_matching(3)
    for P in all_permutations(6):
        M = make_map(P, pi)
        assert is_selfconjugate(M) == commutes_with(P, pi) == (e_matching(M) == pi)


def test_rho_of_product(rng):
    I = identity_map(PI)
    T = m("(1 3 2)")
    assert rho_of_product(I, T) == e_matching(T)
    pi = normal_matching(4)
    K = list(enumerate_selfconjugate(4, pi))
    for _ in range(100):
        S = random_map(pi, rng)
        T = K[rng.randrange(len(K))]
        assert rho_of_product(S, T) == e_matching(multiply(S, T)) == e_matching(S)
    for S in K[:20]:
        for T in K[-20:]:
            assert rho_of_product(S, T) == pi


@pytest.mark.parametrize("k", [1, 2, 3])
def test_enumerate_selfconjugate_matches_filter(k):
    pi = normal_matching(k)
    got = list(enumerate_selfconjugate(k, pi))
    brute = {P for P in all_permutations(2 * k) if commutes_with(P, pi)}
    assert len(got) == len(set(got)) == factorial(k) * 2**k
    assert {M.p for M in got} == brute
    assert all(is_selfconjugate(M) for M in got)


def test_enumerate_selfconjugate_m1():
    got = {format_cycles(M.p) for M in enumerate_selfconjugate(1)}
    assert got == {"()", "(1 2)"}


def test_enumerate_selfconjugate_bound():
    with pytest.raises(ValueError):
        list(enumerate_selfconjugate(5))
    assert sum(1 for _ in enumerate_selfconjugate(5, bound=5)) == 3840


def test_enumerate_selfconjugate_general_pi():
    pi = parse_cycles("(1 4)(2 6)(3 5)", 6)
    got = {M.p for M in enumerate_selfconjugate(3, pi)}
    assert got == {P for P in all_permutations(6) if commutes_with(P, pi)}


def test_encode_examples():
    sp = encode_signed(identity_map(PI))
    assert sp.pair_perm == identity(2) and sp.flips == (False, False)
    sp = encode_signed(m("(1 2)(3 4)"))
    assert sp.pair_perm == identity(2) and sp.flips == (True, True)
    # (1 4 2 3): pair 1 -> pair 2 with 1 -> 4 (flipped); pair 2 -> pair 1 with 3 -> 1 (kept)
    sp = encode_signed(m("(1 4 2 3)"))
    assert sp.pair_perm == Permutation([2, 1]) and sp.flips == (True, False)
    with pytest.raises(ValueError):
        encode_signed(m("(1 3)"))


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_signed_round_trip(k):
    pi = normal_matching(k)
    K = list(enumerate_selfconjugate(k, pi))
    codes = [encode_signed(M) for M in K]
    assert len(set(codes)) == len(K)
    assert all(decode_signed(c, pi) == M for c, M in zip(codes, K))
    for perm in permutations(range(1, k + 1)):
        for flips in product((False, True), repeat=k):
            sp = SignedPermutation(Permutation(perm), flips)
            assert encode_signed(decode_signed(sp, pi)) == sp


def test_signed_general_pi_round_trip():
    pi = parse_cycles("(1 6)(2 3)(4 5)", 6)
    for M in enumerate_selfconjugate(3, pi):
        assert decode_signed(encode_signed(M), pi) == M


def test_double_factorial():
    assert [double_factorial(k) for k in range(-1, 10)] == [1, 1, 1, 2, 3, 8, 15, 48, 105, 384, 945]


@pytest.mark.parametrize("k, count, size", [(1, 1, 2), (2, 3, 8), (3, 15, 48), (4, 105, 384)])
def test_class_count_and_size(k, count, size):
    assert class_count(k) == count
    assert class_size(k) == size
    assert count * size == factorial(2 * k)


def test_count_identity_large():
    for k in range(1, 30):
        assert class_count(k) * class_size(k) == factorial(2 * k)
    with pytest.raises(ValueError):
        class_count(0)


def test_all_matchings():
    for n in (2, 4, 6, 8):
        ms = list(all_matchings(n))
        assert len(ms) == len(set(ms)) == double_factorial(n - 1)
    assert [format_cycles(s) for s in all_matchings(4)] == ["(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]


def test_census_m1():
    assert census(1) == {parse_cycles("(1 2)", 2): 2}


def test_census_m2():
    table = census(2)
    assert list(table) == list(all_matchings(4))
    assert list(table.values()) == [8, 8, 8]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_census_matches_bruteforce(k):
    fast = census(k)
    slow = census_bruteforce(k)
    assert fast == slow
    assert list(fast) == list(slow)
    assert len(fast) == class_count(k)
    assert set(fast.values()) == {class_size(k)}


def test_census_general_pi():
    pi = parse_cycles("(1 3)(2 4)", 4)
    assert census(2, pi) == census_bruteforce(2, pi)


def test_census_bound():
    with pytest.raises(ValueError):
        census(5)


def test_format_census():
    table = census(2)
    assert format_census(table, "lines") == "(1 2)(3 4)\t8\n(1 3)(2 4)\t8\n(1 4)(2 3)\t8"
    text = format_census(table)
    assert text.splitlines()[-1] == "classes=3 total=24"


def test_ematching_class_members():
    for sigma in all_matchings(6):
        K = EMatchingClass(sigma, normal_matching(3))
        members = list(K.members())
        assert len(members) == len(set(members)) == len(K) == 48
        assert all(M in K for M in members)
        brute = {P for P in all_permutations(6) if e_matching(make_map(P, K.pi)) == sigma}
        assert {M.p for M in members} == brute
    with pytest.raises(ValueError):
        EMatchingClass(parse_cycles("(1 2)", 4), PI)


def test_selfconjugate_group_axioms_m3():
    pi = normal_matching(3)
    K = set(enumerate_selfconjugate(3, pi))
    assert identity_map(pi) in K
    for S in K:
        assert reverse(S) in K
        for T in K:
            assert multiply(S, T) in K


def test_coset_map_examples():
    I = identity_map(PI)
    for sigma in all_matchings(4):
        assert coset_map(I, sigma) == sigma
    M = m("(1 3)")
    assert coset_map(M, PI) == e_matching(M) == parse_cycles("(1 4)(2 3)", 4)
    with pytest.raises(ValueError):
        coset_map(M, parse_cycles("(1 2)", 4))


def test_coset_law_m2():
    pi = PI
    classes = {s: {M.p for M in EMatchingClass(s, pi).members()} for s in all_matchings(4)}
    for P in all_permutations(4):
        M = make_map(P, pi)
        for s, members in classes.items():
            image = {compose(P, Q) for Q in members}
            assert image == classes[coset_map(M, s)]
