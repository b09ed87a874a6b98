"""Bit-packed GF(2) subspace arithmetic against brute-force oracles."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fingeom import gf2
from fingeom.gf2 import Subspace, echelonize, enumerate_subspaces, gaussian_binomial, join, meet


def span_set(vectors, n):
    """Oracle: the span as a frozenset of ints, by closure under XOR."""
    cur = {0}
    for v in vectors:
        cur |= {x ^ v for x in cur}
    # closure: repeat until stable (single pass suffices for a set built
    # this way, but keep the loop as the honest definition)
    changed = True
    while changed:
        changed = False
        for a in list(cur):
            for b in list(cur):
                if a ^ b not in cur:
                    cur.add(a ^ b)
                    changed = True
    return frozenset(cur)


def brute_subspaces(n, k):
    """Oracle: all k-subspaces of F_2^n as frozensets, by span closure."""
    vecs = list(range(1, 1 << n))
    found = set()
    import itertools

    for combo in itertools.combinations(vecs, k):
        s = span_set(combo, n)
        if len(s) == 1 << k:
            found.add(s)
    return found


def test_echelonize_identity_rows():
    s = echelonize([1, 2, 4], 3)
    assert s.dim == 3
    assert s.basis == (1, 2, 4)


def test_echelonize_zero_rows():
    s = echelonize([0, 0], 4)
    assert s.dim == 0
    assert s.basis == ()


def test_echelonize_hand_reduction():
    # rows 1100, 0110 reduce to 1010, 0110 (hand row-reduction)
    s = Subspace.from_strings(["1100", "0110"])
    assert str(s) == "<1010,0110>"


def test_echelonize_idempotent_and_dimension_error():
    s = echelonize([3, 6], 4)
    assert echelonize(s.basis, 4) == s
    with pytest.raises(ValueError):
        echelonize([1 << 4], 4)


def test_meet_idempotent():
    u = echelonize([3, 12], 4)
    assert meet(u, u) == u


def test_meet_complementary_lines():
    u = echelonize([1], 2)
    v = echelonize([2], 2)
    assert meet(u, v).dim == 0


def test_meet_planes_of_f2_3_exhaustive():
    # any two distinct 2-subspaces of F_2^3 intersect in a 1-space
    # (forced by the dimension formula); sweep all pairs
    planes = list(enumerate_subspaces(3, 2))
    assert len(planes) == 7
    for i, u in enumerate(planes):
        for v in planes[i + 1 :]:
            m = meet(u, v)
            assert m.dim == 1
            assert join(u, v).dim == 3


def test_meet_matches_set_oracle():
    subs = [echelonize(rows, 4) for rows in ([3, 5], [6, 9], [15], [1, 2, 4], [10, 12])]
    for u in subs:
        for v in subs:
            expected = span_set(u.basis, 4) & span_set(v.basis, 4)
            got = span_set(meet(u, v).basis, 4)
            assert got == expected


def test_join_identity_element():
    u = echelonize([5, 2], 4)
    zero = echelonize([], 4)
    assert join(u, zero) == u


def test_join_two_lines_spans_plane():
    assert join(echelonize([1], 2), echelonize([2], 2)).dim == 2
    # two distinct 1-spaces of F_2^4 span a 2-space with 3 nonzero vectors
    u, v = echelonize([3], 4), echelonize([9], 4)
    j = join(u, v)
    assert j.dim == 2
    assert len([x for x in j.vectors() if x]) == 3


def test_gaussian_binomial_trivial():
    for n in range(6):
        assert gaussian_binomial(n, 0, 2) == 1
        assert gaussian_binomial(n, n, 3) == 1
    with pytest.raises(ValueError):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(ValueError):
        gaussian_binomial(3, 1, 4)


def test_gaussian_binomial_vs_enumeration_oracle():
    assert gaussian_binomial(4, 2, 2) == len(brute_subspaces(4, 2)) == 35


def pascal_gaussian(n, k, q=2):
    """Oracle: Gaussian binomials by the q-Pascal recurrence."""
    table = {}
    for nn in range(n + 1):
        for kk in range(nn + 1):
            if kk == 0 or kk == nn:
                table[nn, kk] = 1
            else:
                table[nn, kk] = table[nn - 1, kk - 1] + q ** kk * table[nn - 1, kk]
    return table[n, k]


def test_gaussian_binomial_8_4():
    assert gaussian_binomial(8, 4, 2) == pascal_gaussian(8, 4) == 200787


def test_enumerate_counts():
    assert len(list(enumerate_subspaces(3, 1))) == 7
    for n in range(5):
        full = list(enumerate_subspaces(n, n))
        assert len(full) == 1
        assert full[0].dim == n


def test_enumerate_matches_oracle_sets():
    got = {span_set(s.basis, 3) for s in enumerate_subspaces(3, 2)}
    assert got == brute_subspaces(3, 2)


@pytest.mark.parametrize("n", range(7))
def test_stream_count_invariant(n):
    for k in range(n + 1):
        count = sum(1 for _ in enumerate_subspaces(n, k))
        assert count == gaussian_binomial(n, k, 2)


def test_enumerate_unique_and_canonical():
    seen = set()
    for s in enumerate_subspaces(5, 2):
        assert echelonize(s.basis, 5) == s
        assert s.basis not in seen
        seen.add(s.basis)


def test_dimension_formula_all_pairs_f2_4():
    subs = [s for k in range(5) for s in enumerate_subspaces(4, k)]
    assert len(subs) == 67
    for u in subs:
        for v in subs:
            assert meet(u, v).dim + join(u, v).dim == u.dim + v.dim


def test_all_subspaces_packed_sorted():
    arr = gf2.all_subspaces_packed(5, 2)
    assert arr.shape == (gaussian_binomial(5, 2, 2), 2)
    keys = [tuple(int(x) for x in row) for row in arr]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


@given(st.lists(st.integers(min_value=0, max_value=255), max_size=6))
@settings(max_examples=200)
def test_echelonize_idempotent_property(rows):
    s = echelonize(rows, 8)
    assert echelonize(s.basis, 8) == s
    assert span_set(rows, 8) == span_set(s.basis, 8)


@given(
    st.lists(st.integers(min_value=0, max_value=63), max_size=4),
    st.lists(st.integers(min_value=0, max_value=63), max_size=4),
)
@settings(max_examples=200)
def test_meet_join_dimension_property(ra, rb):
    u, v = echelonize(ra, 6), echelonize(rb, 6)
    m, j = meet(u, v), join(u, v)
    assert m.dim + j.dim == u.dim + v.dim
    assert u.contains(m) and v.contains(m)
    assert j.contains(u) and j.contains(v)
    assert meet(v, u) == m


def test_packed_kernels_agree_with_value_layer():
    subs = list(enumerate_subspaces(4, 2))
    for u in subs[:12]:
        for v in subs[:12]:
            a = np.array(u.basis, dtype=np.uint64)
            b = np.array(v.basis, dtype=np.uint64)
            assert gf2.intersection_dim(a, len(a), b, len(b)) == meet(u, v).dim
    buf = np.array([3, 6, 5, 0], dtype=np.uint64)
    assert gf2.rref_rows(buf, 4) == 2


def test_gf3_basics():
    rows = [(1, 2, 0), (0, 1, 1)]
    e = gf2.echelonize_q(rows, 3)
    assert gf2.echelonize_q(e, 3) == e
    assert len(e) == 2
    full = gf2.echelonize_q([(1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
    assert gf2.meet_q(full, rows, 3) == e
    assert len(gf2.join_q([(1, 0, 0)], [(0, 1, 0)], 3)) == 2
