"""Quadric enumeration against brute-force and closed-form oracles."""

import numpy as np
import pytest

from fingeom import quadrics
from fingeom.gf2 import gaussian_binomial


def brute_q(v):
    """Oracle Q: sum over hyperbolic pairs, no bit tricks."""
    total = 0
    i = 0
    while v >> (2 * i):
        total += ((v >> (2 * i)) & 1) * ((v >> (2 * i + 1)) & 1)
        i += 1
    return total % 2


def brute_ts_count(n, k):
    """Oracle: count t.s. k-subspaces of O+(2n,2) by filtering all subspaces."""
    from fingeom.gf2 import enumerate_subspaces

    count = 0
    for s in enumerate_subspaces(2 * n, k):
        if all(brute_q(v) == 0 for v in s.vectors()):
            count += 1
    return count


def formula_ts_count(n, k):
    """Oracle: [n,k]_2 * prod_{i<k} (2^{n-1-i} + 1)."""
    out = gaussian_binomial(n, k, 2)
    for i in range(k):
        out *= 2 ** (n - 1 - i) + 1
    return out


def test_quad_value_matches_brute():
    for v in range(1 << 8):
        assert quadrics.quad_value(np.uint64(v)) == brute_q(v)


def test_bilinear_is_polarization():
    rng = np.random.default_rng(5)
    for _ in range(200):
        u, v = (int(x) for x in rng.integers(0, 1 << 12, size=2))
        lhs = quadrics.bilinear(np.uint64(u), np.uint64(v))
        rhs = (brute_q(u ^ v) + brute_q(u) + brute_q(v)) % 2
        assert lhs == rhs


def test_singular_vector_counts():
    # |O+(2n,2) singular points| = (2^{n-1}+1)(2^n-1)
    for n in range(1, 6):
        pts = quadrics.singular_vectors(n)
        assert len(pts) == (2 ** (n - 1) + 1) * (2**n - 1)


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2), (3, 3)])
def test_ts_counts_vs_brute(n, k):
    got = quadrics.ts_subspaces(n, k)
    assert got.shape[0] == brute_ts_count(n, k) == formula_ts_count(n, k)


@pytest.mark.parametrize(
    "n,k",
    [(4, 2), (4, 4), (5, 3), (5, 5), (6, 6)],
)
def test_ts_counts_vs_formula(n, k):
    assert quadrics.ts_subspaces(n, k).shape[0] == formula_ts_count(n, k)


def test_ts_rows_are_canonical_singular_and_sorted():
    out = quadrics.ts_subspaces(3, 2)
    keys = [tuple(int(x) for x in row) for row in out]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    from fingeom.gf2 import echelonize

    for row in out:
        s = echelonize([int(x) for x in row], 6)
        assert s.basis == tuple(int(x) for x in row)
        assert all(brute_q(v) == 0 for v in s.vectors())


def test_split_maximals_counts():
    for n in (2, 3, 4):
        a, b = quadrics.split_maximals(n)
        each = formula_ts_count(n, n) // 2
        assert a.shape[0] == b.shape[0] == each


def test_seeded_extensions():
    # every t.s. 2-space of O+(8,2) lies in exactly 2+2 maximals,
    # one pair per class wing of the residue O+(4,2) -> 6 total
    lines = quadrics.ts_subspaces(4, 2)
    seed = lines[17]
    ext = quadrics.ts_subspaces(4, 4, seed=seed)
    assert ext.shape[0] == 6
    ref = quadrics.reference_maximal(4)
    pars = [quadrics.class_parity(ext[i], 4, ref) for i in range(6)]
    assert sorted(pars) == [0, 0, 0, 1, 1, 1]


def test_seeded_extensions_contain_seed():
    from fingeom.gf2 import echelonize, meet

    seed = quadrics.ts_subspaces(5, 3)[100]
    s_sub = echelonize([int(x) for x in seed], 10)
    for rows in quadrics.ts_subspaces(5, 5, seed=seed):
        big = echelonize([int(x) for x in rows], 10)
        assert meet(big, s_sub) == s_sub
