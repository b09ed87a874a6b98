"""Hyperbolic quadrics over GF(2) and their totally singular subspaces.

Ambient F_2^{2n} carries the split quadratic form Q(v) = sum v_{2i} v_{2i+1}
(coordinates packed as bits, hyperbolic pairs on bits (2i, 2i+1)).  The
enumerator walks reduced-echelon bases by inserting rows in decreasing
pivot order, which reaches every totally singular subspace through
exactly one chain — no dedup pass is needed.
"""

from __future__ import annotations

import numpy as np

from .backend import njit
from .gf2 import rref_rows

EVEN64 = np.uint64(0x5555555555555555)


@njit(cache=True)
def quad_value(v):
    """Q(v) for the split form, 0 or 1."""
    x = v & (v >> np.uint64(1)) & EVEN64
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c & 1


@njit(cache=True)
def swap_pairs(v):
    """Exchange the two coordinates of every hyperbolic pair."""
    return ((v & EVEN64) << np.uint64(1)) | ((v >> np.uint64(1)) & EVEN64)


@njit(cache=True)
def bilinear(u, v):
    """Polarization B(u,v) = Q(u+v) + Q(u) + Q(v), 0 or 1."""
    x = u & swap_pairs(v)
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c & 1


@njit(cache=True)
def _lowbit_index(v):
    i = 0
    while not (v >> np.uint64(i)) & np.uint64(1):
        i += 1
    return i


@njit(cache=True)
def _candidate_space(rows, k, n2, cands):
    """Vectors v with B(v, rows)=0, zeros at the pivots of rows.

    Writes all 2^d - 1 nonzero candidates into `cands`, returns the count.
    Each candidate generates a distinct one-step totally singular
    extension provided Q(v) = 0 (checked by the caller).
    """
    cons = np.empty(2 * k + 1, dtype=np.uint64)
    m = 0
    for i in range(k):
        cons[m] = swap_pairs(rows[i])
        m += 1
        cons[m] = rows[i] & (~rows[i] + np.uint64(1))
        m += 1
    rank = rref_rows(cons, m)
    pivmask = np.uint64(0)
    for i in range(rank):
        pivmask |= cons[i] & (~cons[i] + np.uint64(1))
    # nullspace basis: one vector per free column
    nb = np.empty(n2, dtype=np.uint64)
    d = 0
    for f in range(n2):
        if (pivmask >> np.uint64(f)) & np.uint64(1):
            continue
        x = np.uint64(1) << np.uint64(f)
        for i in range(rank):
            if (cons[i] >> np.uint64(f)) & np.uint64(1):
                x |= cons[i] & (~cons[i] + np.uint64(1))
        nb[d] = x
        d += 1
    total = (1 << d) - 1
    v = np.uint64(0)
    for g in range(1, total + 1):
        # Gray code walk over the span
        bit = 0
        gg = g ^ (g >> 1)
        prev = (g - 1) ^ ((g - 1) >> 1)
        diff = gg ^ prev
        while not (diff >> bit) & 1:
            bit += 1
        v ^= nb[bit]
        cands[g - 1] = v
    return total


@njit(cache=True)
def _insert_row(rows, k, v):
    """Insert RREF row v into rows[:k], keeping full reduced form."""
    low = v & (~v + np.uint64(1))
    for i in range(k):
        if rows[i] & low:
            rows[i] ^= v
    pos = k
    while pos > 0 and (rows[pos - 1] & (~rows[pos - 1] + np.uint64(1))) > low:
        rows[pos] = rows[pos - 1]
        pos -= 1
    rows[pos] = v
    return k + 1


@njit(cache=True)
def _ts_enumerate(n2, emit_dim, seed, seed_k):
    """All totally singular emit_dim-subspaces containing the seed."""
    maxd = emit_dim - seed_k
    cap = 1024
    out = np.empty((cap, emit_dim), dtype=np.uint64)
    count = 0
    if maxd == 0:
        out[0, :seed_k] = seed[:seed_k]
        return out[:1]
    width = 1 << (n2 - 2 * seed_k)
    rows_stack = np.zeros((maxd + 1, emit_dim), dtype=np.uint64)
    cands = np.zeros((maxd, width), dtype=np.uint64)
    cand_n = np.zeros(maxd, dtype=np.int64)
    cand_i = np.zeros(maxd, dtype=np.int64)
    minpiv = np.zeros(maxd + 1, dtype=np.int64)
    for i in range(seed_k):
        rows_stack[0, i] = seed[i]
    minpiv[0] = n2
    level = 0
    cand_n[0] = _candidate_space(rows_stack[0], seed_k, n2, cands[0])
    cand_i[0] = 0
    while level >= 0:
        if cand_i[level] >= cand_n[level]:
            level -= 1
            continue
        v = cands[level, cand_i[level]]
        cand_i[level] += 1
        if quad_value(v):
            continue
        p = _lowbit_index(v)
        if p >= minpiv[level]:
            continue
        k = seed_k + level
        for i in range(k):
            rows_stack[level + 1, i] = rows_stack[level, i]
        _insert_row(rows_stack[level + 1], k, v)
        if k + 1 == emit_dim:
            if count == cap:
                newcap = cap * 2
                grown = np.empty((newcap, emit_dim), dtype=np.uint64)
                grown[:cap] = out
                out = grown
                cap = newcap
            out[count] = rows_stack[level + 1, :emit_dim]
            count += 1
        else:
            level += 1
            minpiv[level] = p
            cand_n[level] = _candidate_space(rows_stack[level], k + 1, n2, cands[level])
            cand_i[level] = 0
    return out[:count]


@njit(cache=True)
def class_parity(rows, n, ref):
    """Oriflamme class of a maximal t.s. subspace vs the reference member."""
    buf = np.empty(2 * n, dtype=np.uint64)
    for i in range(n):
        buf[i] = rows[i]
        buf[n + i] = ref[i]
    r = rref_rows(buf, 2 * n)
    inter = 2 * n - r
    return (n - inter) & 1


def reference_maximal(n: int) -> np.ndarray:
    """Span of the even coordinates e_0, e_2, ..., e_{2n-2}."""
    return np.array([1 << (2 * i) for i in range(n)], dtype=np.uint64)


def singular_vectors(n: int) -> np.ndarray:
    """All nonzero singular vectors of F_2^{2n}, ascending."""
    vs = np.arange(1, 1 << (2 * n), dtype=np.uint64)
    keep = np.array([quad_value(np.uint64(v)) == 0 for v in vs], dtype=bool)
    return vs[keep]


def ts_subspaces(n: int, k: int, seed: np.ndarray | None = None) -> np.ndarray:
    """Totally singular k-subspaces of O+(2n, 2) containing the seed.

    Returns a (count, k) uint64 array of canonical RREF rows, sorted by
    packed key so ids are stable across runs.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if seed is None:
        seed_arr = np.zeros(0, dtype=np.uint64)
        seed_k = 0
    else:
        seed_arr = np.ascontiguousarray(seed, dtype=np.uint64)
        seed_k = seed_arr.shape[0]
    pad = np.zeros(max(k, 1), dtype=np.uint64)
    pad[:seed_k] = seed_arr
    out = _ts_enumerate(2 * n, k, pad, seed_k)
    if out.shape[0] > 1:
        order = np.lexsort(tuple(out[:, j] for j in range(k - 1, -1, -1)))
        out = out[order]
    return out


def split_maximals(n: int) -> tuple[np.ndarray, np.ndarray]:
    """The two oriflamme classes of maximal t.s. subspaces, each key-sorted.

    The class containing the even-coordinate reference member comes first.
    """
    allmax = ts_subspaces(n, n)
    ref = reference_maximal(n)
    par = np.array([class_parity(allmax[i], n, ref) for i in range(allmax.shape[0])])
    return allmax[par == 0], allmax[par == 1]
