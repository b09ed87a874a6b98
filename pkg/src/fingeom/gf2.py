"""Exact linear algebra over GF(2) on bit-packed rows.

A vector of F_2^n is an int whose bit i is coordinate i; a subspace is
the tuple of its reduced-echelon basis rows, which makes equal subspaces
bit-identical and hashable.  Everything here is pure and immutable.

The hot batch kernels (packed uint64 row arrays) live at the bottom of
the module and are JIT-compiled through :mod:`fingeom.backend`.

GF(3) gets a generic slow path (`echelonize_q`, `meet_q`, `join_q`) over
tuple-of-int vectors; all production fixtures are over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .backend import njit


def _rref_ints(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon form of int-packed GF(2) rows.

    Pivot of a row is its lowest set bit; returned rows have strictly
    increasing pivots and every pivot column is cleared in all other rows.
    """
    basis: list[int] = []
    for row in rows:
        for b in basis:
            low = b & -b
            if row & low:
                row ^= b
        if row:
            low = row & -row
            for i, b in enumerate(basis):
                if b & low:
                    basis[i] = b ^ row
            basis.append(row)
    basis.sort(key=lambda r: r & -r)
    return tuple(basis)


@dataclass(frozen=True, slots=True)
class Subspace:
    """A subspace of F_2^ambient_dim in canonical reduced-echelon form."""

    ambient_dim: int
    basis: tuple[int, ...]

    def __post_init__(self):
        if self.ambient_dim < 0:
            raise ValueError("ambient_dim must be nonnegative")
        mask = (1 << self.ambient_dim) - 1
        for row in self.basis:
            if row & ~mask:
                raise ValueError("basis row exceeds ambient dimension")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains_vector(self, v: int) -> bool:
        for b in self.basis:
            if v & (b & -b):
                v ^= b
        return v == 0

    def contains(self, other: "Subspace") -> bool:
        if other.ambient_dim != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return all(self.contains_vector(r) for r in other.basis)

    def vectors(self) -> Iterator[int]:
        """All 2^dim vectors of the subspace (including 0)."""
        k = len(self.basis)
        for mask in range(1 << k):
            v = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    v ^= self.basis[i]
                m >>= 1
                i += 1
            yield v

    def key(self) -> tuple[int, ...]:
        """Sort/hash key: the basis rows themselves."""
        return self.basis

    def __str__(self) -> str:
        if not self.basis:
            return f"<0 in F2^{self.ambient_dim}>"
        rows = ",".join(format(r, "b")[::-1].ljust(self.ambient_dim, "0") for r in self.basis)
        return f"<{rows}>"

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "Subspace":
        """Rows as coordinate strings, leftmost character = coordinate 0."""
        if not rows:
            raise ValueError("need at least one row string to fix the ambient dimension")
        n = len(rows[0])
        ints = []
        for s in rows:
            if len(s) != n:
                raise ValueError("row length mismatch")
            ints.append(int(s[::-1], 2))
        return echelonize(ints, n)


def echelonize(rows: Iterable[int], ambient_dim: int) -> Subspace:
    """Canonical subspace spanned by the given packed rows. Idempotent."""
    mask = (1 << ambient_dim) - 1
    rows = list(rows)
    for r in rows:
        if r < 0 or r & ~mask:
            raise ValueError(f"row does not fit in {ambient_dim} bits")
    return Subspace(ambient_dim, _rref_ints(rows))


def meet(u: Subspace, v: Subspace) -> Subspace:
    """Intersection U ∩ V, via the Zassenhaus double-block trick."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    n = u.ambient_dim
    # Zassenhaus: rows [x | x] for x in U, [y | 0] for y in V with the
    # deciding block in the low bits; fully reduced rows whose low block
    # vanished carry a basis of U ∩ V in the high block.
    block = [r | (r << n) for r in u.basis] + [r for r in v.basis]
    basis: list[int] = []
    lowmask = (1 << n) - 1
    inter: list[int] = []
    for row in block:
        for b in basis:
            if row & (b & -b):
                row ^= b
        if row & lowmask:
            low = row & -row
            for i, b in enumerate(basis):
                if b & low:
                    basis[i] = b ^ row
            basis.append(row)
            basis.sort(key=lambda r: r & -r)
        elif row:
            inter.append(row >> n)
    return echelonize(inter, n)


def join(u: Subspace, v: Subspace) -> Subspace:
    """Span U + V."""
    if u.ambient_dim != v.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return echelonize(list(u.basis) + list(v.basis), u.ambient_dim)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def gaussian_binomial(n: int, k: int, q: int = 2) -> int:
    """Number of k-subspaces of F_q^n, exact arbitrary-precision integer."""
    if not _is_prime(q):
        raise ValueError("q must be prime")
    if k < 0 or n < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    out = 1
    for i in range(k):
        out = out * (q ** (n - i) - 1) // (q ** (i + 1) - 1)
    return out


def enumerate_subspaces(n: int, k: int) -> Iterator[Subspace]:
    """Each k-subspace of F_2^n exactly once, canonical, lazily.

    Order: pivot sets ascending lexicographically, free-bit patterns in
    counting order within a pivot set.  Deterministic across runs; the
    builders re-sort packed keys when assigning point ids.
    """
    if k < 0 or k > n:
        raise ValueError("need 0 <= k <= n")
    if k == 0:
        yield Subspace(n, ())
        return
    for chunk in _enum_chunks(n, k):
        for i in range(chunk.shape[0]):
            yield Subspace(n, tuple(int(x) for x in chunk[i]))


def _enum_chunks(n: int, k: int) -> Iterator[np.ndarray]:
    """RREF bases for one pivot set at a time, as (m, k) uint64 arrays."""
    import itertools

    for pivots in itertools.combinations(range(n), k):
        yield _fill_pivot_pattern(np.array(pivots, dtype=np.int64), n, k)


def all_subspaces_packed(n: int, k: int) -> np.ndarray:
    """All k-subspaces of F_2^n as a (count, k) uint64 array, key-sorted."""
    if k == 0:
        return np.zeros((1, 0), dtype=np.uint64)
    chunks = list(_enum_chunks(n, k))
    arr = np.concatenate(chunks, axis=0)
    order = np.lexsort(tuple(arr[:, j] for j in range(k - 1, -1, -1)))
    return arr[order]


# ---------------------------------------------------------------------------
# packed kernels


@njit(cache=True)
def _fill_pivot_pattern(pivots, n, k):
    """All RREF matrices with the given pivot columns, packed rows."""
    is_pivot = np.zeros(n, dtype=np.uint8)
    for i in range(k):
        is_pivot[pivots[i]] = 1
    # free slots: (row i, col j) with j > pivots[i], j not a pivot
    free_rows = np.empty(n * k, dtype=np.int64)
    free_cols = np.empty(n * k, dtype=np.int64)
    nfree = 0
    for i in range(k):
        for j in range(pivots[i] + 1, n):
            if not is_pivot[j]:
                free_rows[nfree] = i
                free_cols[nfree] = j
                nfree += 1
    count = 1 << nfree
    out = np.zeros((count, k), dtype=np.uint64)
    for m in range(count):
        for i in range(k):
            out[m, i] = np.uint64(1) << np.uint64(pivots[i])
        for t in range(nfree):
            if (m >> t) & 1:
                out[m, free_rows[t]] |= np.uint64(1) << np.uint64(free_cols[t])
    return out


@njit(cache=True)
def rref_rows(rows, nrows):
    """In-place RREF of packed uint64 rows; returns the rank.

    After the call, rows[:rank] hold the canonical basis sorted by pivot.
    """
    rank = 0
    for r in range(nrows):
        v = rows[r]
        for i in range(rank):
            b = rows[i]
            if v & (b & (~b + np.uint64(1))):
                v ^= b
        if v != 0:
            low = v & (~v + np.uint64(1))
            for i in range(rank):
                if rows[i] & low:
                    rows[i] ^= v
            # insert keeping pivots increasing
            pos = rank
            while pos > 0 and (rows[pos - 1] & (~rows[pos - 1] + np.uint64(1))) > low:
                rows[pos] = rows[pos - 1]
                pos -= 1
            rows[pos] = v
            rank += 1
    for r in range(rank, nrows):
        rows[r] = 0
    return rank


@njit(cache=True)
def rank_of(rows_a, ka, rows_b, kb):
    """Rank of the stack of two packed row blocks."""
    buf = np.empty(ka + kb, dtype=np.uint64)
    for i in range(ka):
        buf[i] = rows_a[i]
    for i in range(kb):
        buf[ka + i] = rows_b[i]
    return rref_rows(buf, ka + kb)


@njit(cache=True)
def intersection_dim(rows_a, ka, rows_b, kb):
    """dim(A ∩ B) = dim A + dim B − dim(A + B)."""
    return ka + kb - rank_of(rows_a, ka, rows_b, kb)


@njit(cache=True)
def reduce_vector(v, rows, k):
    """Reduce v against RREF rows; 0 means membership."""
    for i in range(k):
        b = rows[i]
        if v & (b & (~b + np.uint64(1))):
            v ^= b
    return v


# ---------------------------------------------------------------------------
# generic prime-field slow path (covers GF(3))


def echelonize_q(rows: Sequence[Sequence[int]], q: int) -> tuple[tuple[int, ...], ...]:
    """Canonical RREF basis over F_q, vectors as coordinate tuples."""
    if not _is_prime(q):
        raise ValueError("q must be prime")
    work = [list(int(x) % q for x in r) for r in rows]
    if not work:
        return ()
    n = len(work[0])
    for r in work:
        if len(r) != n:
            raise ValueError("row length mismatch")
    basis: list[list[int]] = []
    pivots: list[int] = []
    for row in work:
        for b, p in zip(basis, pivots):
            c = row[p]
            if c:
                row = [(x - c * y) % q for x, y in zip(row, b)]
        p = next((i for i, x in enumerate(row) if x), -1)
        if p < 0:
            continue
        inv = pow(row[p], q - 2, q)
        row = [(x * inv) % q for x in row]
        for i, (b, bp) in enumerate(zip(basis, pivots)):
            c = b[p]
            if c:
                basis[i] = [(x - c * y) % q for x, y in zip(b, row)]
        basis.append(row)
        pivots.append(p)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return tuple(tuple(basis[i]) for i in order)


def meet_q(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], q: int):
    """Intersection of two F_q row spaces (Zassenhaus on doubled vectors)."""
    ea, eb = echelonize_q(a, q), echelonize_q(b, q)
    if not ea:
        return ()
    n = len(ea[0]) if ea else len(eb[0])
    block = [list(r) + list(r) for r in ea] + [list(r) + [0] * n for r in eb]
    red = echelonize_q(block, q)
    inter = [r[n:] for r in red if all(x == 0 for x in r[:n])]
    return echelonize_q(inter, q) if inter else ()


def join_q(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], q: int):
    return echelonize_q(list(a) + list(b), q)
