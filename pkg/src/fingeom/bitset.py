"""Dense bitset rows over numpy uint64 words."""

from __future__ import annotations

import numpy as np


def n_words(nbits: int) -> int:
    return (nbits + 63) // 64


def zeros(nbits: int) -> np.ndarray:
    return np.zeros(n_words(nbits), dtype=np.uint64)


def set_bit(row: np.ndarray, i: int) -> None:
    row[i >> 6] |= np.uint64(1) << np.uint64(i & 63)


def get_bit(row: np.ndarray, i: int) -> bool:
    return bool((row[i >> 6] >> np.uint64(i & 63)) & np.uint64(1))


def popcount(row: np.ndarray) -> int:
    return int(np.bitwise_count(row).sum())


def from_ids(ids, nbits: int) -> np.ndarray:
    row = zeros(nbits)
    for i in ids:
        set_bit(row, int(i))
    return row


def to_ids(row: np.ndarray) -> np.ndarray:
    """Indices of set bits, ascending."""
    out = []
    for w in range(row.shape[0]):
        word = int(row[w])
        base = w << 6
        while word:
            low = word & -word
            out.append(base + low.bit_length() - 1)
            word ^= low
    return np.array(out, dtype=np.int64)


def is_subset(a: np.ndarray, b: np.ndarray) -> bool:
    return not np.any(a & ~b)


def equal(a: np.ndarray, b: np.ndarray) -> bool:
    return bool(np.array_equal(a, b))
