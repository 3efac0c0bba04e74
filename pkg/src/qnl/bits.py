"""Bit-level helpers shared by the stabilizer and boolean packages.

Masks are plain Python ints; bit ``i`` is coordinate ``i + 1``.
"""

from __future__ import annotations

import numpy as np

_POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)


def popcount(words: np.ndarray) -> np.ndarray:
    """Per-element popcount of an unsigned/int64 array, as int64."""
    arr = np.ascontiguousarray(words).astype(np.uint64, copy=False)
    return _POP8[arr.view(np.uint8)].reshape(arr.shape + (8,)).sum(axis=-1)


def parity(words: np.ndarray) -> np.ndarray:
    """Per-element popcount mod 2, as int64 in {0, 1}."""
    return popcount(words) & 1


def precedes(x: int, y: int) -> bool:
    """Partial order ``x ⪯ y``: every set bit of x is set in y."""
    return x & ~y == 0


def complement(mask: int, n: int) -> int:
    return ~mask & ((1 << n) - 1)


def bit_positions(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask: int) -> np.ndarray:
    """All submasks of *mask* as an int64 array.

    Entry ``j`` places bit ``b`` of ``j`` on the ``b``-th set position of the
    mask, so the array is ordered like a WHT over the free coordinates.
    """
    positions = bit_positions(mask)
    out = np.zeros(1, dtype=np.int64)
    for p in positions:
        out = np.concatenate((out, out | np.int64(1 << p)))
    return out


def coset(base: int, free: int) -> np.ndarray:
    """Indices of ``base + V_free`` (base must avoid the free coordinates)."""
    return submasks(free) | np.int64(base & ~free)
