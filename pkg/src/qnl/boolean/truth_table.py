"""Bit-packed truth tables of boolean functions.

Index ``x`` holds (-1)^f(x) where bit ``k`` of ``x`` is the value of
variable ``x_{k+1}``; a set bit in the packed form encodes -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from qnl.errors import DimensionError, FormatError, SizeLimitError
from qnl.graphs.models import Graph

TRUTH_TABLE_MAX_N = 24


@dataclass(frozen=True)
class TruthTable:
    n: int
    bits: bytes

    def __post_init__(self) -> None:
        if not 1 <= self.n <= TRUTH_TABLE_MAX_N:
            raise SizeLimitError(
                f"truth tables support 1 <= n <= {TRUTH_TABLE_MAX_N}, got n={self.n}"
            )
        expected = max(1, (1 << self.n) // 8)
        if len(self.bits) != expected:
            raise DimensionError(
                f"expected {expected} packed bytes for n={self.n}, got {len(self.bits)}"
            )
        if self.n < 3 and self.bits[0] >> (1 << self.n):
            raise DimensionError(f"padding bits set in a table with n={self.n}")

    @classmethod
    def from_values(cls, values: np.ndarray) -> "TruthTable":
        """Build from the 0/1 values f(x), index order."""
        values = np.asarray(values)
        size = values.shape[0]
        n = size.bit_length() - 1
        if size < 2 or size != 1 << n:
            raise DimensionError(f"table length {size} is not a power of two >= 2")
        packed = np.packbits(values.astype(np.uint8) & 1, bitorder="little")
        return cls(n, packed.tobytes())

    @classmethod
    def from_signs(cls, signs: np.ndarray) -> "TruthTable":
        signs = np.asarray(signs)
        if not np.all(np.abs(signs) == 1):
            raise FormatError("sign sequence may only contain +1 and -1")
        return cls.from_values(signs < 0)

    @classmethod
    def from_string(cls, text: str) -> "TruthTable":
        """Parse a string over {+,-} in index order."""
        bad = next((i for i, ch in enumerate(text) if ch not in "+-"), None)
        if bad is not None:
            raise FormatError(f"invalid sign {text[bad]!r} at position {bad + 1}", index=bad)
        return cls.from_values(np.frombuffer(text.encode("ascii"), dtype=np.uint8) == ord("-"))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "TruthTable":
        return cls.from_values(np.full(1 << n, value & 1, dtype=np.uint8))

    def values(self) -> np.ndarray:
        """f(x) for every index as a uint8 array."""
        raw = np.frombuffer(self.bits, dtype=np.uint8)
        return np.unpackbits(raw, bitorder="little")[: 1 << self.n]

    def signs(self) -> np.ndarray:
        """(-1)^f(x) as int64."""
        return 1 - 2 * self.values().astype(np.int64)

    def __len__(self) -> int:
        return 1 << self.n

    def __getitem__(self, x: int) -> int:
        return -1 if (self.bits[x >> 3] >> (x & 7)) & 1 else 1

    def to_string(self) -> str:
        return "".join("-" if v else "+" for v in self.values())


def from_graph(b: Graph) -> TruthTable:
    """Truth table of f(x) = sum_{i<j} B_ij x_i x_j."""
    if b.n > TRUTH_TABLE_MAX_N:
        raise SizeLimitError(f"truth tables support n <= {TRUTH_TABLE_MAX_N}, got n={b.n}")
    idx = np.arange(1 << b.n, dtype=np.int64)
    f = np.zeros(1 << b.n, dtype=np.int64)
    for i, j in b.edges():
        f ^= (idx >> i) & (idx >> j) & 1
    return TruthTable.from_values(f)


def quadratic_graph(table: TruthTable) -> Optional[Graph]:
    """The graph B when f is exactly sum_{i<j} B_ij x_i x_j, else None."""
    n = table.n
    if table[0] != 1 or any(table[1 << i] != 1 for i in range(n)):
        return None
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if table[(1 << i) | (1 << j)] == -1
    ]
    graph = Graph.from_edges(n, edges)
    return graph if from_graph(graph).bits == table.bits else None
