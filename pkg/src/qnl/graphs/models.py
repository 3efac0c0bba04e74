"""Graph model: symmetric, zero-diagonal adjacency with bit-packed rows.

Vertex ``j`` (0-based) is bit ``j`` of every row word, matching the qubit
convention of the stabilizer package (qubit ``j + 1`` lives in bit ``j``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from qnl.errors import QnlError


class GraphError(QnlError):
    """Raised on invalid adjacency data or constructor input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` vertices.

    ``rows[i]`` is the neighbourhood word of vertex ``i``; the matrix doubles
    as the B of a B-form code.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row < 0 or row & ~full:
                raise GraphError(f"row {i + 1} has bits outside the {self.n} columns")
            if (row >> i) & 1:
                raise GraphError(f"nonzero diagonal entry at vertex {i + 1}")
        for i in range(self.n):
            for j in self.neighbors(i):
                if not (self.rows[j] >> i) & 1:
                    raise GraphError(f"adjacency is not symmetric at ({i + 1}, {j + 1})")

    # ---- constructors ----

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]]) -> "Graph":
        n = len(matrix)
        rows = []
        for i, line in enumerate(matrix):
            if len(line) != n:
                raise GraphError(f"row {i + 1} has {len(line)} entries, expected {n}")
            word = 0
            for j, bit in enumerate(line):
                if int(bit) not in (0, 1):
                    raise GraphError(f"entry ({i + 1}, {j + 1}) is not binary")
                word |= int(bit) << j
            rows.append(word)
        return cls(n, tuple(rows))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from 0-based vertex pairs. Self-loops are rejected."""
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u + 1}, {v + 1}) outside 1..{n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u + 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # ---- queries ----

    def has_edge(self, i: int, j: int) -> bool:
        return bool((self.rows[i] >> j) & 1)

    def neighbors(self, i: int) -> Iterator[int]:
        row = self.rows[i]
        while row:
            low = row & -row
            yield low.bit_length() - 1
            row ^= low

    def degree(self, i: int) -> int:
        return self.rows[i].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def degree_profile(self) -> dict[int, int]:
        """Map degree -> number of vertices with that degree."""
        return dict(sorted(Counter(self.degrees()).items()))

    def regular_degree(self) -> Optional[int]:
        """The common degree if the graph is regular, else None."""
        degrees = set(self.degrees())
        return degrees.pop() if len(degrees) == 1 else None

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as 0-based pairs (i, j) with i < j, in row-major order."""
        return [(i, j) for i in range(self.n) for j in self.neighbors(i) if i < j]

    def multiply(self, u: int) -> int:
        """Row combination ``uB`` over GF(2) for a vertex mask ``u``."""
        acc = 0
        i = 0
        while u:
            if u & 1:
                acc ^= self.rows[i]
            u >>= 1
            i += 1
        return acc

    def adjacency(self) -> np.ndarray:
        """Dense uint8 adjacency matrix."""
        out = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, j in self.edges():
            out[i, j] = out[j, i] = 1
        return out

    def row_strings(self) -> list[str]:
        """Rows as 0/1 strings, column 1 leftmost."""
        return ["".join("1" if (row >> j) & 1 else "0" for j in range(self.n)) for row in self.rows]

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.rows[v] & mask) for v in range(self.n) if (mask >> v) & 1)
