"""Stabilizer-code data models: binary symplectic form.

Qubit ``i`` (1-based) occupies bit ``i - 1`` of both the alpha (X) and the
beta (Z) words.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from qnl.errors import DimensionError, QnlError
from qnl.graphs.models import Graph


class CodeError(QnlError):
    """Raised when generator rows are zero or linearly dependent."""


class ReductionError(QnlError):
    """Raised when B-form reduction cannot find a pivot."""

    def __init__(self, message: str, *, pivot_column: int) -> None:
        super().__init__(message)
        self.pivot_column = pivot_column


class EnumerationLimitError(QnlError):
    """Raised when full codeword enumeration is requested above the threshold."""


class SearchModeError(QnlError):
    """Raised when the bounded search gets a non-B-form code or an empty weight budget."""


@dataclass(frozen=True)
class PauliVector:
    """A Pauli string up to phase, as the pair of words (alpha | beta)."""

    n: int
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError(f"n must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if self.alpha < 0 or self.beta < 0 or (self.alpha | self.beta) & ~full:
            raise DimensionError(f"alpha/beta have bits beyond n={self.n}")

    def __add__(self, other: "PauliVector") -> "PauliVector":
        if other.n != self.n:
            raise DimensionError(f"cannot add n={self.n} and n={other.n}")
        return PauliVector(self.n, self.alpha ^ other.alpha, self.beta ^ other.beta)

    @classmethod
    def zero(cls, n: int) -> "PauliVector":
        return cls(n, 0, 0)

    @property
    def is_zero(self) -> bool:
        return not (self.alpha or self.beta)

    @property
    def word(self) -> int:
        """Combined 2n-bit word: alpha in the low half, beta in the high half."""
        return self.alpha | (self.beta << self.n)

    def alpha_bits(self) -> str:
        return "".join("1" if (self.alpha >> i) & 1 else "0" for i in range(self.n))

    def beta_bits(self) -> str:
        return "".join("1" if (self.beta >> i) & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return f"{self.alpha_bits()}|{self.beta_bits()}"


def gf2_rank(words: list[int]) -> int:
    """Rank over GF(2) of a list of int-encoded vectors."""
    basis: dict[int, int] = {}  # leading bit -> vector
    rank = 0
    for w in words:
        while w:
            lead = w.bit_length() - 1
            if lead not in basis:
                basis[lead] = w
                rank += 1
                break
            w ^= basis[lead]
    return rank


@dataclass(frozen=True)
class GeneratorMatrix:
    """k × 2n generator matrix of an additive code; rows independent over GF(2)."""

    n: int
    rows: tuple[PauliVector, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError(f"n must be positive, got {self.n}")
        for i, row in enumerate(self.rows):
            if row.n != self.n:
                raise DimensionError(f"row {i + 1} has n={row.n}, expected {self.n}")
            if row.is_zero:
                raise CodeError(f"row {i + 1} is zero")
        if len(self.rows) > self.n:
            raise CodeError(f"{len(self.rows)} rows exceed n={self.n}")
        if gf2_rank([r.word for r in self.rows]) != len(self.rows):
            raise CodeError("generator rows are linearly dependent over GF(2)")

    @property
    def k(self) -> int:
        return len(self.rows)

    @classmethod
    def from_bits(cls, n: int, rows: list[tuple[int, int]]) -> "GeneratorMatrix":
        return cls(n, tuple(PauliVector(n, a, b) for a, b in rows))

    def bform_graph(self) -> Optional[Graph]:
        """The graph B when this matrix is literally (B | I), else None."""
        if self.k != self.n:
            return None
        for i, row in enumerate(self.rows):
            if row.beta != 1 << i:
                return None
        try:
            return Graph(self.n, tuple(row.alpha for row in self.rows))
        except QnlError:
            return None


@dataclass(frozen=True)
class BFormCode:
    """Code generated by (B | I), plus the T-equivalence log that produced it.

    Log entries are tuples: ``("swap_rows", r, s)``, ``("add_row", src, dst)``,
    ``("swap_ab", q)`` and ``("swap_qubits", p, q)`` with 0-based indices.
    """

    n: int
    b: Graph
    provenance: tuple[tuple, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.b.n != self.n:
            raise DimensionError(f"graph has n={self.b.n}, code has n={self.n}")

    def generator_matrix(self) -> GeneratorMatrix:
        return GeneratorMatrix(
            self.n, tuple(PauliVector(self.n, self.b.rows[i], 1 << i) for i in range(self.n))
        )

    def codeword(self, u: int) -> PauliVector:
        """codeword(u) = (uB | u)."""
        return PauliVector(self.n, self.b.multiply(u), u)


@dataclass(frozen=True)
class DistanceResult:
    """Minimum weight found, with exactness flag and witness codeword."""

    value: int
    exact: bool
    witness: Optional[PauliVector]
    searched_weight: int
    kind: str = "binary"
    coefficients: Optional[int] = None  # generator combination of the witness
