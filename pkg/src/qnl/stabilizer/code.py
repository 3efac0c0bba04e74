"""Symplectic algebra, code predicates, weights and codeword enumeration."""

from __future__ import annotations

from typing import Iterator

import numpy as np

from qnl.bits import parity
from qnl.errors import DimensionError, QnlError
from qnl.graphs.models import Graph
from qnl.stabilizer.models import (
    BFormCode,
    EnumerationLimitError,
    GeneratorMatrix,
    PauliVector,
)

ENUMERATION_LIMIT_BITS = 28


def symplectic_product(p: PauliVector, q: PauliVector) -> int:
    """(p.alpha·q.beta + q.alpha·p.beta) mod 2; 0 iff the operators commute."""
    if p.n != q.n:
        raise DimensionError(f"symplectic product of n={p.n} and n={q.n}")
    return ((p.alpha & q.beta).bit_count() + (q.alpha & p.beta).bit_count()) & 1


def is_self_dual(g: GeneratorMatrix) -> bool:
    """k = n and every pair of rows commutes."""
    if g.k != g.n:
        return False
    rows = g.rows
    return all(
        symplectic_product(rows[i], rows[j]) == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


def is_real(g: GeneratorMatrix) -> bool:
    """Every generator has an even Y-count (alpha·beta ≡ 0 mod 2)."""
    return all((row.alpha & row.beta).bit_count() % 2 == 0 for row in g.rows)


def hamming_weight(p: PauliVector) -> int:
    """Number of qubits carrying a non-identity Pauli."""
    return (p.alpha | p.beta).bit_count()


def binary_weight(p: PauliVector) -> int:
    """w_x + 2 w_y + w_z, i.e. popcount(alpha) + popcount(beta)."""
    return p.alpha.bit_count() + p.beta.bit_count()


def codewords(g: GeneratorMatrix) -> Iterator[PauliVector]:
    """Yield all 2^k GF(2) combinations of the rows (zero first), each once.

    Combinations are visited in Gray-code order, one row toggle per step.
    """
    if g.k > ENUMERATION_LIMIT_BITS:
        raise EnumerationLimitError(
            f"k={g.k} exceeds the full-enumeration limit of {ENUMERATION_LIMIT_BITS}; "
            "use the bounded-weight search on the B-form instead"
        )
    alpha = beta = 0
    yield PauliVector(g.n, 0, 0)
    for step in range(1, 1 << g.k):
        row = g.rows[(step & -step).bit_length() - 1]
        alpha ^= row.alpha
        beta ^= row.beta
        yield PauliVector(g.n, alpha, beta)


def bform_code(graph: Graph) -> BFormCode:
    """The B-form code (B | I) of a graph."""
    return BFormCode(graph.n, graph)


def graph_state_generators(graph: Graph) -> tuple[PauliVector, ...]:
    """Stabilizers s_i = X_i ∏_j Z_j^{B_ij} of the graph state."""
    return tuple(PauliVector(graph.n, 1 << i, graph.rows[i]) for i in range(graph.n))


def apply_pauli(state: np.ndarray, p: PauliVector) -> np.ndarray:
    """Apply i^{alpha·beta} X^alpha Z^beta to a real amplitude vector.

    Index ``x`` of *state* is the basis state whose qubit ``i + 1`` is bit ``i``.
    Z^beta multiplies by (-1)^{beta·x}, then X^alpha maps index x to x ^ alpha.
    """
    size = state.shape[0]
    if size != 1 << p.n:
        raise DimensionError(f"state has {size} amplitudes, expected 2^{p.n}")
    y_count = (p.alpha & p.beta).bit_count()
    if y_count % 2:
        raise QnlError("odd number of Y factors: the operator leaves the real sign vectors")
    idx = np.arange(size, dtype=np.int64)
    signed = np.where(parity(idx & p.beta) == 1, -state, state)
    if (y_count // 2) % 2:
        signed = -signed
    # (X^alpha phi)[x] = phi[x ^ alpha]
    return signed[idx ^ p.alpha]
