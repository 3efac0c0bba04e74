"""B-form reduction: bring a real self-dual code to (B | I) by T-equivalences.

Allowed moves are row operations, qubit permutations and per-qubit alpha/beta
swaps (omega <-> omega-bar). Every move is logged so the reduction can be
replayed on the source matrix.
"""

from __future__ import annotations

import logging
from typing import Iterable, Optional

from qnl.graphs.models import Graph, GraphError
from qnl.stabilizer.code import is_real, is_self_dual
from qnl.stabilizer.models import (
    BFormCode,
    CodeError,
    GeneratorMatrix,
    PauliVector,
    ReductionError,
)

logger = logging.getLogger(__name__)

Op = tuple


def _swap_bits(word: int, p: int, q: int) -> int:
    if ((word >> p) ^ (word >> q)) & 1:
        word ^= (1 << p) | (1 << q)
    return word


def _apply(op: Op, alpha: list[int], beta: list[int]) -> None:
    kind = op[0]
    if kind == "swap_rows":
        r, s = op[1], op[2]
        alpha[r], alpha[s] = alpha[s], alpha[r]
        beta[r], beta[s] = beta[s], beta[r]
    elif kind == "add_row":
        src, dst = op[1], op[2]
        alpha[dst] ^= alpha[src]
        beta[dst] ^= beta[src]
    elif kind == "swap_ab":
        bit = 1 << op[1]
        for r in range(len(alpha)):
            if (alpha[r] ^ beta[r]) & bit:
                alpha[r] ^= bit
                beta[r] ^= bit
    elif kind == "swap_qubits":
        p, q = op[1], op[2]
        for r in range(len(alpha)):
            alpha[r] = _swap_bits(alpha[r], p, q)
            beta[r] = _swap_bits(beta[r], p, q)
    else:
        raise ValueError(f"unknown log entry {op!r}")


def _find_pivot(words: list[int], col: int, start: int) -> Optional[int]:
    for r in range(start, len(words)):
        if (words[r] >> col) & 1:
            return r
    return None


def bform_reduce(g: GeneratorMatrix) -> BFormCode:
    """Reduce a real self-dual generator matrix to B-form.

    Pivoting: leftmost beta column, lowest row carrying a 1. A column with
    no beta pivot is first alpha/beta-swapped, otherwise exchanged with the
    nearest unprocessed column that has a pivot in either half.
    """
    if not is_self_dual(g):
        raise CodeError("B-form reduction needs a self-dual code (k = n, rows commuting)")
    if not is_real(g):
        raise CodeError("B-form reduction needs a real code (even Y-count per generator)")

    n = g.n
    alpha = [row.alpha for row in g.rows]
    beta = [row.beta for row in g.rows]
    log: list[Op] = []

    def do(op: Op) -> None:
        _apply(op, alpha, beta)
        log.append(op)

    for j in range(n):
        pivot = _find_pivot(beta, j, j)
        if pivot is None and _find_pivot(alpha, j, j) is not None:
            do(("swap_ab", j))
            pivot = _find_pivot(beta, j, j)
        if pivot is None:
            for c in range(j + 1, n):
                if _find_pivot(beta, c, j) is not None:
                    do(("swap_qubits", j, c))
                    break
                if _find_pivot(alpha, c, j) is not None:
                    do(("swap_qubits", j, c))
                    do(("swap_ab", j))
                    break
            pivot = _find_pivot(beta, j, j)
        if pivot is None:
            raise ReductionError(
                f"no pivot available for beta column {j + 1} in rows {j + 1}..{n}",
                pivot_column=j,
            )
        if pivot != j:
            do(("swap_rows", j, pivot))
        for r in range(n):
            if r != j and (beta[r] >> j) & 1:
                do(("add_row", j, r))

    try:
        b = Graph(n, tuple(alpha))
    except GraphError as exc:
        raise ReductionError(
            f"reduced alpha block is not a graph: {exc}", pivot_column=n - 1
        ) from exc
    logger.debug("B-form reduction of n=%d finished with %d logged moves", n, len(log))
    return BFormCode(n, b, tuple(log))


def replay_log(g: GeneratorMatrix, log: Iterable[Op]) -> GeneratorMatrix:
    """Apply a transformation log to *g* and return the resulting matrix."""
    alpha = [row.alpha for row in g.rows]
    beta = [row.beta for row in g.rows]
    for op in log:
        _apply(op, alpha, beta)
    return GeneratorMatrix.from_bits(g.n, list(zip(alpha, beta)))


def transform_vector(p: PauliVector, log: Iterable[Op]) -> PauliVector:
    """Apply only the qubit-level moves of a log (the T-equivalence) to one vector."""
    alpha, beta = [p.alpha], [p.beta]
    for op in log:
        if op[0] in ("swap_ab", "swap_qubits"):
            _apply(op, alpha, beta)
    return PauliVector(p.n, alpha[0], beta[0])
