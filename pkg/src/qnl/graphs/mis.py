"""Exact maximum independent set by bitset branch-and-bound.

Branches on a maximum-degree vertex of the remaining candidate set (include
first, then exclude), takes degree-0 and degree-1 vertices without
branching, and prunes with a greedy clique cover of the candidates.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass
from typing import Optional

from qnl.errors import QnlError
from qnl.graphs.models import Graph

logger = logging.getLogger(__name__)

_CLOCK_EVERY = 1024


class SearchTimeoutError(QnlError):
    """Raised when the node or time budget runs out; carries the best set found."""

    def __init__(self, message: str, *, best_lower_bound: int, witness: tuple[int, ...]) -> None:
        super().__init__(message)
        self.best_lower_bound = best_lower_bound
        self.witness = witness


@dataclass(frozen=True)
class IndependentSet:
    alpha: int
    witness: tuple[int, ...]  # 0-based vertices, ascending
    nodes: int = 0


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _clique_cover(rows: tuple[int, ...], candidates: int) -> int:
    """Number of cliques in a greedy cover of *candidates*; bounds alpha from above."""
    count = 0
    while candidates:
        low = candidates & -candidates
        clique = low
        pool = candidates & rows[low.bit_length() - 1]
        while pool:
            u = pool & -pool
            clique |= u
            pool &= rows[u.bit_length() - 1]
        candidates &= ~clique
        count += 1
    return count


def _greedy(rows: tuple[int, ...], n: int) -> int:
    candidates = (1 << n) - 1
    chosen = 0
    while candidates:
        v = min(_bits(candidates), key=lambda x: ((rows[x] & candidates).bit_count(), x))
        chosen |= 1 << v
        candidates &= ~(rows[v] | (1 << v))
    return chosen


class _Search:
    def __init__(self, g: Graph, max_nodes: Optional[int], timeout: Optional[float]) -> None:
        self.rows = g.rows
        self.max_nodes = max_nodes
        self.deadline = None if timeout is None else time.monotonic() + timeout
        self.nodes = 0
        self.best = _greedy(g.rows, g.n)
        self.best_size = self.best.bit_count()

    def _tick(self) -> None:
        self.nodes += 1
        out_of_nodes = self.max_nodes is not None and self.nodes > self.max_nodes
        out_of_time = (
            self.deadline is not None
            and self.nodes % _CLOCK_EVERY == 0
            and time.monotonic() > self.deadline
        )
        if out_of_nodes or out_of_time:
            reason = "node budget" if out_of_nodes else "time budget"
            raise SearchTimeoutError(
                f"independence search hit its {reason} after {self.nodes} nodes; "
                f"best lower bound {self.best_size}",
                best_lower_bound=self.best_size,
                witness=tuple(_bits(self.best)),
            )

    def expand(self, candidates: int, chosen: int) -> None:
        self._tick()
        rows = self.rows
        changed = True
        while changed and candidates:
            changed = False
            for v in _bits(candidates):
                if not (candidates >> v) & 1:
                    continue
                if (rows[v] & candidates).bit_count() <= 1:
                    chosen |= 1 << v
                    candidates &= ~(rows[v] | (1 << v))
                    changed = True
        size = chosen.bit_count()
        if not candidates:
            if size > self.best_size:
                self.best, self.best_size = chosen, size
                logger.debug("independent set of size %d after %d nodes", size, self.nodes)
            return
        if size + _clique_cover(rows, candidates) <= self.best_size:
            return
        v = max(_bits(candidates), key=lambda x: ((rows[x] & candidates).bit_count(), -x))
        self.expand(candidates & ~(rows[v] | (1 << v)), chosen | (1 << v))
        self.expand(candidates & ~(1 << v), chosen)


def independence_number(
    g: Graph, *, max_nodes: Optional[int] = None, timeout_seconds: Optional[float] = None
) -> IndependentSet:
    """Exact alpha(G) with a witness set; single-threaded and deterministic."""
    search = _Search(g, max_nodes, timeout_seconds)
    search.expand((1 << g.n) - 1, 0)
    witness = tuple(_bits(search.best))
    logger.info("alpha=%d for n=%d after %d search nodes", search.best_size, g.n, search.nodes)
    return IndependentSet(search.best_size, witness, search.nodes)


def alpha_asymptotic(n: int, degree: int) -> float:
    """(2 ln d / d)·n, the random-regular estimate of alpha."""
    if degree < 2:
        raise ValueError(f"the estimate needs degree >= 2, got {degree}")
    return 2 * math.log(degree) / degree * n
