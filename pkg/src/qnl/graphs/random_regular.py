"""Seeded sampler for simple d-regular graphs (pairing model with re-pairing).

Stubs are shuffled and paired; pairs that would form a loop or a repeated
edge go back into the pool and are re-paired among themselves. A round in
which no admissible pair remains restarts the sample from scratch.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from typing import Optional

import numpy as np

from qnl.errors import QnlError
from qnl.graphs.models import Graph

logger = logging.getLogger(__name__)

MAX_RESTARTS = 10_000


class SamplingError(QnlError):
    """Raised for infeasible (n, d) or when the restart cap is exhausted."""


def _has_admissible_pair(edges: set[tuple[int, int]], pending: dict[int, int]) -> bool:
    if not pending:
        return True
    nodes = list(pending)
    for x, s1 in enumerate(nodes):
        for s2 in nodes[:x]:
            pair = (s1, s2) if s1 < s2 else (s2, s1)
            if pair not in edges:
                return True
    return False


def _try_pairing(n: int, degree: int, rng: np.random.Generator) -> Optional[set[tuple[int, int]]]:
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n, dtype=np.int64), degree)
    while stubs.shape[0]:
        pending: dict[int, int] = defaultdict(int)
        rng.shuffle(stubs)
        for s1, s2 in stubs.reshape(-1, 2).tolist():
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                pending[s1] += 1
                pending[s2] += 1
        if not _has_admissible_pair(edges, pending):
            return None
        stubs = np.array([v for v, count in pending.items() for _ in range(count)], dtype=np.int64)
    return edges


def random_regular(n: int, degree: int, seed: int, *, max_restarts: int = MAX_RESTARTS) -> Graph:
    """A simple *degree*-regular graph on *n* vertices, reproducible from *seed*."""
    if n < 1 or degree < 0:
        raise SamplingError(f"need n >= 1 and degree >= 0, got n={n}, degree={degree}")
    if degree >= n:
        raise SamplingError(f"degree {degree} must be below n={n}")
    if (n * degree) % 2:
        raise SamplingError(
            f"n·degree = {n * degree} is odd; no {degree}-regular graph on {n} vertices"
        )
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_restarts + 1):
        edges = _try_pairing(n, degree, rng)
        if edges is not None:
            if attempt > 1:
                logger.debug(
                    "random_regular(n=%d, d=%d) succeeded after %d attempts", n, degree, attempt
                )
            return Graph.from_edges(n, sorted(edges))
    raise SamplingError(
        f"no simple {degree}-regular graph on {n} vertices after {max_restarts} restarts; "
        "retry with another seed"
    )
