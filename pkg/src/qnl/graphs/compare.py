"""Independence number of a graph against random regular graphs of the same shape."""

from __future__ import annotations

import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Optional

from qnl.graphs.mis import SearchTimeoutError, alpha_asymptotic, independence_number
from qnl.graphs.models import Graph, GraphError
from qnl.graphs.random_regular import random_regular

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AlphaValue:
    """alpha of one graph; ``exact`` is False when the MIS budget ran out."""

    value: int
    exact: bool = True

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">={self.value}"


@dataclass
class AlphaComparison:
    name: str
    n: int
    degree: int
    target: AlphaValue
    samples: int
    seed: int
    histogram: dict[AlphaValue, int] = field(default_factory=dict)
    asymptotic: Optional[float] = None

    @property
    def timeouts(self) -> int:
        return sum(count for value, count in self.histogram.items() if not value.exact)

    def buckets(self) -> list[tuple[AlphaValue, int]]:
        return sorted(self.histogram.items(), key=lambda item: (item[0].value, item[0].exact))


def _alpha(g: Graph, max_nodes: Optional[int], timeout: Optional[float]) -> AlphaValue:
    try:
        return AlphaValue(
            independence_number(g, max_nodes=max_nodes, timeout_seconds=timeout).alpha
        )
    except SearchTimeoutError as exc:
        logger.warning("MIS budget exhausted on n=%d; lower bound %d", g.n, exc.best_lower_bound)
        return AlphaValue(exc.best_lower_bound, exact=False)


def _sample_alpha(
    n: int, degree: int, max_nodes: Optional[int], timeout: Optional[float], seed: int
) -> AlphaValue:
    return _alpha(random_regular(n, degree, seed), max_nodes, timeout)


def compare_alpha(
    name: str,
    g: Graph,
    samples: int,
    seed: int,
    *,
    max_nodes: Optional[int] = None,
    timeout_seconds: Optional[float] = None,
    threads: int = 1,
) -> AlphaComparison:
    """alpha(g) plus the alpha histogram of *samples* random graphs with g's (n, degree).

    Sample ``i`` is drawn with seed ``seed + i``; the counts always sum to *samples*.
    """
    degree = g.regular_degree()
    if degree is None:
        raise GraphError(f"{name} is not regular; degree profile {g.degree_profile()}")
    if samples < 0:
        raise ValueError(f"samples must be nonnegative, got {samples}")
    target = _alpha(g, max_nodes, timeout_seconds)
    runner = partial(_sample_alpha, g.n, degree, max_nodes, timeout_seconds)
    seeds = [seed + i for i in range(samples)]
    if threads > 1 and samples > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(runner, seeds))
    else:
        values = [runner(s) for s in seeds]
    asymptotic = alpha_asymptotic(g.n, degree) if degree >= 2 else None
    logger.info("%s: alpha=%s over %d samples of (n=%d, d=%d)", name, target, samples, g.n, degree)
    return AlphaComparison(
        name, g.n, degree, target, samples, seed, dict(Counter(values)), asymptotic
    )
