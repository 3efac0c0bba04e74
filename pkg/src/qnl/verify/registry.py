"""Suite registry: named checks with their seeded instance generators."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Sequence

import numpy as np

from qnl.boolean.truth_table import TruthTable, from_graph
from qnl.graphs.constructors import clique, k2k3, nested_clique_9
from qnl.graphs.models import Graph
from qnl.verify import checks
from qnl.verify.models import CheckReport, SuiteResult, merge

logger = logging.getLogger(__name__)

ALL_SUITES = "all"
EXHAUSTIVE_MAX_N = 5


# ---- instance generators ----


def random_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    pairs = [(i, j) for i, j in combinations(range(n), 2)]
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [pair for pair, k in zip(pairs, keep) if k])


def random_table(rng: np.random.Generator, n: int) -> TruthTable:
    return TruthTable.from_values(rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def exhaustive_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pair for i, pair in enumerate(pairs) if (mask >> i) & 1])


def _sizes(rng: np.random.Generator, n: int, samples: int, low: int = 2) -> list[int]:
    low = min(low, n)
    return [int(v) for v in rng.integers(low, n + 1, size=samples)]


def _graphs(rng: np.random.Generator, n: int, samples: int) -> list[Graph]:
    anchors = [clique(t) for t in range(2, min(n, 5) + 1)]
    if n >= 6:
        anchors.append(k2k3())
    if n >= 9:
        anchors.append(nested_clique_9())
    return anchors + [random_graph(rng, size) for size in _sizes(rng, n, samples)]


def _distance_graphs(rng: np.random.Generator, n: int, samples: int) -> list[Graph]:
    """Every graph on 2..min(n, EXHAUSTIVE_MAX_N) vertices, then the seeded graphs."""
    small = min(n, EXHAUSTIVE_MAX_N)
    every = [g for size in range(2, small + 1) for g in exhaustive_graphs(size)]
    return every + _graphs(rng, n, samples)


def _tables(rng: np.random.Generator, n: int, samples: int) -> list[TruthTable]:
    anchors = [TruthTable.constant(n), from_graph(clique(2))]
    half = samples // 2
    randoms = [random_table(rng, size) for size in _sizes(rng, n, half, low=1)]
    quadratics = [from_graph(random_graph(rng, size)) for size in _sizes(rng, n, samples - half)]
    return anchors + randoms + quadratics


def _quadratic_tables(rng: np.random.Generator, n: int, samples: int) -> list[TruthTable]:
    anchors = [TruthTable.constant(n), from_graph(clique(min(n, 4)))]
    return anchors + [from_graph(random_graph(rng, n)) for _ in range(samples)]


# ---- suites ----


@dataclass(frozen=True)
class Suite:
    name: str
    description: str
    max_n: int
    instances: Callable[[np.random.Generator, int, int], Sequence]
    check: Callable[..., CheckReport]
    seeded: bool = False


def _run_one(suite: Suite, seed: int, indexed: tuple) -> CheckReport:
    index, item = indexed
    if suite.seeded:
        return suite.check(item, seed + index)
    return suite.check(item)


class SuiteRegistry:
    """Central store for verification suites."""

    def __init__(self) -> None:
        self._suites: Dict[str, Suite] = {}

    def register(self, suite: Suite) -> None:
        self._suites[suite.name] = suite

    @property
    def names(self) -> List[str]:
        return list(self._suites)

    def get(self, name: str) -> Optional[Suite]:
        return self._suites.get(name)

    def run_suite(
        self, suite: Suite, *, n: int, samples: int, seed: int, threads: int = 1
    ) -> CheckReport:
        size = min(n, suite.max_n)
        rng = np.random.default_rng(seed)
        items = list(suite.instances(rng, size, samples))
        started = time.perf_counter()
        runner = partial(_run_one, suite, seed)
        if threads > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(runner, enumerate(items)))
        else:
            parts = [runner(pair) for pair in enumerate(items)]
        report = merge(suite.name, parts, seed=seed)
        report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
        report.details["n"] = size
        report.details["cases"] = len(items)
        logger.info(
            "suite %s: %d comparisons over %d cases, %d failures",
            suite.name, report.instances, len(items), len(report.failures),
        )
        return report

    def run(self, name: str, *, n: int, samples: int, seed: int, threads: int = 1) -> SuiteResult:
        """Run one suite, or every suite for ``all``. Unknown names raise KeyError."""
        if name == ALL_SUITES:
            selected = list(self._suites.values())
        elif name in self._suites:
            selected = [self._suites[name]]
        else:
            raise KeyError(name)
        started = time.perf_counter()
        result = SuiteResult(seed=seed)
        for suite in selected:
            result.reports.append(
                self.run_suite(suite, n=n, samples=samples, seed=seed, threads=threads)
            )
        result.duration_ms = round((time.perf_counter() - started) * 1000, 3)
        return result


BUILTIN_SUITES: list[Suite] = [
    Suite(
        "wk",
        "autocorrelation vs squared Walsh spectrum",
        checks.WK_MAX_N,
        _tables,
        checks.check_wk,
    ),
    Suite(
        "eq322",
        "twisted autocorrelation vs {I,H,N} power spectrum",
        checks.EQ322_MAX_N,
        _tables,
        checks.check_eq322,
        seeded=True,
    ),
    Suite(
        "eq44",
        "fixed-extended autocorrelation vs {I,H} power spectrum",
        checks.EQ44_MAX_N,
        _tables,
        checks.check_eq44,
    ),
    Suite(
        "apc-d",
        "APC distance vs code distance",
        checks.DISTANCE_MAX_N,
        _distance_graphs,
        checks.check_apc_equals_d,
    ),
    Suite(
        "epc-db",
        "EPC distance vs binary distance",
        checks.DISTANCE_MAX_N,
        _distance_graphs,
        checks.check_epc_equals_db,
    ),
    Suite(
        "par-bound",
        "spectra within the EPC bound",
        checks.PAR_BOUND_MAX_N,
        _quadratic_tables,
        checks.check_par_bound,
    ),
    Suite(
        "par-alpha",
        "PAR over {I,H}^n at least 2^alpha, equal on clique families",
        12,
        _graphs,
        checks.check_par_alpha,
    ),
    Suite(
        "graph-state",
        "generators fix the graph state",
        checks.GRAPH_STATE_MAX_N,
        _graphs,
        checks.check_graph_state,
    ),
    Suite(
        "lattice-gap",
        "lattice minimum norm vs min(2, d_b/2)",
        5,
        _graphs,
        checks.check_lattice_gap,
    ),
]


def build_registry() -> SuiteRegistry:
    registry = SuiteRegistry()
    for suite in BUILTIN_SUITES:
        registry.register(suite)
    return registry
