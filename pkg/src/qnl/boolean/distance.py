"""APC and EPC distances of boolean functions.

A pair (a, b) != 0 counts when sum_x (-1)^(f(x) + f(x + a) + b·x) != 0. APC
weighs the pair by |supp(a) ∪ supp(b)|, EPC by wt(a) + wt(b). For a
quadratic form with graph B the sum is nonzero exactly when b = Ba, which
turns both distances into distances of the B-form code.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from qnl.bits import popcount
from qnl.boolean.models import NotQuadraticError
from qnl.boolean.spectra import wht_array
from qnl.boolean.truth_table import TruthTable, quadratic_graph
from qnl.config.schema import SearchBudget
from qnl.errors import SizeLimitError
from qnl.graphs.models import Graph
from qnl.stabilizer.code import bform_code
from qnl.stabilizer.distance import Mode, min_distance

logger = logging.getLogger(__name__)

GENERIC_MAX_N = 14

Method = Literal["auto", "generic", "quadratic"]


@dataclass(frozen=True)
class DistancePair:
    """Distance value with the error pair (a, b) that attains it."""

    value: int
    a: int
    b: int
    exact: bool = True
    method: str = "generic"


def _generic(t: TruthTable, kind: str) -> DistancePair:
    n = t.n
    if n > GENERIC_MAX_N:
        raise SizeLimitError(
            f"generic {kind.upper()} search is limited to n <= {GENERIC_MAX_N}, got n={n}; "
            "quadratic tables can use the closed form"
        )
    s = t.signs()
    idx = np.arange(1 << n, dtype=np.int64)
    best: Optional[tuple[int, int, int]] = None
    for a in sorted(range(1, 1 << n), key=lambda x: (x.bit_count(), x)):
        wa = a.bit_count()
        if best is not None and wa > best[0]:
            break
        spectrum = wht_array(s * s[idx ^ a])
        bs = np.flatnonzero(spectrum)
        if bs.shape[0] == 0:
            continue
        weights = popcount(bs | a) if kind == "apc" else popcount(bs) + wa
        i = int(np.argmin(weights))
        candidate = (int(weights[i]), a, int(bs[i]))
        if best is None or candidate < best:
            best = candidate
    assert best is not None  # the transform of a nonzero vector is nonzero
    return DistancePair(*best, exact=True, method="generic")


def graph_apc_distance(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    *,
    mode: Mode = "auto",
    threads: int = 1,
) -> DistancePair:
    """APC distance of the quadratic form of *g*: min over a != 0 of wt(a | Ba)."""
    res = min_distance(bform_code(g), "hamming", budget, mode=mode, threads=threads)
    assert res.witness is not None and res.coefficients is not None
    return DistancePair(res.value, res.coefficients, res.witness.alpha, res.exact, "quadratic")


def graph_epc_distance(
    g: Graph,
    budget: Optional[SearchBudget] = None,
    *,
    mode: Mode = "auto",
    threads: int = 1,
) -> DistancePair:
    """EPC distance of the quadratic form of *g*: min over a != 0 of wt(a) + wt(Ba)."""
    res = min_distance(bform_code(g), "binary", budget, mode=mode, threads=threads)
    assert res.witness is not None and res.coefficients is not None
    return DistancePair(res.value, res.coefficients, res.witness.alpha, res.exact, "quadratic")


def _route(t: TruthTable, method: Method) -> Optional[Graph]:
    if method == "generic":
        return None
    graph = quadratic_graph(t)
    if graph is None and method == "quadratic":
        raise NotQuadraticError("table is not a homogeneous quadratic form; use method 'generic'")
    if graph is not None:
        logger.debug("routing n=%d table through the quadratic closed form", t.n)
    return graph


def apc_distance(t: TruthTable, method: Method = "auto") -> DistancePair:
    graph = _route(t, method)
    return graph_apc_distance(graph) if graph is not None else _generic(t, "apc")


def epc_distance(t: TruthTable, method: Method = "auto") -> DistancePair:
    graph = _route(t, method)
    return graph_epc_distance(graph) if graph is not None else _generic(t, "epc")
