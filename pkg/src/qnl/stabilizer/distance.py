"""Minimum Hamming and binary distance of additive codes.

Two engines:

* exact enumeration of all 2^k codewords (k <= 28), vectorised with numpy
  over a 2^L block of low-row combinations and an outer loop over the rest;
* a bounded-weight search for B-form codes that walks coefficient vectors u
  by increasing wt(u) using codeword(u) = (uB | u).

Witness ties go to the smallest coefficient mask u.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Literal, Optional, Union

import numpy as np

from qnl.bits import popcount
from qnl.config.schema import SearchBudget
from qnl.graphs.models import Graph
from qnl.stabilizer.code import ENUMERATION_LIMIT_BITS
from qnl.stabilizer.models import (
    BFormCode,
    DistanceResult,
    EnumerationLimitError,
    GeneratorMatrix,
    PauliVector,
    SearchModeError,
)

logger = logging.getLogger(__name__)

Kind = Literal["hamming", "binary"]
Mode = Literal["auto", "exact", "bounded"]

KINDS: tuple[str, ...] = ("hamming", "binary")
_BLOCK_BITS = 20
_WORD_BITS = 64


def min_distance(
    code: Union[GeneratorMatrix, BFormCode],
    kind: Kind = "binary",
    budget: Optional[SearchBudget] = None,
    *,
    mode: Mode = "auto",
    threads: int = 1,
) -> DistanceResult:
    """Minimum weight over the nonzero codewords.

    ``mode="auto"`` enumerates exactly when k is within the enumeration limit
    and falls back to the bounded search on B-form input otherwise.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown distance kind {kind!r}")
    budget = budget or SearchBudget()
    g = code.generator_matrix() if isinstance(code, BFormCode) else code
    if g.k == 0:
        return DistanceResult(0, True, None, 0, kind=kind)

    if mode == "auto":
        mode = "exact" if g.k <= ENUMERATION_LIMIT_BITS else "bounded"

    if mode == "exact":
        if g.k > ENUMERATION_LIMIT_BITS:
            raise EnumerationLimitError(
                f"k={g.k} exceeds the exact-enumeration limit of {ENUMERATION_LIMIT_BITS}; "
                "use --mode bounded on a B-form code"
            )
        if g.n <= _WORD_BITS:
            return _exact_numpy(g, kind, budget)
        return _exact_python(g, kind, budget)

    if mode != "bounded":
        raise ValueError(f"unknown search mode {mode!r}")
    graph = code.b if isinstance(code, BFormCode) else g.bform_graph()
    if graph is None:
        raise SearchModeError(
            "bounded search needs a code in B-form (B | I); run 'qnl code bform' first"
        )
    return bounded_search(graph, kind, budget, threads=threads)


# ---- exact enumeration ----


def _weights(alpha: np.ndarray, beta: np.ndarray, kind: str) -> np.ndarray:
    if kind == "hamming":
        return popcount(alpha | beta)
    return popcount(alpha) + popcount(beta)


def _span(words: list[int]) -> np.ndarray:
    """All XOR combinations of *words*; entry j combines the words at the bits of j."""
    out = np.zeros(1, dtype=np.uint64)
    for w in words:
        out = np.concatenate((out, out ^ np.uint64(w)))
    return out


def _exact_numpy(g: GeneratorMatrix, kind: str, budget: SearchBudget) -> DistanceResult:
    low = min(g.k, _BLOCK_BITS)
    alpha_low = _span([r.alpha for r in g.rows[:low]])
    beta_low = _span([r.beta for r in g.rows[:low]])
    high_rows = g.rows[low:]

    best_weight: Optional[int] = None
    best_u = 0
    seen = 0
    next_report = budget.progress_every
    for h in range(1 << len(high_rows)):
        ah = bh = 0
        for i, row in enumerate(high_rows):
            if (h >> i) & 1:
                ah ^= row.alpha
                bh ^= row.beta
        weights = _weights(alpha_low ^ np.uint64(ah), beta_low ^ np.uint64(bh), kind)
        if h == 0:
            weights[0] = np.iinfo(np.int64).max  # zero codeword
        idx = int(np.argmin(weights))
        w = int(weights[idx])
        if best_weight is None or w < best_weight:
            best_weight, best_u = w, idx | (h << low)
        seen += weights.shape[0]
        if seen >= next_report:
            logger.info("enumerated %d of %d codewords, best %d", seen, 1 << g.k, best_weight)
            next_report += budget.progress_every

    assert best_weight is not None
    witness = _combine(g, best_u)
    return DistanceResult(best_weight, True, witness, g.k, kind=kind, coefficients=best_u)


def _exact_python(g: GeneratorMatrix, kind: str, budget: SearchBudget) -> DistanceResult:
    best_weight: Optional[int] = None
    best_u = 0
    alpha = beta = 0
    for step in range(1, 1 << g.k):
        row = g.rows[(step & -step).bit_length() - 1]
        alpha ^= row.alpha
        beta ^= row.beta
        u = step ^ (step >> 1)
        if kind == "hamming":
            w = (alpha | beta).bit_count()
        else:
            w = alpha.bit_count() + beta.bit_count()
        if best_weight is None or (w, u) < (best_weight, best_u):
            best_weight, best_u = w, u
        if step % budget.progress_every == 0:
            logger.info("enumerated %d of %d codewords, best %d", step, 1 << g.k, best_weight)
    assert best_weight is not None
    witness = _combine(g, best_u)
    return DistanceResult(best_weight, True, witness, g.k, kind=kind, coefficients=best_u)


def _combine(g: GeneratorMatrix, u: int) -> PauliVector:
    acc = PauliVector.zero(g.n)
    for i, row in enumerate(g.rows):
        if (u >> i) & 1:
            acc = acc + row
    return acc


# ---- bounded-weight search on B-form codes ----


def _scan_leads(
    rows: tuple[int, ...], n: int, w: int, leads: tuple[int, ...], kind: str
) -> tuple[Optional[int], int, int]:
    """Scan every u of weight *w* whose lowest set index is in *leads*.

    Returns (best weight, best u, candidates scanned).
    """
    best_weight: Optional[int] = None
    best_u = 0
    scanned = 0
    arr = np.array(rows, dtype=np.uint64) if n <= _WORD_BITS else None

    def consider(weight: int, u: int) -> None:
        nonlocal best_weight, best_u
        if best_weight is None or (weight, u) < (best_weight, best_u):
            best_weight, best_u = weight, u

    def rec(start: int, depth: int, u: int, acc: int) -> None:
        nonlocal scanned
        if depth == w:
            scanned += 1
            weight = w + acc.bit_count() if kind == "binary" else (u | acc).bit_count()
            consider(weight, u)
            return
        if depth == w - 1 and arr is not None:
            tail = arr[start:] ^ np.uint64(acc)
            if kind == "binary":
                weights = popcount(tail) + w
            else:
                us = (np.uint64(1) << np.arange(start, n, dtype=np.uint64)) | np.uint64(u)
                weights = popcount(tail | us)
            scanned += weights.shape[0]
            if weights.shape[0]:
                i = int(np.argmin(weights))
                consider(int(weights[i]), u | (1 << (start + i)))
            return
        for i in range(start, n - (w - depth) + 1):
            rec(i + 1, depth + 1, u | (1 << i), acc ^ rows[i])

    for lead in leads:
        if lead <= n - w:
            rec(lead + 1, 1, 1 << lead, rows[lead])
    return best_weight, best_u, scanned


def _scan_leads_packed(args: tuple) -> tuple[Optional[int], int, int]:
    return _scan_leads(*args)


def _scan_class(graph: Graph, w: int, kind: str, threads: int) -> tuple[Optional[int], int, int]:
    n = graph.n
    leads = tuple(range(n - w + 1))
    if threads <= 1 or len(leads) < 2:
        return _scan_leads(graph.rows, n, w, leads, kind)
    parts = [leads[i::threads] for i in range(threads) if leads[i::threads]]
    best_weight: Optional[int] = None
    best_u = 0
    scanned = 0
    with ProcessPoolExecutor(max_workers=len(parts)) as pool:
        for weight, u, count in pool.map(
            _scan_leads_packed, [(graph.rows, n, w, part, kind) for part in parts]
        ):
            scanned += count
            if weight is not None and (best_weight is None or (weight, u) < (best_weight, best_u)):
                best_weight, best_u = weight, u
    return best_weight, best_u, scanned


def bounded_search(
    graph: Graph, kind: Kind = "binary", budget: Optional[SearchBudget] = None, *, threads: int = 1
) -> DistanceResult:
    """Distance of the B-form code of *graph* by increasing wt(u).

    After every u with wt(u) <= W has been seen, any unseen codeword weighs at
    least W + 1, so a minimum m <= W + 1 is certified exact.
    """
    budget = budget or SearchBudget()
    if budget.max_weight < 1:
        raise SearchModeError(f"bounded search needs max_weight >= 1, got {budget.max_weight}")
    n = graph.n
    started = time.monotonic()
    best_weight: Optional[int] = None
    best_u = 0
    searched = 0
    total = 0
    cap = min(budget.max_weight, n)

    for w in range(1, cap + 1):
        if best_weight is not None and best_weight < w:
            break
        size = comb(n, w)
        if w > 1 and total + size > budget.max_candidates:
            logger.info("candidate budget reached before weight class %d (%d candidates)", w, size)
            break
        if (
            w > 1
            and budget.wall_clock_seconds is not None
            and time.monotonic() - started > budget.wall_clock_seconds
        ):
            logger.info(
                "wall-clock hint of %.1fs reached before weight class %d",
                budget.wall_clock_seconds,
                w,
            )
            break
        weight, u, scanned = _scan_class(graph, w, kind, threads)
        total += scanned
        searched = w
        if weight is not None and (best_weight is None or (weight, u) < (best_weight, best_u)):
            best_weight, best_u = weight, u
        logger.info(
            "weight class %d done: %d candidates (%d total), best %s",
            w, scanned, total, best_weight,
        )

    if best_weight is None:
        raise SearchModeError(f"bounded search found no codeword on n={n}")
    exact = best_weight <= searched + 1 or searched == n
    witness = PauliVector(n, graph.multiply(best_u), best_u)
    if not exact:
        logger.warning(
            "bounded search stopped at wt(u)=%d without a certificate; best found %d",
            searched, best_weight,
        )
    return DistanceResult(best_weight, exact, witness, searched, kind=kind, coefficients=best_u)
