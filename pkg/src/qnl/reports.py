"""Report records assembled by the CLI commands and consumed by the renderers."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Literal, Optional, Union

from qnl.boolean.distance import graph_apc_distance, graph_epc_distance
from qnl.config.schema import SearchBudget
from qnl.formats.common import bits_string
from qnl.graphs.constructors import nested_clique_order
from qnl.graphs.models import Graph
from qnl.stabilizer.bform import bform_reduce
from qnl.stabilizer.code import bform_code
from qnl.stabilizer.distance import Mode, min_distance
from qnl.stabilizer.gray import gray_decode
from qnl.stabilizer.lattice import GapReport, spectral_gap
from qnl.stabilizer.models import BFormCode, GeneratorMatrix

DistanceKind = Literal["hamming", "binary", "apc", "epc"]

DISTANCE_KINDS: tuple[str, ...] = ("hamming", "binary", "apc", "epc")


@dataclass(frozen=True)
class GraphSummary:
    name: str
    n: int
    edges: int
    degree_profile: dict[int, int]
    regular_degree: Optional[int]

    @classmethod
    def of(cls, name: str, g: Graph) -> "GraphSummary":
        return cls(name, g.n, g.edge_count, g.degree_profile(), g.regular_degree())


@dataclass
class DistanceReport:
    """One distance computation with its witness and side reports."""

    name: str
    n: int
    kind: str
    value: int
    exact: bool
    searched_weight: Optional[int] = None
    witness: Optional[str] = None  # alpha|beta for codes, a|b for APC/EPC pairs
    witness_gf4: Optional[str] = None
    conjecture_floor: Optional[int] = None
    gap: Optional[GapReport] = None
    elapsed_ms: float = 0.0

    @property
    def verdict(self) -> str:
        return f"{self.value} (exact)" if self.exact else f"<= {self.value} (bound only)"

    @property
    def meets_floor(self) -> Optional[bool]:
        if self.conjecture_floor is None:
            return None
        return self.value >= self.conjecture_floor


def _graph_of(source: Union[Graph, GeneratorMatrix]) -> tuple[Graph, Optional[BFormCode]]:
    if isinstance(source, Graph):
        return source, None
    reduced = bform_reduce(source)
    return reduced.b, reduced


def distance_report(
    name: str,
    source: Union[Graph, GeneratorMatrix],
    kind: DistanceKind,
    budget: SearchBudget,
    *,
    mode: Mode = "auto",
    threads: int = 1,
) -> DistanceReport:
    """Distance of a graph (through its B-form code) or of a generator matrix.

    APC and EPC of a generator matrix are taken on its B-form graph, which the
    reduction leaves at the same Hamming and binary distance.
    """
    if kind not in DISTANCE_KINDS:
        raise ValueError(f"unknown distance kind {kind!r}")
    started = time.perf_counter()
    report: DistanceReport
    if kind in ("apc", "epc"):
        graph, _ = _graph_of(source)
        compute = graph_apc_distance if kind == "apc" else graph_epc_distance
        pair = compute(graph, budget, mode=mode, threads=threads)
        witness = f"{bits_string(pair.a, graph.n)}|{bits_string(pair.b, graph.n)}"
        report = DistanceReport(name, graph.n, kind, pair.value, pair.exact, witness=witness)
    else:
        code = bform_code(source) if isinstance(source, Graph) else source
        res = min_distance(code, kind, budget, mode=mode, threads=threads)  # type: ignore[arg-type]
        report = DistanceReport(
            name,
            source.n,
            kind,
            res.value,
            res.exact,
            searched_weight=res.searched_weight,
            witness=str(res.witness) if res.witness is not None else None,
            witness_gf4=gray_decode(res.witness) if res.witness is not None else None,
        )

    if kind in ("binary", "epc"):
        if isinstance(source, Graph) and (t := nested_clique_order(source)) is not None:
            report.conjecture_floor = 2 * t - 2
        if report.exact:
            report.gap = spectral_gap(report.value)
    report.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    return report


@dataclass
class BformReport:
    name: str
    code: BFormCode
    moves: list[str] = field(default_factory=list)

    @classmethod
    def of(cls, name: str, code: BFormCode) -> "BformReport":
        return cls(name, code, [describe_move(op) for op in code.provenance])


def describe_move(op: tuple) -> str:
    """A log entry with 1-based indices, e.g. ``add_row 1 -> 3``."""
    match op:
        case ("swap_rows", r, s):
            return f"swap_rows {r + 1} {s + 1}"
        case ("add_row", src, dst):
            return f"add_row {src + 1} -> {dst + 1}"
        case ("swap_ab", q):
            return f"swap_ab {q + 1}"
        case ("swap_qubits", p, q):
            return f"swap_qubits {p + 1} {q + 1}"
    raise ValueError(f"unknown log entry {op!r}")
