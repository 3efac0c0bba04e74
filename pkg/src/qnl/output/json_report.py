"""JSON reporter. Timing fields appear only where the report format names them."""

from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List

from qnl.graphs.compare import AlphaComparison
from qnl.reports import BformReport, DistanceReport, GraphSummary
from qnl.verify.models import CheckReport, SuiteResult


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2)


def graph_summary_dict(summary: GraphSummary) -> Dict[str, Any]:
    return {
        "name": summary.name,
        "n": summary.n,
        "edges": summary.edges,
        "degree_profile": {str(k): v for k, v in summary.degree_profile.items()},
        "regular_degree": summary.regular_degree,
    }


def distance_dict(report: DistanceReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {
        "name": report.name,
        "n": report.n,
        "kind": report.kind,
        "value": report.value,
        "exact": report.exact,
        "witness": report.witness,
    }
    if report.witness_gf4 is not None:
        out["witness_gf4"] = report.witness_gf4
    if report.searched_weight is not None:
        out["searched_weight"] = report.searched_weight
    if report.conjecture_floor is not None:
        out["conjecture_floor"] = report.conjecture_floor
        out["meets_floor"] = report.meets_floor
    if report.gap is not None:
        out["gap"] = str(report.gap.gap)
        out["gap_heuristic"] = report.gap.heuristic
    return out


def bform_dict(report: BformReport) -> Dict[str, Any]:
    return {
        "name": report.name,
        "n": report.code.n,
        "b": report.code.b.row_strings(),
        "log": report.moves,
    }


def check_dict(report: CheckReport) -> Dict[str, Any]:
    return {
        "name": report.name,
        "instances": report.instances,
        "failures": [
            {"digest": f.digest, "lhs": f.lhs, "rhs": f.rhs, "detail": f.detail}
            for f in report.failures
        ],
        "elapsed_ms": report.elapsed_ms,
        **({"seed": report.seed} if report.seed is not None else {}),
        **({"details": report.details} if report.details else {}),
    }


def suite_dict(result: SuiteResult) -> Dict[str, Any]:
    return {
        "seed": result.seed,
        "passed": result.passed,
        "total_instances": result.total_instances,
        "total_failures": result.total_failures,
        "reports": [check_dict(r) for r in result.reports],
    }


def alpha_dicts(comparisons: Iterable[AlphaComparison]) -> List[Dict[str, Any]]:
    return [
        {
            "name": cmp.name,
            "n": cmp.n,
            "degree": cmp.degree,
            "alpha_target": str(cmp.target),
            "samples": cmp.samples,
            "seed": cmp.seed,
            "histogram": [{"alpha": str(v), "count": c} for v, c in cmp.buckets()],
            "asymptotic": round(cmp.asymptotic, 6) if cmp.asymptotic is not None else None,
            "timeouts": cmp.timeouts,
        }
        for cmp in comparisons
    ]


def rows_dicts(header: tuple[str, ...], rows: Iterable[tuple]) -> List[Dict[str, Any]]:
    return [dict(zip(header, row)) for row in rows]
