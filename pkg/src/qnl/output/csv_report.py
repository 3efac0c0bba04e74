"""CSV reporter for spectra dumps, alpha comparisons and suite summaries."""

from __future__ import annotations

import csv
import io
from typing import Iterable

from qnl.graphs.compare import AlphaComparison
from qnl.reports import DistanceReport
from qnl.verify.models import SuiteResult

SPECTRUM_HEADER = ("mask", "re", "im", "norm2")
ALPHA_HEADER = ("name", "n", "degree", "alpha_target", "alpha_value", "count", "asymptotic")
SUITE_HEADER = ("suite", "n", "instances", "failures")
DISTANCE_HEADER = ("name", "n", "kind", "value", "exact", "witness")


def _write(header: tuple[str, ...], rows: Iterable[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def rows_csv(header: tuple[str, ...], rows: Iterable[tuple]) -> str:
    return _write(header, rows)


def _asymptotic(cmp: AlphaComparison) -> str:
    return "" if cmp.asymptotic is None else str(round(cmp.asymptotic, 6))


def alpha_csv(comparisons: Iterable[AlphaComparison]) -> str:
    """One row per histogram bucket; every row repeats the (2 ln d / d)·n reference."""
    rows = [
        (cmp.name, cmp.n, cmp.degree, str(cmp.target), str(value), count, _asymptotic(cmp))
        for cmp in comparisons
        for value, count in cmp.buckets()
    ]
    return _write(ALPHA_HEADER, rows)


def suite_csv(result: SuiteResult) -> str:
    rows = [
        (r.name, r.details.get("n", ""), r.instances, len(r.failures)) for r in result.reports
    ]
    return _write(SUITE_HEADER, rows)


def distance_csv(reports: Iterable[DistanceReport]) -> str:
    rows = [
        (r.name, r.n, r.kind, r.value, "exact" if r.exact else "bound", r.witness or "")
        for r in reports
    ]
    return _write(DISTANCE_HEADER, rows)
