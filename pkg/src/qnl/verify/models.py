"""Check report models."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, List, Optional, Union

from qnl.boolean.truth_table import TruthTable
from qnl.graphs.models import Graph


@dataclass
class CheckFailure:
    """One instance where the two sides disagreed."""

    digest: str
    lhs: str
    rhs: str
    detail: str = ""


@dataclass
class CheckReport:
    """Outcome of one check (or one merged suite)."""

    name: str
    instances: int = 0
    failures: List[CheckFailure] = field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: Optional[int] = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, digest: str, lhs: Any, rhs: Any, detail: str = "") -> None:
        """Count one comparison; keep it as a failure when lhs != rhs."""
        self.instances += 1
        if lhs != rhs:
            self.failures.append(CheckFailure(digest, str(lhs), str(rhs), detail))


@dataclass
class SuiteResult:
    """All reports of one ``verify`` run."""

    reports: List[CheckReport] = field(default_factory=list)
    seed: int = 0
    duration_ms: float = 0.0

    @property
    def total_failures(self) -> int:
        return sum(len(r.failures) for r in self.reports)

    @property
    def total_instances(self) -> int:
        return sum(r.instances for r in self.reports)

    @property
    def passed(self) -> bool:
        return self.total_failures == 0


def digest(obj: Union[Graph, TruthTable]) -> str:
    """Short stable identifier of a graph or truth table."""
    if isinstance(obj, Graph):
        payload = "\n".join(obj.row_strings()).encode()
        kind = "graph"
    else:
        payload = obj.bits
        kind = "table"
    return f"{kind}:n={obj.n}:{hashlib.sha1(payload).hexdigest()[:10]}"


def merge(name: str, parts: List[CheckReport], *, seed: Optional[int] = None) -> CheckReport:
    merged = CheckReport(name=name, seed=seed)
    for part in parts:
        merged.instances += part.instances
        merged.failures.extend(part.failures)
        merged.elapsed_ms += part.elapsed_ms
        for key, value in part.details.items():
            merged.details.setdefault(key, value)
    return merged
