"""Configuration schema: dataclasses for every config section."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional

OutputFormat = Literal["text", "json", "csv"]

OUTPUT_FORMATS: tuple[str, ...] = ("text", "json", "csv")


@dataclass
class RunConfig:
    seed: int = 0
    format: OutputFormat = "text"
    threads: int = 1  # capped by QNL_THREADS


@dataclass
class SearchBudget:
    """Limits for bounded-weight distance searches."""

    max_weight: int = 12
    max_candidates: int = 10**10
    progress_every: int = 10**8  # log a progress record every N candidates
    wall_clock_seconds: Optional[float] = None  # hint, checked between candidates


@dataclass
class MisConfig:
    max_nodes: int = 50_000_000
    timeout_seconds: Optional[float] = None


@dataclass
class VerifyConfig:
    n: int = 6
    samples: int = 20


@dataclass
class QnlConfig:
    version: str = "1.0"
    run: RunConfig = field(default_factory=RunConfig)
    budget: SearchBudget = field(default_factory=SearchBudget)
    mis: MisConfig = field(default_factory=MisConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
