"""Load and merge configuration from .qnl.toml and QNL_* environment variables."""

from __future__ import annotations

import dataclasses
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib  # type: ignore[no-redef]

from qnl.config.schema import (
    OUTPUT_FORMATS,
    MisConfig,
    QnlConfig,
    RunConfig,
    SearchBudget,
    VerifyConfig,
)
from qnl.errors import QnlError

CONFIG_FILENAME = ".qnl.toml"


class ConfigError(QnlError):
    """Raised when config is malformed or unreadable."""


def find_config_file(root: Path, override: Optional[str] = None) -> Optional[Path]:
    """Locate the config file. *override* takes precedence."""
    if override:
        p = Path(override)
        if not p.is_file():
            raise ConfigError(f"Config file not found: {override}")
        return p
    candidate = root / CONFIG_FILENAME
    return candidate if candidate.is_file() else None


def _parse_toml(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "rb") as f:
            return tomllib.load(f)
    except (OSError, tomllib.TOMLDecodeError) as exc:
        raise ConfigError(f"Failed to parse {path}: {exc}") from exc


def _build_section(data: Dict[str, Any], cls: type, section: str):
    """Build a dataclass from a TOML section dict, ignoring unknown keys."""
    raw = data.get(section, {})
    if not isinstance(raw, dict):
        raise ConfigError(f"[{section}] must be a table")
    valid_fields = {f.name for f in dataclasses.fields(cls)}
    return cls(**{k: v for k, v in raw.items() if k in valid_fields})


def _positive_int(value: str) -> Optional[int]:
    try:
        parsed = int(value)
    except ValueError:
        return None
    return parsed if parsed > 0 else None


def _merge_env_overrides(cfg: QnlConfig) -> None:
    """Apply QNL_* environment variable overrides; invalid values are ignored."""
    if val := os.environ.get("QNL_THREADS"):
        if (threads := _positive_int(val)) is not None:
            cfg.run.threads = threads
    if val := os.environ.get("QNL_FORMAT"):
        if val in OUTPUT_FORMATS:
            cfg.run.format = val  # type: ignore[assignment]
    if val := os.environ.get("QNL_SEED"):
        try:
            cfg.run.seed = int(val)
        except ValueError:
            pass
    if val := os.environ.get("QNL_MAX_WEIGHT"):
        if (weight := _positive_int(val)) is not None:
            cfg.budget.max_weight = weight


def _validate(cfg: QnlConfig) -> None:
    if cfg.run.format not in OUTPUT_FORMATS:
        raise ConfigError(f"Invalid output format: {cfg.run.format!r}")
    if cfg.run.threads < 1:
        raise ConfigError("run.threads must be at least 1")
    if cfg.budget.max_weight < 1 or cfg.budget.max_candidates < 1:
        raise ConfigError("budget.max_weight and budget.max_candidates must be >= 1")
    if cfg.budget.progress_every < 1:
        raise ConfigError("budget.progress_every must be >= 1")


def load_config(root: Path, config_override: Optional[str] = None) -> QnlConfig:
    """Load, validate, and return a QnlConfig."""
    config_path = find_config_file(root, config_override)

    if config_path is None:
        cfg = QnlConfig()
    else:
        raw = _parse_toml(config_path)
        try:
            cfg = QnlConfig(
                version=str(raw.get("version", "1.0")),
                run=_build_section(raw, RunConfig, "run"),
                budget=_build_section(raw, SearchBudget, "budget"),
                mis=_build_section(raw, MisConfig, "mis"),
                verify=_build_section(raw, VerifyConfig, "verify"),
            )
        except TypeError as exc:
            raise ConfigError(f"Invalid value in {config_path}: {exc}") from exc
        _validate(cfg)

    _merge_env_overrides(cfg)
    return cfg
