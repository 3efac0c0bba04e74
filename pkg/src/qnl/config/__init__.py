"""Configuration loading, schema, and defaults."""

from qnl.config.loader import ConfigError, load_config
from qnl.config.schema import QnlConfig, SearchBudget

__all__ = ["ConfigError", "QnlConfig", "SearchBudget", "load_config"]
