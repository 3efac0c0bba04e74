"""Tests for config loading, validation, and env var overrides."""

from pathlib import Path

import pytest

from qnl.config import ConfigError, QnlConfig, load_config
from qnl.config.defaults import DEFAULT_TOML


class TestConfigLoading:
    def test_default_config(self, tmp_path: Path):
        cfg = load_config(tmp_path)
        assert cfg.run.seed == 0
        assert cfg.run.format == "text"
        assert cfg.budget.max_weight == 12
        assert cfg.budget.max_candidates == 10**10

    def test_custom_toml(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text(
            'version = "1.0"\n'
            "[run]\n"
            "seed = 7\n"
            'format = "json"\n'
            "[budget]\n"
            "max_weight = 5\n"
            "wall_clock_seconds = 2.5\n"
        )
        cfg = load_config(tmp_path)
        assert cfg.run.seed == 7
        assert cfg.run.format == "json"
        assert cfg.budget.max_weight == 5
        assert cfg.budget.wall_clock_seconds == 2.5

    def test_starter_template_matches_defaults(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text(DEFAULT_TOML)
        assert load_config(tmp_path) == QnlConfig()

    def test_unknown_keys_ignored(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text("[mis]\nmax_nodes = 10\ncolour = 'blue'\n")
        assert load_config(tmp_path).mis.max_nodes == 10

    def test_config_override_path(self, tmp_path: Path):
        custom = tmp_path / "custom.toml"
        custom.write_text("[verify]\nn = 4\nsamples = 3\n")
        cfg = load_config(tmp_path, config_override=str(custom))
        assert (cfg.verify.n, cfg.verify.samples) == (4, 3)

    def test_missing_override_raises(self, tmp_path: Path):
        with pytest.raises(ConfigError):
            load_config(tmp_path, config_override="/nonexistent/config.toml")

    def test_invalid_toml_raises(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text("this is not valid [toml")
        with pytest.raises(ConfigError):
            load_config(tmp_path)

    def test_invalid_format_raises(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text('[run]\nformat = "xml"\n')
        with pytest.raises(ConfigError, match="format"):
            load_config(tmp_path)

    def test_zero_threads_raises(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text("[run]\nthreads = 0\n")
        with pytest.raises(ConfigError, match="threads"):
            load_config(tmp_path)

    def test_zero_max_weight_raises(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text("[budget]\nmax_weight = 0\n")
        with pytest.raises(ConfigError, match="max_weight"):
            load_config(tmp_path)

    def test_section_must_be_a_table(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text("budget = 3\n")
        with pytest.raises(ConfigError, match=r"\[budget\]"):
            load_config(tmp_path)


class TestEnvVarOverrides:
    def test_threads_override(self, tmp_path: Path, monkeypatch):
        monkeypatch.setenv("QNL_THREADS", "4")
        assert load_config(tmp_path).run.threads == 4

    def test_format_override(self, tmp_path: Path, monkeypatch):
        monkeypatch.setenv("QNL_FORMAT", "csv")
        assert load_config(tmp_path).run.format == "csv"

    def test_seed_override(self, tmp_path: Path, monkeypatch):
        monkeypatch.setenv("QNL_SEED", "99")
        assert load_config(tmp_path).run.seed == 99

    def test_max_weight_override(self, tmp_path: Path, monkeypatch):
        monkeypatch.setenv("QNL_MAX_WEIGHT", "9")
        assert load_config(tmp_path).budget.max_weight == 9

    def test_env_beats_file(self, tmp_path: Path, monkeypatch):
        (tmp_path / ".qnl.toml").write_text("[run]\nseed = 1\n")
        monkeypatch.setenv("QNL_SEED", "2")
        assert load_config(tmp_path).run.seed == 2

    def test_invalid_env_ignored(self, tmp_path: Path, monkeypatch):
        monkeypatch.setenv("QNL_THREADS", "zero")
        monkeypatch.setenv("QNL_FORMAT", "yaml")
        cfg = load_config(tmp_path)
        assert cfg.run.threads == 1
        assert cfg.run.format == "text"
