"""Tests for the CLI commands."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from qnl.cli import app
from qnl.formats.graph_file import format_graph
from qnl.graphs.constructors import NESTED_CLIQUE_9, clique, k2k3

runner = CliRunner()


@pytest.fixture(autouse=True)
def _isolated(tmp_path: Path, monkeypatch):
    """Run every command from an empty directory with no QNL_* overrides."""
    monkeypatch.chdir(tmp_path)
    for var in ("QNL_THREADS", "QNL_FORMAT", "QNL_SEED", "QNL_MAX_WEIGHT"):
        monkeypatch.delenv(var, raising=False)


@pytest.fixture
def prism_file(write_file) -> Path:
    return write_file("prism.txt", format_graph(k2k3()))


class TestVersion:
    def test_version_flag(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert "qnl 0.1.0" in result.output


class TestInit:
    def test_creates_config(self, tmp_path: Path):
        result = runner.invoke(app, ["init"])
        assert result.exit_code == 0
        assert (tmp_path / ".qnl.toml").exists()

    def test_refuses_overwrite(self, tmp_path: Path):
        (tmp_path / ".qnl.toml").write_text("existing")
        result = runner.invoke(app, ["init"])
        assert result.exit_code == 1
        assert (tmp_path / ".qnl.toml").read_text() == "existing"

    def test_bad_config_is_a_usage_error(self, k4_file):
        result = runner.invoke(app, ["distance", str(k4_file), "--config", "missing.toml"])
        assert result.exit_code == 2


class TestGraph:
    def test_clique(self, tmp_path: Path):
        result = runner.invoke(app, ["graph", "clique", "--t", "5", "--output", "k5.txt"])
        assert result.exit_code == 0
        assert (tmp_path / "k5.txt").read_text() == format_graph(clique(5))

    def test_nested_clique_cyclic(self, tmp_path: Path):
        args = ["graph", "nested-clique", "--t", "3", "--sigma", "cyclic", "--output", "nc.txt"]
        result = runner.invoke(app, args)
        assert result.exit_code == 0
        assert (tmp_path / "nc.txt").read_text().split() == ["n=9", *NESTED_CLIQUE_9]

    def test_random_regular_is_deterministic(self, tmp_path: Path):
        base = ["graph", "random-regular", "--n", "56", "--degree", "15", "--seed", "7"]
        assert runner.invoke(app, [*base, "--output", "a.txt"]).exit_code == 0
        assert runner.invoke(app, [*base, "--output", "b.txt"]).exit_code == 0
        assert (tmp_path / "a.txt").read_bytes() == (tmp_path / "b.txt").read_bytes()

    def test_two_circulant_json(self, tmp_path: Path):
        args = ["graph", "two-circulant", "--a-row", "011", "--b-row", "100", "--output", "g.json"]
        assert runner.invoke(app, args).exit_code == 0
        data = json.loads((tmp_path / "g.json").read_text())
        assert data["rows"] == k2k3().row_strings()

    def test_from_spec(self, write_file, tmp_path: Path):
        spec = write_file("nc.yaml", "kind: nested-clique\nt: 3\nsigma: [[2, 3, 1]]\n")
        args = ["graph", "spec", "--spec", str(spec), "--style", "edges", "--output", "g.txt"]
        assert runner.invoke(app, args).exit_code == 0
        assert (tmp_path / "g.txt").read_text().splitlines()[0] == "n=9"

    def test_unknown_kind(self):
        assert runner.invoke(app, ["graph", "hypercube"]).exit_code == 2

    def test_constructor_error(self):
        result = runner.invoke(app, ["graph", "nested-clique", "--t", "4"])
        assert result.exit_code == 2

    def test_bad_row_option(self):
        assert runner.invoke(app, ["graph", "circulant", "--first-row", "0120"]).exit_code == 2

    def test_missing_size(self):
        assert runner.invoke(app, ["graph", "random-regular", "--degree", "3"]).exit_code == 2


class TestCode:
    def test_bform_writes_graph(self, swapped_code_file, tmp_path: Path):
        result = runner.invoke(app, ["code", "bform", str(swapped_code_file), "--output", "b.txt"])
        assert result.exit_code == 0
        assert (tmp_path / "b.txt").read_text() == "n=2\n01\n10\n"

    def test_bform_rejects_non_self_dual(self, write_file):
        path = write_file("short.code", "n=2 k=1\n10|00\n")
        assert runner.invoke(app, ["code", "bform", str(path)]).exit_code == 2

    def test_convert_to_gf4(self, swapped_code_file, tmp_path: Path):
        args = ["code", "convert", str(swapped_code_file), "--to", "gf4", "--output", "c.txt"]
        assert runner.invoke(app, args).exit_code == 0
        assert (tmp_path / "c.txt").read_text() == "n=2 k=2\nWw\nwW\n"

    def test_convert_unknown_target(self, swapped_code_file):
        args = ["code", "convert", str(swapped_code_file), "--to", "xml"]
        assert runner.invoke(app, args).exit_code == 2


class TestDistance:
    def test_nested_clique_binary(self, nested9_file, tmp_path: Path):
        args = ["distance", str(nested9_file), "--kind", "binary", "--format", "json"]
        result = runner.invoke(app, [*args, "--output", "d.json"])
        assert result.exit_code == 0
        data = json.loads((tmp_path / "d.json").read_text())
        assert data["value"] == 4
        assert data["exact"] is True
        assert data["meets_floor"] is True

    def test_clique_epc_text(self, k4_file):
        result = runner.invoke(app, ["distance", str(k4_file), "--kind", "epc"])
        assert result.exit_code == 0
        assert "4 (exact)" in result.output

    def test_bound_only_exit_code(self, k5_file, tmp_path: Path):
        args = ["distance", str(k5_file), "--mode", "bounded", "--max-weight", "1"]
        result = runner.invoke(app, [*args, "--output", "d.json"])
        assert result.exit_code == 3
        (data,) = json.loads((tmp_path / "d.json").read_text())
        assert data["exact"] is False
        assert data["value"] == 5

    def test_zero_max_weight_is_a_usage_error(self, k4_file):
        args = ["distance", str(k4_file), "--mode", "bounded", "--max-weight", "0"]
        result = runner.invoke(app, args)
        assert result.exit_code == 2
        assert result.exception is None or isinstance(result.exception, SystemExit)

    def test_code_file(self, swapped_code_file, tmp_path: Path):
        args = ["distance", str(swapped_code_file), "--kind", "apc", "--format", "csv"]
        result = runner.invoke(app, [*args, "--output", "d.csv"])
        assert result.exit_code == 0
        assert (tmp_path / "d.csv").read_text().splitlines()[1].startswith("zx,2,apc,2,exact,")

    def test_spec_file_with_several_graphs(self, write_file, tmp_path: Path):
        spec = write_file("cliques.yaml", "- {kind: clique, t: 4}\n- {kind: clique, t: 3}\n")
        args = ["distance", str(spec), "--format", "json", "--output", "d.json"]
        assert runner.invoke(app, args).exit_code == 0
        values = [d["value"] for d in json.loads((tmp_path / "d.json").read_text())]
        assert values == [4, 3]

    def test_invalid_kind(self, k4_file):
        assert runner.invoke(app, ["distance", str(k4_file), "--kind", "lee"]).exit_code == 2

    def test_non_self_dual_code(self, write_file):
        path = write_file("short.code", "n=2 k=1\n10|00\n")
        assert runner.invoke(app, ["distance", str(path), "--kind", "epc"]).exit_code == 2

    def test_missing_file(self):
        assert runner.invoke(app, ["distance", "absent.txt"]).exit_code == 2


class TestSpectra:
    def test_wht_csv(self, write_file, tmp_path: Path):
        path = write_file("f.txt", "n=2\n+++-\n")
        args = ["spectra", "wht", str(path), "--format", "csv", "--output", "w.csv"]
        assert runner.invoke(app, args).exit_code == 0
        lines = (tmp_path / "w.csv").read_text().splitlines()
        assert lines == [
            "mask,re,im,norm2",
            "00,2,0,4",
            "10,2,0,4",
            "01,2,0,4",
            "11,-2,0,4",
        ]

    def test_ihn_partition(self, write_file, tmp_path: Path):
        path = write_file("f.txt", "n=1\n++\n")
        args = ["spectra", "ihn", str(path), "--c", "1", "--output", "s.csv"]
        assert runner.invoke(app, args).exit_code == 0
        lines = (tmp_path / "s.csv").read_text().splitlines()
        assert lines == ["mask,re,im,norm2", "0,1,1,2", "1,1,-1,2"]

    def test_ihn_mask_length(self, k4_file):
        assert runner.invoke(app, ["spectra", "ihn", str(k4_file), "--mu", "10"]).exit_code == 2

    def test_ihn_precondition(self, k4_file):
        args = ["spectra", "ihn", str(k4_file), "--mu", "1000", "--c", "1000"]
        assert runner.invoke(app, args).exit_code == 2

    def test_par_ih(self, k4_file):
        result = runner.invoke(app, ["spectra", "par", str(k4_file), "--ih-only"])
        assert result.exit_code == 0
        assert "PAR_IH = 2" in result.output

    def test_par_size_limit(self, write_file):
        path = write_file("big.txt", "n=11\n" + "+" * 2048 + "\n")
        assert runner.invoke(app, ["spectra", "par", str(path)]).exit_code == 2


class TestVerify:
    def test_suite_passes(self, tmp_path: Path):
        args = ["verify", "wk", "--n", "4", "--samples", "3", "--seed", "1", "--format", "json"]
        result = runner.invoke(app, [*args, "--output", "v.json"])
        assert result.exit_code == 0
        data = json.loads((tmp_path / "v.json").read_text())
        assert data["passed"] is True
        assert data["reports"][0]["name"] == "wk"

    def test_all_suites_csv(self, tmp_path: Path):
        args = ["verify", "all", "--n", "4", "--samples", "2", "--format", "csv"]
        assert runner.invoke(app, [*args, "--output", "v.csv"]).exit_code == 0
        lines = (tmp_path / "v.csv").read_text().splitlines()
        assert len(lines) == 10
        assert all(line.endswith(",0") for line in lines[1:])

    def test_unknown_suite(self):
        assert runner.invoke(app, ["verify", "nope"]).exit_code == 2


class TestAlphaCompare:
    def test_counts_sum_to_samples(self, prism_file, tmp_path: Path):
        args = ["alpha-compare", "--graph", str(prism_file), "--samples", "4", "--seed", "1"]
        assert runner.invoke(app, [*args, "--output", "a.csv"]).exit_code == 0
        lines = (tmp_path / "a.csv").read_text().splitlines()
        assert lines[0] == "name,n,degree,alpha_target,alpha_value,count,asymptotic"
        assert all(line.startswith("prism,6,3,2,") for line in lines[1:])
        assert sum(int(line.split(",")[5]) for line in lines[1:]) == 4
        assert {line.split(",")[6] for line in lines[1:]} == {"4.394449"}

    def test_byte_identical_reruns(self, prism_file, tmp_path: Path):
        args = ["alpha-compare", "--graph", str(prism_file), "--samples", "5", "--seed", "3"]
        runner.invoke(app, [*args, "--format", "json", "--output", "a.json"])
        runner.invoke(app, [*args, "--format", "json", "--output", "b.json"])
        assert (tmp_path / "a.json").read_bytes() == (tmp_path / "b.json").read_bytes()

    def test_irregular_graph(self, write_file):
        path = write_file("path.txt", "n=3\n1 2\n2 3\n")
        assert runner.invoke(app, ["alpha-compare", "--graph", str(path)]).exit_code == 2
