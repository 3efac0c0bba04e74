"""Shared test fixtures: graphs, tables and input files."""

from __future__ import annotations

import textwrap
from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from qnl.graphs.constructors import clique, k2k3, nested_clique_9
from qnl.graphs.models import Graph


@pytest.fixture
def k2() -> Graph:
    return clique(2)


@pytest.fixture
def k3() -> Graph:
    return clique(3)


@pytest.fixture
def k4() -> Graph:
    return clique(4)


@pytest.fixture
def k5() -> Graph:
    return clique(5)


@pytest.fixture
def nested9() -> Graph:
    """The 9×9 nested clique [K_3[K_3]] with a cyclic sigma."""
    return nested_clique_9()


@pytest.fixture
def two_triangles() -> Graph:
    return k2k3()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[[str, str], Path]:
    """Write dedented text to tmp_path/name and return the path."""

    def _write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(textwrap.dedent(text), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def nested9_file(write_file, nested9: Graph) -> Path:
    return write_file("nested9.txt", "\n".join([f"n={nested9.n}", *nested9.row_strings()]) + "\n")


@pytest.fixture
def k4_file(write_file, k4: Graph) -> Path:
    return write_file("k4.txt", "\n".join(["n=4", *k4.row_strings()]) + "\n")


@pytest.fixture
def k5_file(write_file, k5: Graph) -> Path:
    return write_file("k5.txt", "\n".join(["n=5", *k5.row_strings()]) + "\n")


@pytest.fixture
def swapped_code_file(write_file) -> Path:
    """Generators ZX and XZ on two qubits."""
    return write_file(
        "zx.code",
        """\
        n=2 k=2
        01|10
        10|01
        """,
    )
