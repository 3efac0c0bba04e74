"""Path-level entry points: pick the right reader for a file."""

from __future__ import annotations

from pathlib import Path

from qnl.boolean.truth_table import TruthTable, from_graph
from qnl.errors import FormatError
from qnl.formats.code_file import is_code_text, parse_code
from qnl.formats.graph_file import parse_graph
from qnl.formats.specs import SPEC_SUFFIXES, NamedGraph, load_specs
from qnl.formats.table_file import is_table_text, parse_table
from qnl.graphs.models import Graph
from qnl.stabilizer.models import GeneratorMatrix


def read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc


def load_graphs(path: Path) -> list[NamedGraph]:
    """Graphs from a YAML spec file, or the single graph of a graph file."""
    if path.suffix in SPEC_SUFFIXES:
        return load_specs(path)
    return [NamedGraph(path.stem, "file", parse_graph(read_text(path)))]


def load_graph(path: Path) -> NamedGraph:
    graphs = load_graphs(path)
    if len(graphs) != 1:
        raise FormatError(f"{path} describes {len(graphs)} graphs; expected exactly one")
    return graphs[0]


def load_code_or_graph(path: Path) -> tuple[str, GeneratorMatrix | Graph]:
    """A generator matrix when the file carries ``k``, otherwise a graph."""
    if path.suffix in SPEC_SUFFIXES:
        named = load_graph(path)
        return named.name, named.graph
    text = read_text(path)
    if is_code_text(text):
        return path.stem, parse_code(text)
    return path.stem, parse_graph(text)


def load_table(path: Path) -> TruthTable:
    """A truth table, or the quadratic form of a graph."""
    if path.suffix in SPEC_SUFFIXES:
        return from_graph(load_graph(path).graph)
    text = read_text(path)
    if is_table_text(text):
        return parse_table(text)
    return from_graph(parse_graph(text))
