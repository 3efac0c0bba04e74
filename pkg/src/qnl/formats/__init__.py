"""Flat-file formats for codes, graphs, truth tables and YAML graph specs."""

from qnl.formats.code_file import CODE_STYLES, format_code, is_code_text, parse_code
from qnl.formats.graph_file import GRAPH_STYLES, format_graph, parse_graph
from qnl.formats.loader import load_code_or_graph, load_graph, load_graphs, load_table, read_text
from qnl.formats.specs import SPEC_KINDS, NamedGraph, load_sigma_file, load_specs
from qnl.formats.table_file import format_table, is_table_text, parse_table

__all__ = [
    "CODE_STYLES",
    "GRAPH_STYLES",
    "NamedGraph",
    "SPEC_KINDS",
    "format_code",
    "format_graph",
    "format_table",
    "is_code_text",
    "is_table_text",
    "load_code_or_graph",
    "load_graph",
    "load_graphs",
    "load_sigma_file",
    "load_specs",
    "load_table",
    "parse_code",
    "parse_graph",
    "parse_table",
    "read_text",
]
