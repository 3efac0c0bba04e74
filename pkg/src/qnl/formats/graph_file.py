"""Graph files: adjacency rows, 1-indexed edge lists, or JSON."""

from __future__ import annotations

import json
from typing import Literal

from qnl.errors import FormatError
from qnl.formats.common import (
    data_lines,
    load_json,
    looks_like_json,
    parse_bits,
    parse_header,
    require_int,
)
from qnl.graphs.models import Graph

GraphStyle = Literal["text", "json", "edges"]

GRAPH_STYLES: tuple[str, ...] = ("text", "json", "edges")


def _edge(line: str, number: int, n: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise FormatError(f"line {number}: expected 'u v', got {line!r}", line=number)
    try:
        u, v = (int(p) for p in parts)
    except ValueError:
        raise FormatError(f"line {number}: vertices must be integers", line=number) from None
    if not (1 <= u <= n and 1 <= v <= n):
        raise FormatError(f"line {number}: edge ({u}, {v}) outside 1..{n}", line=number)
    return u - 1, v - 1


def _rows(lines: list[tuple[int, str]], n: int) -> Graph:
    if len(lines) != n:
        raise FormatError(f"expected {n} adjacency rows, got {len(lines)}")
    return Graph(n, tuple(parse_bits(line, n, number=num, label="row") for num, line in lines))


def parse_graph(text: str) -> Graph:
    """Parse an adjacency-row file, an edge list, or the JSON mirror.

    After the ``n=<int>`` header, lines of the form ``u v`` make an edge list;
    a file with no further lines is the empty graph.
    """
    if looks_like_json(text):
        data = load_json(text)
        n = require_int(data, "n")
        rows = data.get("rows")
        if not isinstance(rows, list):
            raise FormatError("JSON field 'rows' must be a list")
        return _rows([(i, str(r)) for i, r in enumerate(rows, start=1)], n)

    lines = data_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    number, header = lines[0]
    n = parse_header(header, number, ("n",))["n"]
    body = lines[1:]
    if not body:
        return Graph.empty(n)
    if len(body[0][1].split()) == 2:
        return Graph.from_edges(n, [_edge(line, num, n) for num, line in body])
    return _rows(body, n)


def format_graph(g: Graph, style: GraphStyle = "text") -> str:
    if style == "json":
        return json.dumps({"n": g.n, "rows": g.row_strings()}, indent=2) + "\n"
    if style == "edges":
        return "\n".join([f"n={g.n}", *(f"{i + 1} {j + 1}" for i, j in g.edges())]) + "\n"
    if style != "text":
        raise ValueError(f"unknown graph style {style!r}")
    return "\n".join([f"n={g.n}", *g.row_strings()]) + "\n"
