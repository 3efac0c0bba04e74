"""Truth-table files: ``n=<int>`` then a string over {+,-} in index order."""

from __future__ import annotations

import json
from typing import Literal

from qnl.boolean.truth_table import TruthTable
from qnl.errors import FormatError
from qnl.formats.common import data_lines, load_json, looks_like_json, parse_header, require_int


def _check_length(table: TruthTable, n: int) -> TruthTable:
    if table.n != n:
        raise FormatError(f"header says n={n} but the table has {len(table)} entries")
    return table


def parse_table(text: str) -> TruthTable:
    if looks_like_json(text):
        data = load_json(text)
        n = require_int(data, "n")
        signs = data.get("table")
        if not isinstance(signs, str):
            raise FormatError("JSON field 'table' must be a string over {+,-}")
        return _check_length(TruthTable.from_string(signs), n)

    lines = data_lines(text)
    if len(lines) != 2:
        raise FormatError(f"expected a header and one sign line, got {len(lines)} lines")
    number, header = lines[0]
    n = parse_header(header, number, ("n",))["n"]
    sign_number, signs = lines[1]
    try:
        table = TruthTable.from_string(signs)
    except FormatError as exc:
        raise FormatError(f"line {sign_number}: {exc}", index=exc.index, line=sign_number) from None
    return _check_length(table, n)


def is_table_text(text: str) -> bool:
    if looks_like_json(text):
        try:
            return "table" in load_json(text)
        except FormatError:
            return False
    lines = data_lines(text)
    return len(lines) == 2 and set(lines[1][1]) <= {"+", "-"}


def format_table(t: TruthTable, style: Literal["text", "json"] = "text") -> str:
    if style == "json":
        return json.dumps({"n": t.n, "table": t.to_string()}, indent=2) + "\n"
    return f"n={t.n}\n{t.to_string()}\n"
