"""Generator-matrix files: binary ``alpha|beta`` rows, GF(4) rows, or JSON.

Text form::

    n=3 k=3
    011|100
    101|010
    110|001

GF(4) rows use the symbols 0, 1, w, W in place of ``alpha|beta``.
"""

from __future__ import annotations

import json
from typing import Literal

from qnl.errors import FormatError
from qnl.formats.common import (
    bits_string,
    data_lines,
    load_json,
    looks_like_json,
    parse_bits,
    parse_header,
    require_int,
)
from qnl.stabilizer.gray import gray_decode, gray_encode
from qnl.stabilizer.models import GeneratorMatrix, PauliVector

CodeStyle = Literal["binary", "gf4", "json"]

CODE_STYLES: tuple[str, ...] = ("binary", "gf4", "json")


def _parse_row(line: str, number: int, n: int) -> PauliVector:
    if "|" in line:
        alpha_text, _, beta_text = line.partition("|")
        alpha = parse_bits(alpha_text.strip(), n, number=number, label="alpha")
        beta = parse_bits(beta_text.strip(), n, number=number, label="beta")
        return PauliVector(n, alpha, beta)
    try:
        row = gray_encode(line)
    except FormatError as exc:
        raise FormatError(f"line {number}: {exc}", index=exc.index, line=number) from None
    if row.n != n:
        raise FormatError(
            f"line {number}: GF(4) row has {row.n} symbols, expected {n}", line=number
        )
    return row


def _from_json(data: dict) -> GeneratorMatrix:
    n = require_int(data, "n")
    k = require_int(data, "k")
    rows = data.get("rows")
    if not isinstance(rows, list):
        raise FormatError("JSON field 'rows' must be a list")
    if len(rows) != k:
        raise FormatError(f"k={k} but {len(rows)} rows given")
    parsed = []
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, dict) or not {"alpha", "beta"} <= row.keys():
            raise FormatError(f"row {i} must be an object with 'alpha' and 'beta'", index=i - 1)
        alpha = parse_bits(str(row["alpha"]), n, number=i, label="alpha")
        beta = parse_bits(str(row["beta"]), n, number=i, label="beta")
        parsed.append(PauliVector(n, alpha, beta))
    return GeneratorMatrix(n, tuple(parsed))


def parse_code(text: str) -> GeneratorMatrix:
    """Parse any of the three generator-matrix layouts."""
    if looks_like_json(text):
        return _from_json(load_json(text))
    lines = data_lines(text)
    if not lines:
        raise FormatError("empty code file")
    number, header = lines[0]
    values = parse_header(header, number, ("n", "k"))
    n, k = values["n"], values["k"]
    rows = lines[1:]
    if len(rows) != k:
        raise FormatError(f"header says k={k} but {len(rows)} rows follow", line=number)
    return GeneratorMatrix(n, tuple(_parse_row(line, num, n) for num, line in rows))


def is_code_text(text: str) -> bool:
    """True when the header names a row count ``k`` (graph files only carry ``n``)."""
    if looks_like_json(text):
        try:
            return "k" in load_json(text)
        except FormatError:
            return False
    lines = data_lines(text)
    return bool(lines) and any(tok.startswith("k=") for tok in lines[0][1].split())


def format_code(g: GeneratorMatrix, style: CodeStyle = "binary") -> str:
    if style == "json":
        payload = {
            "n": g.n,
            "k": g.k,
            "rows": [
                {"alpha": bits_string(r.alpha, g.n), "beta": bits_string(r.beta, g.n)}
                for r in g.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if style not in CODE_STYLES:
        raise ValueError(f"unknown code style {style!r}")
    body = [gray_decode(r) if style == "gf4" else str(r) for r in g.rows]
    return "\n".join([f"n={g.n} k={g.k}", *body]) + "\n"
