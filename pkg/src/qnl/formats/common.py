"""Line handling shared by the flat-file readers."""

from __future__ import annotations

import json
from typing import Any

from qnl.errors import FormatError


def data_lines(text: str) -> list[tuple[int, str]]:
    """Non-blank lines with ``#`` comments stripped, paired with 1-based line numbers."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def parse_header(line: str, number: int, keys: tuple[str, ...]) -> dict[str, int]:
    """Parse ``key=<int>`` tokens; every name in *keys* must be present."""
    values: dict[str, int] = {}
    for token in line.split():
        key, sep, raw = token.partition("=")
        if not sep:
            raise FormatError(f"line {number}: expected key=value, got {token!r}", line=number)
        try:
            values[key] = int(raw)
        except ValueError:
            raise FormatError(
                f"line {number}: {key} must be an integer, got {raw!r}", line=number
            ) from None
    missing = [k for k in keys if k not in values]
    if missing:
        raise FormatError(f"line {number}: header is missing {', '.join(missing)}", line=number)
    return values


def parse_bits(text: str, width: int, *, number: int, label: str) -> int:
    """A 0/1 string (position 1 leftmost) as a word with position 1 in bit 0."""
    if len(text) != width:
        raise FormatError(
            f"line {number}: {label} has {len(text)} entries, expected {width}", line=number
        )
    word = 0
    for j, ch in enumerate(text):
        if ch == "1":
            word |= 1 << j
        elif ch != "0":
            raise FormatError(
                f"line {number}: invalid character {ch!r} at index {j} of {label}",
                index=j,
                line=number,
            )
    return word


def bits_string(word: int, width: int) -> str:
    return "".join("1" if (word >> j) & 1 else "0" for j in range(width))


def looks_like_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def load_json(text: str) -> dict[str, Any]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", line=exc.lineno) from exc
    if not isinstance(data, dict):
        raise FormatError("JSON document must be an object")
    return data


def require_int(data: dict[str, Any], key: str) -> int:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"JSON field {key!r} must be an integer")
    return value
