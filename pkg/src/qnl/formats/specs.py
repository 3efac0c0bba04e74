"""YAML graph specs: nested cliques, circulants, cliques and random regular graphs.

A spec file holds one mapping or a list of them::

    - name: nc5
      kind: nested-clique
      t: 5
      sigma: paper-affine      # cyclic | identity | list of 1-based permutations
    - name: c18
      kind: two-circulant
      a: "011000001"
      b: "100100000"
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Union

import yaml

from qnl.errors import FormatError
from qnl.graphs.constructors import (
    NestedCliqueSpec,
    circulant,
    clique,
    nested_clique,
    two_circulant,
)
from qnl.graphs.models import Graph
from qnl.graphs.random_regular import random_regular

SPEC_SUFFIXES = (".yaml", ".yml")


@dataclass(frozen=True)
class NamedGraph:
    name: str
    kind: str
    graph: Graph


def _row(value: Any, field: str) -> list[int]:
    if isinstance(value, str):
        text = value.strip()
        if set(text) - {"0", "1"}:
            raise FormatError(f"{field} must be a 0/1 string, got {value!r}")
        return [int(ch) for ch in text]
    if isinstance(value, list):
        return [int(v) for v in value]
    raise FormatError(f"{field} must be a 0/1 string or a list")


def _int(entry: dict, key: str) -> int:
    value = entry.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f"spec field {key!r} must be an integer")
    return value


def sigma_value(raw: Any) -> Union[str, tuple[tuple[int, ...], ...]]:
    """A sigma rule name, or an explicit list of permutations."""
    if isinstance(raw, str):
        return raw
    if isinstance(raw, list) and all(isinstance(p, list) for p in raw):
        return tuple(tuple(int(v) for v in p) for p in raw)
    raise FormatError("sigma must be a rule name or a list of permutations")


def load_sigma_file(path: Path) -> tuple[tuple[int, ...], ...]:
    """Read a YAML file holding a bare list of permutations."""
    data = _safe_load(path)
    value = sigma_value(data)
    if isinstance(value, str):
        raise FormatError(f"{path} must hold a list of permutations")
    return value


def _nested(entry: dict) -> Graph:
    spec = NestedCliqueSpec(
        _int(entry, "t"),
        sigma_value(entry.get("sigma", "paper-affine")),
        entry.get("blocks"),
    )
    return nested_clique(spec)


_BUILDERS: dict[str, Callable[[dict], Graph]] = {
    "clique": lambda e: clique(_int(e, "t")),
    "nested-clique": _nested,
    "circulant": lambda e: circulant(_row(e.get("first_row"), "first_row")),
    "two-circulant": lambda e: two_circulant(_row(e.get("a"), "a"), _row(e.get("b"), "b")),
    "random-regular": lambda e: random_regular(
        _int(e, "n"), _int(e, "degree"), int(e.get("seed", 0))
    ),
}

SPEC_KINDS: tuple[str, ...] = tuple(_BUILDERS)


def _safe_load(path: Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return yaml.safe_load(f)
    except yaml.YAMLError as exc:
        raise FormatError(f"invalid YAML in {path}: {exc}") from exc


def build_spec(entry: dict, default_name: str) -> NamedGraph:
    if not isinstance(entry, dict):
        raise FormatError("each spec entry must be a mapping")
    kind = entry.get("kind")
    if kind not in _BUILDERS:
        raise FormatError(f"unknown spec kind {kind!r}; expected one of {', '.join(SPEC_KINDS)}")
    return NamedGraph(str(entry.get("name", default_name)), kind, _BUILDERS[kind](entry))


def load_specs(path: Path) -> list[NamedGraph]:
    """Build every graph described in a YAML spec file."""
    data = _safe_load(path)
    if data is None:
        raise FormatError(f"{path} is empty")
    if not isinstance(data, list):
        data = [data]
    stem = path.stem
    return [
        build_spec(entry, stem if len(data) == 1 else f"{stem}-{i}")
        for i, entry in enumerate(data, start=1)
    ]
