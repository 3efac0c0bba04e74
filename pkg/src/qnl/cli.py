"""Typer application: graph, code, distance, spectra, verify, alpha-compare and init commands."""

from __future__ import annotations

import os
from pathlib import Path
from typing import Callable, Optional

import typer
from rich.console import Console

from qnl import __version__
from qnl.config.schema import OUTPUT_FORMATS, QnlConfig
from qnl.errors import QnlError

app = typer.Typer(
    name="qnl",
    help="Exact distances, spectra and identity checks for self-dual codes, graphs "
    "and boolean functions.",
    add_completion=False,
    no_args_is_help=True,
)
code_app = typer.Typer(help="Generator-matrix tools: B-form reduction and conversion.")
spectra_app = typer.Typer(help="Spectrum dumps and peak-to-average ratios.")
app.add_typer(code_app, name="code")
app.add_typer(spectra_app, name="spectra")

console = Console(stderr=True)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BOUND_ONLY = 3

GRAPH_KINDS = ("clique", "nested-clique", "circulant", "two-circulant", "random-regular", "spec")

_CONFIG = typer.Option(None, "--config", help="Path to .qnl.toml")
_FORMAT = typer.Option(None, "--format", help="Output format: text | json | csv")
_OUTPUT = typer.Option(None, "--output", help="Write the report to this file")
_THREADS = typer.Option(None, "--threads", help="Worker processes (capped by QNL_THREADS)")
_VERBOSE = typer.Option(False, "--verbose", help="Progress records on stderr")
_DEBUG = typer.Option(False, "--debug", help="Debug records on stderr")


def _fail(label: str, exc: BaseException, code: int = EXIT_USAGE) -> typer.Exit:
    console.print(f"[bold red]{label}:[/bold red] {exc}")
    return typer.Exit(code=code)


def _setup(
    config: Optional[str], fmt: Optional[str], *, verbose: bool = False, debug: bool = False
) -> QnlConfig:
    """Logging plus config with command-line overrides; exits 2 on bad input."""
    from qnl.config.loader import ConfigError, load_config
    from qnl.console import configure_logging

    configure_logging(verbose=verbose, debug=debug)
    try:
        cfg = load_config(Path.cwd(), config)
    except ConfigError as exc:
        raise _fail("Config error", exc) from exc
    if fmt is not None:
        if fmt not in OUTPUT_FORMATS:
            console.print(f"[bold red]Invalid format:[/bold red] {fmt}")
            raise typer.Exit(code=EXIT_USAGE)
        cfg.run.format = fmt  # type: ignore[assignment]
    return cfg


def _threads(cfg: QnlConfig, flag: Optional[int]) -> int:
    threads = flag if flag is not None else cfg.run.threads
    cap = os.environ.get("QNL_THREADS", "")
    if cap.isdigit() and int(cap) > 0:
        threads = min(threads, int(cap))
    return max(threads, 1)


def _emit(text: str, output: Optional[str]) -> None:
    """Print a rendered report, or write it when *output* names a file."""
    if output:
        Path(output).write_text(text, encoding="utf-8")
        console.print(f"[dim]Report written to {output}[/dim]")
    else:
        typer.echo(text, nl=not text.endswith("\n"))


def _run(label: str, action: Callable):
    """Call *action*, turning qnl errors into exit code 2."""
    try:
        return action()
    except QnlError as exc:
        raise _fail(label, exc) from exc


# ── graph ─────────────────────────────────────────────────────────────────────


def _sigma(value: str):
    from qnl.formats.specs import load_sigma_file

    if value.endswith((".yaml", ".yml")):
        return load_sigma_file(Path(value))
    return value


def _bits_option(value: Optional[str], name: str) -> list[int]:
    if not value or set(value) - {"0", "1"}:
        console.print(f"[bold red]Option --{name} needs a 0/1 string,[/bold red] got {value!r}")
        raise typer.Exit(code=EXIT_USAGE)
    return [int(ch) for ch in value]


@app.command()
def graph(
    kind: str = typer.Argument(..., help=" | ".join(GRAPH_KINDS)),
    t: int = typer.Option(3, "--t", help="Clique size t"),
    sigma: str = typer.Option(
        "paper-affine", "--sigma", help="paper-affine | cyclic | identity | permutations.yaml"
    ),
    blocks: Optional[int] = typer.Option(None, "--blocks", help="Outer clique size (default t)"),
    n: Optional[int] = typer.Option(None, "--n", help="Vertex count (random-regular)"),
    degree: Optional[int] = typer.Option(None, "--degree", help="Degree (random-regular)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed (random-regular)"),
    first_row: Optional[str] = typer.Option(None, "--first-row", help="Circulant first row"),
    a_row: Optional[str] = typer.Option(None, "--a-row", help="First row of A (two-circulant)"),
    b_row: Optional[str] = typer.Option(None, "--b-row", help="First row of B (two-circulant)"),
    spec: Optional[str] = typer.Option(None, "--spec", help="YAML spec file (kind 'spec')"),
    style: Optional[str] = typer.Option(None, "--style", help="Graph file: text | json | edges"),
    output: Optional[str] = _OUTPUT,
    config: Optional[str] = _CONFIG,
    verbose: bool = _VERBOSE,
    debug: bool = _DEBUG,
) -> None:
    """Build a graph and write its adjacency file."""
    from qnl.formats.graph_file import GRAPH_STYLES, format_graph
    from qnl.formats.loader import load_graph
    from qnl.graphs.constructors import (
        NestedCliqueSpec,
        circulant,
        clique,
        nested_clique,
        two_circulant,
    )
    from qnl.graphs.random_regular import random_regular
    from qnl.output import terminal
    from qnl.reports import GraphSummary

    cfg = _setup(config, None, verbose=verbose, debug=debug)
    if kind not in GRAPH_KINDS:
        console.print(f"[bold red]Unknown graph kind:[/bold red] {kind}")
        raise typer.Exit(code=EXIT_USAGE)
    if style is None:
        style = "json" if output and output.endswith(".json") else "text"
    if style not in GRAPH_STYLES:
        console.print(f"[bold red]Invalid style:[/bold red] {style}")
        raise typer.Exit(code=EXIT_USAGE)

    def build():
        if kind == "clique":
            return f"K{t}", clique(t)
        if kind == "nested-clique":
            spec_ = NestedCliqueSpec(t, _sigma(sigma), blocks)
            return f"nested-clique-t{t}", nested_clique(spec_)
        if kind == "circulant":
            return "circulant", circulant(_bits_option(first_row, "first-row"))
        if kind == "two-circulant":
            a = _bits_option(a_row, "a-row")
            b = _bits_option(b_row, "b-row")
            return "two-circulant", two_circulant(a, b)
        if kind == "random-regular":
            if n is None or degree is None:
                console.print("[bold red]Missing option:[/bold red] --n and --degree")
                raise typer.Exit(code=EXIT_USAGE)
            run_seed = seed if seed is not None else cfg.run.seed
            return f"random-regular-n{n}-d{degree}-s{run_seed}", random_regular(n, degree, run_seed)
        if spec is None:
            console.print("[bold red]Missing option:[/bold red] --spec")
            raise typer.Exit(code=EXIT_USAGE)
        named = load_graph(Path(spec))
        return named.name, named.graph

    name, g = _run("Graph error", build)
    _emit(format_graph(g, style), output)  # type: ignore[arg-type]
    terminal.render_graph_summary(GraphSummary.of(name, g), console=console)


# ── code ──────────────────────────────────────────────────────────────────────


@code_app.command("bform")
def code_bform(
    path: str = typer.Argument(..., help="Generator-matrix file"),
    output: Optional[str] = typer.Option(None, "--output", help="Write B as a graph file"),
    fmt: Optional[str] = _FORMAT,
    config: Optional[str] = _CONFIG,
    verbose: bool = _VERBOSE,
    debug: bool = _DEBUG,
) -> None:
    """Reduce a real self-dual code to B-form and print B with the transformation log."""
    from qnl.formats.code_file import parse_code
    from qnl.formats.graph_file import format_graph
    from qnl.formats.loader import read_text
    from qnl.output import json_report, terminal
    from qnl.reports import BformReport
    from qnl.stabilizer.bform import bform_reduce

    cfg = _setup(config, fmt, verbose=verbose, debug=debug)
    code = _run("Reduction error", lambda: bform_reduce(parse_code(read_text(Path(path)))))
    report = BformReport.of(Path(path).stem, code)

    if cfg.run.format == "json":
        typer.echo(json_report.dumps(json_report.bform_dict(report)))
    else:
        terminal.render_bform(report)
    if output:
        Path(output).write_text(format_graph(code.b), encoding="utf-8")
        console.print(f"[dim]B written to {output}[/dim]")


@code_app.command("convert")
def code_convert(
    path: str = typer.Argument(..., help="Generator-matrix file"),
    to: str = typer.Option(..., "--to", help="gf4 | binary | json"),
    output: Optional[str] = _OUTPUT,
) -> None:
    """Rewrite a generator-matrix file in another layout."""
    from qnl.formats.code_file import CODE_STYLES, format_code, parse_code
    from qnl.formats.loader import read_text

    if to not in CODE_STYLES:
        console.print(f"[bold red]Invalid target:[/bold red] {to}")
        raise typer.Exit(code=EXIT_USAGE)
    g = _run("Format error", lambda: parse_code(read_text(Path(path))))
    _emit(format_code(g, to), output)  # type: ignore[arg-type]


# ── distance ──────────────────────────────────────────────────────────────────


@app.command()
def distance(
    path: str = typer.Argument(..., help="Graph, code, or YAML spec file"),
    kind: str = typer.Option("binary", "--kind", help="hamming | binary | apc | epc"),
    max_weight: Optional[int] = typer.Option(
        None, "--max-weight", "--budget", help="Bounded search: exhaust wt(u) <= W"
    ),
    max_candidates: Optional[int] = typer.Option(None, "--max-candidates"),
    wall_clock: Optional[float] = typer.Option(None, "--wall-clock", help="Seconds (hint)"),
    mode: str = typer.Option("auto", "--mode", help="auto | exact | bounded"),
    threads: Optional[int] = _THREADS,
    fmt: Optional[str] = _FORMAT,
    output: Optional[str] = _OUTPUT,
    config: Optional[str] = _CONFIG,
    verbose: bool = _VERBOSE,
    debug: bool = _DEBUG,
) -> None:
    """Minimum distance with exactness flag and witness. Exit 3 when only a bound is known."""
    from qnl.config.loader import ConfigError
    from qnl.formats.loader import load_code_or_graph, load_graphs
    from qnl.formats.specs import SPEC_SUFFIXES
    from qnl.output import csv_report, json_report, terminal
    from qnl.reports import DISTANCE_KINDS, distance_report

    cfg = _setup(config, fmt, verbose=verbose, debug=debug)
    if kind not in DISTANCE_KINDS:
        console.print(f"[bold red]Invalid kind:[/bold red] {kind}")
        raise typer.Exit(code=EXIT_USAGE)
    if mode not in ("auto", "exact", "bounded"):
        console.print(f"[bold red]Invalid mode:[/bold red] {mode}")
        raise typer.Exit(code=EXIT_USAGE)
    budget = cfg.budget
    if max_weight is not None:
        if max_weight < 1:
            raise _fail("Config error", ConfigError(f"--max-weight must be >= 1, got {max_weight}"))
        budget.max_weight = max_weight
    if max_candidates is not None:
        budget.max_candidates = max_candidates
    if wall_clock is not None:
        budget.wall_clock_seconds = wall_clock
    workers = _threads(cfg, threads)

    source = Path(path)
    if source.suffix in SPEC_SUFFIXES:
        inputs = [(g.name, g.graph) for g in _run("Input error", lambda: load_graphs(source))]
    else:
        inputs = [_run("Input error", lambda: load_code_or_graph(source))]

    reports = [
        _run(
            "Distance error",
            lambda name=name, obj=obj: distance_report(
                name, obj, kind, budget, mode=mode, threads=workers  # type: ignore[arg-type]
            ),
        )
        for name, obj in inputs
    ]

    if cfg.run.format == "json":
        payload = [json_report.distance_dict(r) for r in reports]
        _emit(json_report.dumps(payload[0] if len(payload) == 1 else payload), output)
    elif cfg.run.format == "csv":
        _emit(csv_report.distance_csv(reports), output)
    else:
        for report in reports:
            terminal.render_distance(report)
        if output:
            payload = [json_report.distance_dict(r) for r in reports]
            Path(output).write_text(json_report.dumps(payload), encoding="utf-8")

    if not all(r.exact for r in reports):
        raise typer.Exit(code=EXIT_BOUND_ONLY)


# ── spectra ───────────────────────────────────────────────────────────────────


def _mask(value: Optional[str], n: int, name: str) -> int:
    from qnl.boolean.models import Mask, MaskError

    if not value:
        return 0
    try:
        mask = Mask.parse(value, name=name)
    except MaskError as exc:
        raise _fail("Mask error", exc) from exc
    if mask.n != n:
        console.print(f"[bold red]Mask error:[/bold red] {name} has {mask.n} coordinates, n={n}")
        raise typer.Exit(code=EXIT_USAGE)
    return int(mask)


def _emit_rows(title: str, rows: list[tuple], fmt: str, output: Optional[str]) -> None:
    from qnl.output import csv_report, json_report, terminal

    header = csv_report.SPECTRUM_HEADER
    if fmt == "json":
        _emit(json_report.dumps(json_report.rows_dicts(header, rows)), output)
    elif fmt == "csv" or output:
        _emit(csv_report.rows_csv(header, rows), output)
    else:
        terminal.render_rows(title, header, rows)


@spectra_app.command("wht")
def spectra_wht(
    path: str = typer.Argument(..., help="Truth-table or graph file"),
    fmt: Optional[str] = _FORMAT,
    output: Optional[str] = _OUTPUT,
    config: Optional[str] = _CONFIG,
) -> None:
    """Walsh-Hadamard spectrum as mask,re,im,norm2 rows."""
    from qnl.boolean.spectra import wht_rows
    from qnl.formats.loader import load_table

    cfg = _setup(config, fmt)
    table = _run("Input error", lambda: load_table(Path(path)))
    _emit_rows("Walsh-Hadamard spectrum", list(wht_rows(table)), cfg.run.format, output)


@spectra_app.command("ihn")
def spectra_ihn(
    path: str = typer.Argument(..., help="Truth-table or graph file"),
    mu: Optional[str] = typer.Option(None, "--mu", help="Identity coordinates, e.g. 1000"),
    c: Optional[str] = typer.Option(None, "--c", help="Nega-Hadamard coordinates within mu-bar"),
    r: Optional[str] = typer.Option(None, "--r", help="Fixed values on mu"),
    fmt: Optional[str] = _FORMAT,
    output: Optional[str] = _OUTPUT,
    config: Optional[str] = _CONFIG,
) -> None:
    """{I,H,N} spectrum of one partition: I on mu, N on c, H elsewhere."""
    from qnl.boolean.spectra import ihn_rows
    from qnl.formats.loader import load_table

    cfg = _setup(config, fmt)
    table = _run("Input error", lambda: load_table(Path(path)))
    masks = {name: _mask(value, table.n, name) for name, value in (("mu", mu), ("c", c), ("r", r))}
    rows = _run(
        "Mask error", lambda: list(ihn_rows(table, masks["c"], masks["mu"], masks["r"]))
    )
    _emit_rows("{I,H,N} spectrum", rows, cfg.run.format, output)


@spectra_app.command("par")
def spectra_par(
    path: str = typer.Argument(..., help="Truth-table or graph file"),
    ih_only: bool = typer.Option(False, "--ih-only", help="Only {I,H}^n transforms"),
    fmt: Optional[str] = _FORMAT,
    config: Optional[str] = _CONFIG,
) -> None:
    """Peak-to-average power ratio over {I,H,N}^n (or {I,H}^n), as an exact rational."""
    from qnl.boolean.spectra import par_ih, par_ihn
    from qnl.formats.loader import load_table
    from qnl.output import json_report

    cfg = _setup(config, fmt)
    table = _run("Input error", lambda: load_table(Path(path)))
    family = "IH" if ih_only else "IHN"
    value = _run("Size error", lambda: par_ih(table) if ih_only else par_ihn(table))
    if cfg.run.format == "json":
        typer.echo(json_report.dumps({"n": table.n, "family": family, "par": str(value)}))
    elif cfg.run.format == "csv":
        typer.echo(f"n,family,par\n{table.n},{family},{value}")
    else:
        typer.echo(f"PAR_{family} = {value}")


# ── verify ────────────────────────────────────────────────────────────────────


@app.command()
def verify(
    suite: str = typer.Argument(..., help="Suite name, or 'all'"),
    n: Optional[int] = typer.Option(None, "--n", help="Largest instance size"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Random instances per suite"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for instance generation"),
    threads: Optional[int] = _THREADS,
    fmt: Optional[str] = _FORMAT,
    output: Optional[str] = _OUTPUT,
    config: Optional[str] = _CONFIG,
    verbose: bool = _VERBOSE,
    debug: bool = _DEBUG,
) -> None:
    """Run a verification suite. Exit 1 on any failure."""
    from qnl.output import csv_report, json_report, terminal
    from qnl.verify.registry import ALL_SUITES, build_registry

    cfg = _setup(config, fmt, verbose=verbose, debug=debug)
    registry = build_registry()
    if suite != ALL_SUITES and registry.get(suite) is None:
        console.print(
            f"[bold red]Unknown suite:[/bold red] {suite} "
            f"(expected one of {', '.join(registry.names)}, {ALL_SUITES})"
        )
        raise typer.Exit(code=EXIT_USAGE)

    result = _run(
        "Verification error",
        lambda: registry.run(
            suite,
            n=n if n is not None else cfg.verify.n,
            samples=samples if samples is not None else cfg.verify.samples,
            seed=seed if seed is not None else cfg.run.seed,
            threads=_threads(cfg, threads),
        ),
    )

    if cfg.run.format == "json":
        _emit(json_report.dumps(json_report.suite_dict(result)), output)
    elif cfg.run.format == "csv":
        _emit(csv_report.suite_csv(result), output)
    else:
        terminal.render_suite(result)
        if output:
            Path(output).write_text(
                json_report.dumps(json_report.suite_dict(result)), encoding="utf-8"
            )

    if not result.passed:
        raise typer.Exit(code=EXIT_CHECK_FAILED)


# ── alpha-compare ─────────────────────────────────────────────────────────────


@app.command("alpha-compare")
def alpha_compare(
    graph_path: str = typer.Option(..., "--graph", help="Graph file or YAML spec"),
    samples: int = typer.Option(100, "--samples", help="Random regular graphs per input"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed of the first sample"),
    threads: Optional[int] = _THREADS,
    fmt: Optional[str] = _FORMAT,
    output: Optional[str] = _OUTPUT,
    config: Optional[str] = _CONFIG,
    verbose: bool = _VERBOSE,
    debug: bool = _DEBUG,
) -> None:
    """alpha(G) against random regular graphs with the same (n, degree)."""
    from qnl.formats.loader import load_graphs
    from qnl.graphs.compare import compare_alpha
    from qnl.output import csv_report, json_report, terminal

    cfg = _setup(config, fmt, verbose=verbose, debug=debug)
    graphs = _run("Input error", lambda: load_graphs(Path(graph_path)))
    run_seed = seed if seed is not None else cfg.run.seed
    workers = _threads(cfg, threads)
    comparisons = [
        _run(
            "Graph error",
            lambda named=named: compare_alpha(
                named.name,
                named.graph,
                samples,
                run_seed,
                max_nodes=cfg.mis.max_nodes,
                timeout_seconds=cfg.mis.timeout_seconds,
                threads=workers,
            ),
        )
        for named in graphs
    ]

    if cfg.run.format == "json":
        _emit(json_report.dumps(json_report.alpha_dicts(comparisons)), output)
    elif cfg.run.format == "csv" or output:
        _emit(csv_report.alpha_csv(comparisons), output)
    else:
        terminal.render_alpha(comparisons)


# ── init ──────────────────────────────────────────────────────────────────────


@app.command()
def init() -> None:
    """Generate a starter .qnl.toml in the current directory."""
    from qnl.config.defaults import DEFAULT_TOML
    from qnl.config.loader import CONFIG_FILENAME

    config_path = Path.cwd() / CONFIG_FILENAME
    if config_path.exists():
        console.print(f"[yellow]⚠[/yellow]  {CONFIG_FILENAME} already exists at {config_path}")
        raise typer.Exit(code=EXIT_CHECK_FAILED)
    config_path.write_text(DEFAULT_TOML, encoding="utf-8")
    console.print(f"[green]✓[/green] Created {config_path}")


# ── version ───────────────────────────────────────────────────────────────────


def _version_callback(value: bool) -> None:
    if value:
        print(f"qnl {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False, "--version", "-V", callback=_version_callback,
        is_eager=True, help="Show version and exit",
    ),
) -> None:
    """qnl: stabilizer codes, graphs and boolean functions, computed exactly."""
