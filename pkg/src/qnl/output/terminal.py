"""Rich terminal reporter: tables and coloured verdicts on stdout."""

from __future__ import annotations

from typing import Iterable, Optional

from rich.console import Console
from rich.table import Table

from qnl.graphs.compare import AlphaComparison
from qnl.reports import BformReport, DistanceReport, GraphSummary
from qnl.verify.models import SuiteResult

_MAX_FAILURES_SHOWN = 10


def _console(console: Optional[Console]) -> Console:
    return console or Console(highlight=False)


def _table(title: str) -> Table:
    return Table(title=title, title_style="bold", border_style="dim", show_lines=False)


def render_graph_summary(summary: GraphSummary, *, console: Optional[Console] = None) -> None:
    console = _console(console)
    profile = ", ".join(f"{deg}:{count}" for deg, count in summary.degree_profile.items())
    console.print(f"[bold]{summary.name}[/bold]")
    console.print(f"[dim]Vertices:[/dim]        {summary.n}")
    console.print(f"[dim]Edges:[/dim]           {summary.edges}")
    console.print(f"[dim]Degree profile:[/dim]  {profile}")
    if summary.regular_degree is not None:
        console.print(f"[dim]Regular:[/dim]         degree {summary.regular_degree}")


def render_distance(report: DistanceReport, *, console: Optional[Console] = None) -> None:
    console = _console(console)
    style = "bold green" if report.exact else "bold yellow"
    console.print(
        f"[bold]{report.name}[/bold]  n={report.n}  {report.kind} distance: "
        f"[{style}]{report.verdict}[/{style}]"
    )
    if report.witness is not None:
        witness = report.witness
        if report.witness_gf4 is not None:
            witness += f"  ({report.witness_gf4})"
        console.print(f"[dim]Witness:[/dim]          {witness}")
    if report.searched_weight is not None:
        console.print(f"[dim]Searched weight:[/dim]  {report.searched_weight}")
    if report.conjecture_floor is not None:
        mark = "[green]met[/green]" if report.meets_floor else "[red]NOT met[/red]"
        console.print(f"[dim]Conjecture floor:[/dim] 2t-2 = {report.conjecture_floor} {mark}")
    if report.gap is not None:
        note = "  [yellow](heuristic)[/yellow]" if report.gap.heuristic else ""
        console.print(f"[dim]Gap d_b/4:[/dim]        {report.gap.gap}{note}")


def render_bform(report: BformReport, *, console: Optional[Console] = None) -> None:
    console = _console(console)
    console.print(f"[bold]{report.name}[/bold]  B-form of n={report.code.n}")
    for row in report.code.b.row_strings():
        console.print(f"  {row}")
    console.print(f"[dim]Transformation log ({len(report.moves)} moves):[/dim]")
    for move in report.moves:
        console.print(f"  {move}")


def render_suite(result: SuiteResult, *, console: Optional[Console] = None) -> None:
    console = _console(console)
    table = _table("Verification")
    table.add_column("Suite", style="cyan")
    table.add_column("n", justify="right")
    table.add_column("Comparisons", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Time (ms)", justify="right", style="dim")
    for report in result.reports:
        failures = len(report.failures)
        shown = f"[red]{failures}[/red]" if failures else "[green]0[/green]"
        table.add_row(
            report.name,
            str(report.details.get("n", "-")),
            str(report.instances),
            shown,
            f"{report.elapsed_ms:.0f}",
        )
    console.print(table)

    for report in result.reports:
        for failure in report.failures[:_MAX_FAILURES_SHOWN]:
            console.print(
                f"[red]✗[/red] {report.name} {failure.digest} {failure.detail}: "
                f"{failure.lhs} != {failure.rhs}"
            )
        if len(report.failures) > _MAX_FAILURES_SHOWN:
            hidden = len(report.failures) - _MAX_FAILURES_SHOWN
            console.print(f"[dim]  … {hidden} more failures in {report.name}[/dim]")

    console.print()
    if result.passed:
        console.print(
            f"[bold green]✓ {result.total_instances} comparisons, 0 failures[/bold green]"
        )
    else:
        console.print(
            f"[bold red]✗ {result.total_failures} failures in "
            f"{result.total_instances} comparisons[/bold red]"
        )


def render_alpha(
    comparisons: Iterable[AlphaComparison], *, console: Optional[Console] = None
) -> None:
    console = _console(console)
    for cmp in comparisons:
        table = _table(f"{cmp.name}: n={cmp.n}, degree={cmp.degree}, alpha={cmp.target}")
        table.add_column("alpha", justify="right", style="cyan")
        table.add_column("# random graphs", justify="right")
        for value, count in cmp.buckets():
            table.add_row(str(value), str(count))
        console.print(table)
        if cmp.asymptotic is not None:
            console.print(f"[dim]Asymptotic (2 ln d / d)·n:[/dim] {cmp.asymptotic:.2f}")
        if cmp.timeouts:
            console.print(f"[yellow]{cmp.timeouts} samples hit the MIS budget[/yellow]")


def render_rows(
    title: str,
    header: tuple[str, ...],
    rows: Iterable[tuple],
    *,
    console: Optional[Console] = None,
) -> None:
    console = _console(console)
    table = _table(title)
    for i, name in enumerate(header):
        table.add_column(name, justify="left" if i == 0 else "right")
    for row in rows:
        table.add_row(*(str(v) for v in row))
    console.print(table)
