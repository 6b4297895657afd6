"""Rich renderings of check results and reports"""

from typing import Iterable

from rich.table import Table
from rich.text import Text

from regulus.models import CheckResult, Report
from regulus.verify import Check


def _status_text(result: CheckResult) -> Text:
    if result.passed:
        return Text("PASS", style="bold green")
    return Text("FAIL", style="bold red")


def _witness(result: CheckResult) -> str:
    mismatch = result.first_mismatch
    if mismatch is None:
        return result.note or "-"
    return f"@{mismatch.exponent}: {mismatch.lhs} != {mismatch.rhs}"


def result_line(result: CheckResult) -> Text:
    """One line for a single check, e.g. ``PASS id-2.1 (verified through 4999, 812 ms)``"""
    line = _status_text(result)
    line.append(f" {result.name}")
    through = result.params.verified_through
    detail = f"{result.elapsed_ms} ms"
    if through is not None:
        label = "n <=" if result.params.n_max is not None else "verified through"
        detail = f"{label} {through}, {detail}"
    if result.first_mismatch is not None or result.note:
        line.append(f" {_witness(result)}", style="yellow")
    line.append(f" ({detail})", style="dim")
    return line


def report_table(report: Report) -> Table:
    """Table with one row per check and a pass/fail caption"""
    failures = len(report.failures())
    caption = (
        f"{len(report.results)} checks, {failures} failed"
        if report.results
        else "no checks matched"
    )
    table = Table(
        title=f"suite {report.suite!r} (order {report.order}, nmax {report.nmax})",
        caption=caption,
        show_header=True,
        header_style="bold magenta",
        border_style="blue",
    )
    table.add_column("Check", style="cyan", no_wrap=True)
    table.add_column("Status", width=6)
    table.add_column("Mod", justify="right", style="dim")
    table.add_column("Through", justify="right")
    table.add_column("Witness", style="yellow")
    table.add_column("ms", justify="right", style="dim")

    for result in report.results:
        params = result.params
        table.add_row(
            result.name,
            _status_text(result),
            "-" if params.modulus is None else str(params.modulus),
            "-" if params.verified_through is None else str(params.verified_through),
            _witness(result),
            str(result.elapsed_ms),
        )
    return table


def checks_table(checks: Iterable[Check]) -> Table:
    """Registered checks with the statement each one restates"""
    table = Table(show_header=True, header_style="bold magenta", border_style="blue")
    table.add_column("Check", style="cyan", no_wrap=True)
    table.add_column("Mod", justify="right", style="dim")
    table.add_column("Statement", style="green")
    for check in checks:
        modulus = check.modulus
        table.add_row(check.name, "-" if modulus is None else str(modulus), check.equation)
    return table
