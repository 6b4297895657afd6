"""CLI entry point for regulus"""

from pathlib import Path
from typing import Optional

import click
from rich.console import Console

from regulus import __version__
from regulus.config import get_settings
from regulus.display import checks_table, report_table, result_line
from regulus.exceptions import RegulusError
from regulus.log import configure_logging
from regulus.partitions import b_value
from regulus.sequences import MODULUS, closed_form
from regulus.verify import list_checks, run_check, run_suite

console = Console()


class RegulusUsageError(click.ClickException):
    """Library errors surfaced as usage errors (exit code 2)"""

    exit_code = 2


def _guarded(call, *args, **kwargs):
    try:
        return call(*args, **kwargs)
    except RegulusError as e:
        raise RegulusUsageError(str(e)) from e


@click.group()
@click.version_option(version=__version__)
@click.option("--verbose", "-v", is_flag=True, help="Log per-check progress to stderr")
def main(verbose: bool = False) -> None:
    """
    regulus - check l-regular partition congruences

    Computes b_l(n), the number of partitions of n with no part divisible by
    l, and mechanically verifies the series identities and congruence
    families behind the mod 13, 17 and 23 results.
    """
    settings = get_settings()
    configure_logging("DEBUG" if verbose else settings.log_level)


@main.command()
@click.argument("l", type=click.IntRange(min=2))
@click.argument("n", type=click.IntRange(min=0))
@click.option("--mod", "modular", is_flag=True, help="Reduce modulo l (l must be prime)")
def bl(l: int, n: int, modular: bool = False) -> None:
    """Print b_L(N), or b_L(N) mod L with --mod"""
    click.echo(_guarded(b_value, l, n, modular=modular))


@main.command()
@click.argument("name")
@click.option("--order", "-N", type=click.IntRange(min=1), help="Truncation order")
@click.option("--nmax", type=click.IntRange(min=0), help="Largest n for family checks")
@click.pass_context
def check(ctx: click.Context, name: str, order: Optional[int], nmax: Optional[int]) -> None:
    """Run one registered check"""
    result = _guarded(run_check, name, order=order, n_max=nmax)
    console.print(result_line(result))
    ctx.exit(0 if result.passed else 1)


@main.command()
@click.option("--filter", "pattern", default="*", show_default=True, help="Check name pattern")
@click.option("--order", "-N", type=click.IntRange(min=1), help="Truncation order")
@click.option("--nmax", type=click.IntRange(min=0), help="Largest n for family checks")
@click.option(
    "--json",
    "json_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the report as JSON",
)
@click.option("--threads", "-t", type=click.IntRange(min=1), help="Worker threads")
@click.option("--stretch", is_flag=True, help="Include checks that need a raised order cap")
@click.pass_context
def suite(
    ctx: click.Context,
    pattern: str,
    order: Optional[int],
    nmax: Optional[int],
    json_path: Optional[Path],
    threads: Optional[int],
    stretch: bool,
) -> None:
    """Run every check whose name matches --filter"""
    report = _guarded(
        run_suite,
        pattern,
        order=order,
        n_max=nmax,
        threads=threads,
        include_stretch=stretch,
    )
    console.print(report_table(report))

    if json_path is not None:
        try:
            json_path.write_text(report.model_dump_json(indent=2), encoding="utf-8")
        except OSError as e:
            raise RegulusUsageError(f"cannot write {json_path}: {e}") from e

    ctx.exit(0 if report.passed else 1)


@main.command(name="list")
@click.option("--stretch", is_flag=True, help="Include checks that need a raised order cap")
def list_command(stretch: bool = False) -> None:
    """List registered checks"""
    console.print(checks_table(list_checks(include_stretch=stretch)))


@main.command()
@click.argument("k", type=click.IntRange(min=0))
def sequence(k: int) -> None:
    """Print a(K) and a'(K), exactly and mod 23"""
    pair = _guarded(closed_form, k)
    reduced = pair.reduced(MODULUS)
    click.echo(f"a({k}) = {pair.a}  ({reduced.a} mod {MODULUS})")
    click.echo(f"a'({k}) = {pair.a_prime}  ({reduced.a_prime} mod {MODULUS})")


if __name__ == "__main__":
    main()
