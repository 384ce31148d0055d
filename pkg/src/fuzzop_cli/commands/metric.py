"""Command module for distance queries between two values of a corpus function."""

from typing import Optional

import typer
from rich.console import Console
from rich.table import Table

from fuzzop_cli.cli_utils import format_float, usage_errors
from fuzzop_cli.config import RunConfig, get_default
from fuzzop_cli.corpus import get_entry
from fuzzop_cli.metrics import D_E, D_S, HausdorffResult, d_inf

console = Console()


def register(app: typer.Typer) -> None:
    """
    Register the metric command with the Typer app.

    Args:
        app: The Typer app to register the command with.
    """
    app.command(no_args_is_help=True)(metric)


def distances(
    cfg: RunConfig, t1: float, t2: float, resolution: Optional[int] = None
) -> tuple[float, HausdorffResult, HausdorffResult]:
    """
    d_inf, D_S and D_E between f(t1) and f(t2).

    Raises:
        DomainError: If t1 or t2 is outside the domain of the function.
    """
    f = get_entry(cfg.function).function
    u, v = f.eval(t1), f.eval(t2)
    return (
        d_inf(u, v),
        D_S(u, v, spacing=cfg.spacing, resolution=resolution),
        D_E(u, v, spacing=cfg.spacing, resolution=resolution),
    )


def metric(
    ctx: typer.Context,
    t1: float = typer.Option(..., "--t1", help="First point of the domain"),
    t2: float = typer.Option(..., "--t2", help="Second point of the domain"),
    function: str = typer.Option(
        get_default("function"),
        "--function",
        "-f",
        help="Corpus function id",
    ),
    spacing: float = typer.Option(
        get_default("spacing"),
        "--spacing",
        help="Hausdorff spacing g; the error bound is g·√2/2",
    ),
    levels: int = typer.Option(
        get_default("levels"),
        "--levels",
        help="Level resolution used to build the plane regions",
        min=1,
    ),
    plain: bool = typer.Option(
        False,
        "--plain",
        help="Print one CSV line: t1,t2,d_inf,D_S,D_S_bound,D_E,D_E_bound",
    ),
) -> None:
    """
    Compare f(t1) and f(t2) under d_inf, the sendograph and the endograph metric.

    Examples:
        - fuzzop metric -f end-not-send --t1 0.2 --t2 0.7
        - fuzzop metric -f end-tail --t1 0.5 --t2 0 --plain
    """
    with usage_errors():
        cfg = RunConfig(command="metric", function=function, spacing=spacing).validate()
        sup, send, end = distances(cfg, t1, t2, resolution=levels)

    if plain:
        values = (t1, t2, sup, send.value, send.error_bound, end.value, end.error_bound)
        console.print(",".join(format_float(v) for v in values), highlight=False, soft_wrap=True)
        return

    table = Table(title=f"{cfg.function}: f({t1:g}) vs f({t2:g})")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", justify="right")
    table.add_column("Error bound", justify="right")
    table.add_row("d_inf", format_float(sup), "0")
    table.add_row("D_S", format_float(send.value), format_float(send.error_bound))
    table.add_row("D_E", format_float(end.value), format_float(end.error_bound))
    console.print(table)
