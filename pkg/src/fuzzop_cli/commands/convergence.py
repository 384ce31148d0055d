"""Command module for error-versus-n convergence curves."""

import logging
import math
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from fuzzop_cli.cli_utils import ensure_writable, parse_int_list, usage_errors, write_csv
from fuzzop_cli.config import RunConfig, get_default
from fuzzop_cli.corpus import get_entry
from fuzzop_cli.sigmoid import get_sigmoid
from fuzzop_cli.verify import THEOREMS, jackson_bound, measure_sup_error

logger = logging.getLogger(__name__)

HEADER = ("n", "sup_error", "bound", "ratio")


def register(app: typer.Typer) -> None:
    """
    Register the convergence command with the Typer app.

    Args:
        app: The Typer app to register the command with.
    """
    app.command()(convergence)


def settle(error: float, bound: float) -> float:
    """`error` with round-off below tolerance·max(1, bound) read as 0."""
    if error <= get_default("tolerance") * max(1.0, bound):
        return 0.0
    return error


def ratio(error: float, bound: float) -> float:
    """error / bound, with 0/0 read as 0 after round-off is settled."""
    error = settle(error, bound)
    if bound == 0.0:
        return 0.0 if error == 0.0 else math.inf
    return error / bound


def convergence_rows(cfg: RunConfig, metric: str, with_bound: bool = True) -> list[tuple]:
    """
    One row per n: the measured sup error and, optionally, the Jackson bound.

    Raises:
        MissingAnalyticModulus: If a bound is requested for an entry without
            a closed-form modulus.
    """
    entry = get_entry(cfg.function)
    sigma = get_sigmoid(cfg.sigma, cfg.m)
    lam = cfg.lambdas[0] if metric == "level" else None
    xs = None
    if metric == "level":
        xs = np.linspace(entry.function.a, entry.function.b, cfg.x_grid)

    rows = []
    for n in cfg.ns:
        measured = measure_sup_error(entry, sigma, n, metric, lam=lam, xs=xs, spacing=cfg.spacing)
        if with_bound:
            bound = jackson_bound(entry, n, metric, lam)
            error = settle(measured.value, bound)
            rows.append((n, error, bound, ratio(error, bound)))
        else:
            rows.append((n, settle(measured.value, 0.0), "", ""))
        logger.debug("n=%d: sup error %.6g", n, measured.value)
    return rows


def convergence(
    ctx: typer.Context,
    function: str = typer.Option(
        get_default("function"),
        "--function",
        "-f",
        help="Corpus function id",
    ),
    sigma: str = typer.Option(get_default("sigma"), "--sigma", "-s", help="Sigmoidal function"),
    m: float = typer.Option(get_default("m"), "--m", help="Class parameter m of A(m)"),
    metric: str = typer.Option(
        "level",
        "--metric",
        help=f"Error measure ({', '.join(THEOREMS)})",
    ),
    lam: float = typer.Option(
        get_default("convergence_lambda"),
        "--lambda",
        "-l",
        help="Level for the level metric",
    ),
    n: Optional[str] = typer.Option(
        None,
        "--n",
        "-n",
        help="Comma-separated node counts (default: 2,4,...,64)",
    ),
    grid: int = typer.Option(
        get_default("x_grid"),
        "--grid",
        help="Number of uniform x points for the level metric",
    ),
    spacing: float = typer.Option(
        get_default("spacing"),
        "--spacing",
        help="Hausdorff spacing g for the region metrics",
    ),
    with_bound: bool = typer.Option(
        True,
        "--bound/--no-bound",
        help="Include the Jackson bound and ratio columns",
    ),
    output_file: Optional[Path] = typer.Option(
        None,
        "--out",
        "-o",
        help="Write CSV here instead of stdout",
        dir_okay=False,
        resolve_path=True,
    ),
    overwrite: bool = typer.Option(
        False,
        "--overwrite",
        help="Overwrite output file if it exists",
    ),
) -> None:
    """
    Measure sup_x d(S_n(f, x), f(x)) against the Jackson bound for each n.

    Rows: n,sup_error,bound,ratio.

    Examples:
        - Level error of the default function: fuzzop convergence
        - Uniform error of a translated triangle: fuzzop convergence -f triangular:0.25 --metric d_inf
        - Endograph error: fuzzop convergence -f end-not-send:0.1 --metric endograph --sigma heaviside
    """
    ns = parse_int_list(n)

    with usage_errors():
        if metric not in THEOREMS:
            raise typer.BadParameter(f"metric must be one of {', '.join(THEOREMS)}, got '{metric}'")
        cfg = RunConfig(
            command="convergence",
            function=function,
            sigma=sigma,
            m=m,
            ns=tuple(ns) if ns is not None else get_default("convergence_ns"),
            lambdas=(lam,),
            x_grid=grid,
            spacing=spacing,
            output=str(output_file) if output_file else None,
        ).validate()
        ensure_writable(output_file, overwrite)
        rows = convergence_rows(cfg, metric, with_bound)

    write_csv(output_file, HEADER, rows)
