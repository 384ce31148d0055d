"""Command module for the lower-endpoint error tables."""

import logging
import time
from pathlib import Path
from typing import Optional

import numpy as np
import typer

from fuzzop_cli.cli_utils import ensure_writable, parse_float_list, parse_int_list, usage_errors, write_csv
from fuzzop_cli.config import RunConfig, get_default
from fuzzop_cli.corpus import get_entry
from fuzzop_cli.nn_operator import FuzzyFunction, NodeGrid, apply_levels
from fuzzop_cli.sigmoid import SigmoidalFunction, get_sigmoid

logger = logging.getLogger(__name__)

HEADER = ("sigma", "m", "n", "lambda", "max_error")


def register(app: typer.Typer) -> None:
    """
    Register the table command with the Typer app.

    Args:
        app: The Typer app to register the command with.
    """
    app.command()(table)


def max_lower_error(
    f: FuzzyFunction, sigma: SigmoidalFunction, n: int, lam: float, xs: np.ndarray
) -> float:
    """max over xs of |S_n(f, x)^-(λ) - f(x)^-(λ)|."""
    approx_lo, _ = apply_levels(f, NodeGrid(f.a, f.b, n), sigma, xs, lam)
    exact_lo, _ = f.level_arrays(xs, lam)
    return float(np.max(np.abs(approx_lo - exact_lo)))


def table_rows(cfg: RunConfig) -> list[tuple]:
    """One row per (n, λ), in config order."""
    entry = get_entry(cfg.function)
    sigma = get_sigmoid(cfg.sigma, cfg.m)
    f = entry.function
    xs = np.linspace(f.a, f.b, cfg.x_grid)

    rows = []
    for n in cfg.ns:
        start = time.perf_counter()
        for lam in cfg.lambdas:
            rows.append((sigma.name, float(cfg.m), n, float(lam), max_lower_error(f, sigma, n, lam, xs)))
        logger.debug("n=%d done in %.3fs", n, time.perf_counter() - start)
    return rows


def table(
    ctx: typer.Context,
    function: str = typer.Option(
        get_default("function"),
        "--function",
        "-f",
        help="Corpus function id",
    ),
    sigma: str = typer.Option(
        get_default("sigma"),
        "--sigma",
        "-s",
        help="Sigmoidal function (ramp, heaviside, smooth-ramp, bspline)",
    ),
    m: float = typer.Option(get_default("m"), "--m", help="Class parameter m of A(m)"),
    n: Optional[str] = typer.Option(
        None,
        "--n",
        "-n",
        help="Comma-separated node counts (default: the standard list for the sigma)",
    ),
    lambdas: Optional[str] = typer.Option(
        None,
        "--lambda",
        "-l",
        help="Comma-separated levels (default: 0.50005,0.6,0.8)",
    ),
    grid: int = typer.Option(
        get_default("x_grid"),
        "--grid",
        help="Number of uniform x points, endpoints included",
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
    Tabulate the sup error of the lower endpoint of S_n(f) at fixed levels.

    Rows: sigma,m,n,lambda,max_error.

    Examples:
        - Ramp table: fuzzop table
        - Heaviside table: fuzzop table --sigma heaviside
        - One cell: fuzzop table --n 10 --lambda 0.6 --out table.csv
    """
    ns = parse_int_list(n)
    levels = parse_float_list(lambdas)

    with usage_errors():
        if ns is None:
            ns = get_default("table_ns").get(sigma, get_default("table_ns")["ramp"])
        cfg = RunConfig(
            command="table",
            function=function,
            sigma=sigma,
            m=m,
            ns=tuple(ns),
            lambdas=levels if levels is not None else get_default("table_lambdas"),
            x_grid=grid,
            output=str(output_file) if output_file else None,
        ).validate()
        ensure_writable(output_file, overwrite)
        rows = table_rows(cfg)

    write_csv(output_file, HEADER, rows)
