"""Command module for running the property suites."""

from pathlib import Path
from typing import List, Optional

import typer
from rich.console import Console

from fuzzop_cli.cli_utils import ensure_writable, error_console, open_output, usage_errors
from fuzzop_cli.config import RunConfig, get_default
from fuzzop_cli.errors import DomainError
from fuzzop_cli.verify import REPORT_HEADER, SUITES, SuiteSettings, run_suites

console = Console()


def register(app: typer.Typer) -> None:
    """
    Register the verify command with the Typer app.

    Args:
        app: The Typer app to register the command with.
    """
    app.command()(verify)


def verify(
    ctx: typer.Context,
    suites: Optional[List[str]] = typer.Option(
        None,
        "--suite",
        help=f"Suite to run, repeatable (default: all of {', '.join(SUITES)})",
    ),
    trials: Optional[int] = typer.Option(
        None,
        "--trials",
        "-t",
        help="Trials per randomized suite (default: per-suite setting)",
        min=1,
    ),
    seed: int = typer.Option(get_default("seed"), "--seed", help="Master seed"),
    spacing: float = typer.Option(
        get_default("spacing"),
        "--spacing",
        help="Hausdorff spacing g for the region metrics",
    ),
    output_file: Optional[Path] = typer.Option(
        None,
        "--out",
        "-o",
        help="Write the report here instead of stdout",
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
    Run property suites and print one line per property.

    Lines: id,trials,worst_slack,passed,seed. Exits with 1 if any property
    fails.

    Examples:
        - Everything: fuzzop verify
        - Plane inequalities only: fuzzop verify --suite plane-inequalities --trials 100000
        - Two suites, fixed seed: fuzzop verify --suite axioms --suite ordering --seed 7
    """
    failed = []

    with usage_errors():
        cfg = RunConfig(
            command="verify",
            spacing=spacing,
            seed=seed,
            output=str(output_file) if output_file else None,
        ).validate()
        unknown = [s for s in suites or [] if s not in SUITES]
        if unknown:
            raise DomainError(f"unknown suite(s) {', '.join(unknown)} (choose from {', '.join(SUITES)})")
        ensure_writable(output_file, overwrite)

        settings = SuiteSettings(trials=trials, seed=cfg.seed, spacing=cfg.spacing)
        with open_output(output_file) as stream:
            stream.write(REPORT_HEADER + "\n")
            for report in run_suites(suites or None, settings):
                stream.write(report.line() + "\n")
                stream.flush()
                if not report.passed:
                    failed.append(report)

    if failed:
        for report in failed:
            items = ", ".join(f"{k}={v:.3g}" for k, v in report.items.items() if v > 0)
            error_console.print(
                f"[red]FAIL[/red] {report.property_id} (trial {report.worst_trial}): {items}"
            )
        raise typer.Exit(code=1)

    if output_file is not None:
        console.print(f"[green]✓[/green] Report saved to {output_file}")
