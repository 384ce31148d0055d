"""Helpers shared by the command modules: option parsing, CSV output, errors."""

import csv
import sys
from collections.abc import Iterable, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, TextIO

import typer
from rich.console import Console
from rich.markup import escape

from fuzzop_cli.errors import FuzzopError

console = Console()
error_console = Console(stderr=True)

# Usage and domain errors; property failures use 1
USAGE_ERROR = 2


def format_float(value: float) -> str:
    """Full double precision, `.` as decimal separator."""
    return f"{float(value):.17g}"


def parse_int_list(value: str | None) -> tuple[int, ...] | None:
    """
    Parse a comma-separated list of integers such as "2,6,10".

    Returns:
        tuple[int, ...] | None: The values, or None when the option is unset.

    Raises:
        typer.BadParameter: If an item is not an integer.
    """
    if value is None:
        return None
    try:
        return tuple(int(item) for item in value.split(",") if item.strip())
    except ValueError:
        raise typer.BadParameter(f"expected a comma-separated list of integers, got '{value}'")


def parse_float_list(value: str | None) -> tuple[float, ...] | None:
    """Parse a comma-separated list of reals such as "0.50005,0.6,0.8"."""
    if value is None:
        return None
    try:
        return tuple(float(item) for item in value.split(",") if item.strip())
    except ValueError:
        raise typer.BadParameter(f"expected a comma-separated list of numbers, got '{value}'")


def check_output_file(output_file: Path | None, force_overwrite: bool = False) -> bool:
    """
    Check if an output file exists and prompt for overwrite if needed.

    Args:
        output_file: Path to the output file (None means stdout).
        force_overwrite: If True, overwrite without prompting.

    Returns:
        bool: True if it's safe to write to the file, False otherwise.
    """
    if output_file is None or not output_file.exists():
        return True

    if force_overwrite:
        return True

    return typer.confirm(
        f"Output file {output_file} already exists. Overwrite?", default=False
    )


def ensure_writable(output_file: Path | None, overwrite: bool) -> None:
    """Abort with exit code 0 when the user declines to overwrite `output_file`."""
    if not check_output_file(output_file, overwrite):
        console.print("[yellow]Aborted.[/yellow]")
        raise typer.Exit(0)


@contextmanager
def open_output(output_file: Path | None) -> Iterator[TextIO]:
    """Yield a text stream for `output_file`, or stdout when it is None."""
    if output_file is None:
        yield sys.stdout
        return
    with output_file.open("w", newline="") as stream:
        yield stream


def write_csv(
    output_file: Path | None,
    header: Sequence[str],
    rows: Iterable[Sequence[object]],
) -> int:
    """
    Write a header and rows as CSV; floats get 17 significant digits.

    Returns:
        int: The number of data rows written.
    """
    count = 0
    with open_output(output_file) as stream:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow(
                [format_float(cell) if isinstance(cell, float) else cell for cell in row]
            )
            count += 1
    return count


def fail(error: FuzzopError | str, code: int = USAGE_ERROR) -> None:
    """Print an error in the house style and exit."""
    console.print(f"[red]Error:[/red] {escape(str(error))}")
    raise typer.Exit(code=code)


@contextmanager
def usage_errors() -> Iterator[None]:
    """Turn library errors raised inside the block into exit code 2."""
    try:
        yield
    except FuzzopError as error:
        fail(error)
