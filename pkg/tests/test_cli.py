"""CLI smoke tests."""
from typer.testing import CliRunner

from fuzzop_cli import __version__
from fuzzop_cli.cli import app
from fuzzop_cli.commands import get_commands

runner = CliRunner()


def test_dynamic_command_registration():
    """Ensure expected commands are discovered dynamically."""
    commands = get_commands()
    assert set(commands) == {"convergence", "metric", "table", "verify"}


def test_version_flag():
    """Ensure top-level version output works."""
    result = runner.invoke(app, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.stdout


def test_verbose_flag_is_accepted():
    result = runner.invoke(app, ["--verbose", "table", "--n", "2", "--grid", "11"])
    assert result.exit_code == 0
