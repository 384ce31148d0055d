"""Tests for the verify command."""

import tempfile
from pathlib import Path

import pytest
from typer.testing import CliRunner

from fuzzop_cli.cli import app
from fuzzop_cli.verify import REPORT_HEADER

runner = CliRunner()


@pytest.fixture
def temp_output_dir():
    """Create a temporary directory for test outputs."""
    with tempfile.TemporaryDirectory() as tmpdirname:
        yield Path(tmpdirname)


def test_single_suite(parse_csv):
    result = runner.invoke(app, ["verify", "--suite", "plane-inequalities", "--trials", "1000", "--seed", "7"])
    assert result.exit_code == 0
    assert result.stdout.startswith(REPORT_HEADER)
    rows = parse_csv(result.stdout)
    assert len(rows) == 1
    assert rows[0]["id"] == "plane-inequalities"
    assert rows[0]["trials"] == "1000"
    assert rows[0]["passed"] == "true"
    assert rows[0]["seed"] == "7"
    assert float(rows[0]["worst_slack"]) <= 0.0


def test_repeated_suites_keep_order(parse_csv):
    result = runner.invoke(
        app, ["verify", "--suite", "class-a", "--suite", "endograph-convexity", "-t", "5", "--spacing", "0.01"]
    )
    assert result.exit_code == 0
    ids = [row["id"] for row in parse_csv(result.stdout)]
    assert ids == [
        "class-a-ramp",
        "class-a-heaviside",
        "class-a-smooth-ramp",
        "class-a-bspline",
        "endograph-convexity-levels",
        "endograph-convexity-membership",
    ]


def test_same_seed_same_report():
    args = ["verify", "--suite", "endograph-convexity", "-t", "5", "--seed", "11"]
    assert runner.invoke(app, args).stdout == runner.invoke(app, args).stdout


def test_report_to_file(temp_output_dir, parse_csv):
    output_file = temp_output_dir / "report.csv"
    result = runner.invoke(
        app, ["verify", "--suite", "plane-inequalities", "-t", "100", "--out", str(output_file)]
    )
    assert result.exit_code == 0
    assert "Report saved" in result.stdout
    assert parse_csv(output_file.read_text())[0]["id"] == "plane-inequalities"


@pytest.mark.parametrize(
    "args",
    [
        ["--suite", "no-such-suite"],
        ["--spacing", "0"],
        ["--seed", "-1"],
        ["--trials", "0"],
    ],
)
def test_usage_errors(args):
    result = runner.invoke(app, ["verify", *args])
    assert result.exit_code == 2


@pytest.mark.parametrize(
    "args, message",
    [
        (["--spacing", "-1"], "spacing must be positive"),
        (["--seed", str(2**64)], "64-bit unsigned"),
    ],
)
def test_options_share_the_run_config_checks(args, message, clean_output):
    result = runner.invoke(app, ["verify", "--suite", "plane-inequalities", *args])
    assert result.exit_code == 2
    assert message in clean_output(result.stdout)
