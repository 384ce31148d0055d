"""Tests for the convergence command."""

import math

import pytest
from typer.testing import CliRunner

from fuzzop_cli.cli import app
from fuzzop_cli.commands.convergence import HEADER, convergence_rows, ratio, settle
from fuzzop_cli.config import RunConfig

runner = CliRunner()


def test_ratio():
    assert ratio(0.5, 2.0) == 0.25
    assert ratio(0.0, 0.0) == 0.0
    assert ratio(1e-3, 0.0) == math.inf


def test_round_off_is_settled_to_zero():
    assert settle(1.1e-16, 0.0) == 0.0
    assert settle(1e-3, 0.0) == 1e-3
    assert ratio(1.1e-16, 0.0) == 0.0
    assert ratio(2e-12, 4.0) == 0.0


def test_constant_rows_are_exact_zeros():
    cfg = RunConfig(command="convergence", function="constant", ns=(2, 4), lambdas=(0.6,), x_grid=101)
    assert convergence_rows(cfg, "level") == [(2, 0.0, 0.0, 0.0), (4, 0.0, 0.0, 0.0)]


def test_convergence_help():
    result = runner.invoke(app, ["convergence", "--help"])
    assert result.exit_code == 0
    assert "Jackson" in result.stdout


def test_level_error_stays_below_bound(parse_csv):
    result = runner.invoke(app, ["convergence", "--n", "2,8,32", "--grid", "2001"])
    assert result.exit_code == 0
    rows = parse_csv(result.stdout)
    assert tuple(rows[0]) == HEADER
    assert [r["n"] for r in rows] == ["2", "8", "32"]
    for row in rows:
        assert float(row["sup_error"]) <= float(row["bound"])
        assert 0.0 < float(row["ratio"]) <= 1.0


def test_uniform_error_of_translation_halves(parse_csv):
    result = runner.invoke(
        app,
        ["convergence", "-f", "triangular:0.25", "--metric", "d_inf", "-s", "heaviside", "--n", "4,8,16,32"],
    )
    assert result.exit_code == 0
    errors = [float(r["sup_error"]) for r in parse_csv(result.stdout)]
    bounds = [float(r["bound"]) for r in parse_csv(result.stdout)]
    assert bounds == pytest.approx([0.25, 0.125, 0.0625, 0.03125])
    assert all(e <= b for e, b in zip(errors, bounds))
    assert errors == sorted(errors, reverse=True)


def test_endograph_error_within_budget(parse_csv):
    result = runner.invoke(
        app,
        [
            "convergence",
            "-f",
            "end-not-send:0.1",
            "--metric",
            "endograph",
            "-s",
            "heaviside",
            "--n",
            "2,4",
            "--spacing",
            "0.01",
        ],
    )
    assert result.exit_code == 0
    budget = 0.01 * math.sqrt(2.0) / 2.0
    for row in parse_csv(result.stdout):
        assert float(row["sup_error"]) <= float(row["bound"]) + budget


def test_constant_function_has_no_error(parse_csv):
    result = runner.invoke(app, ["convergence", "-f", "constant", "--n", "2,4", "--grid", "101"])
    assert result.exit_code == 0
    for row in parse_csv(result.stdout):
        assert float(row["sup_error"]) == 0.0
        assert float(row["bound"]) == 0.0
        assert float(row["ratio"]) == 0.0


def test_no_bound(parse_csv):
    result = runner.invoke(
        app, ["convergence", "-f", "end-tail", "--metric", "level", "--n", "2", "--grid", "101", "--no-bound"]
    )
    assert result.exit_code == 0
    rows = parse_csv(result.stdout)
    assert rows[0]["bound"] == ""
    assert rows[0]["ratio"] == ""


def test_missing_modulus_is_a_usage_error(clean_output):
    result = runner.invoke(app, ["convergence", "-f", "end-tail", "--n", "2", "--grid", "101"])
    assert result.exit_code == 2
    assert "no analytic" in clean_output(result.stdout)


@pytest.mark.parametrize(
    "args",
    [
        ["--metric", "d_p"],
        ["--lambda", "2"],
        ["--spacing", "0"],
        ["--n", "1,x"],
    ],
)
def test_usage_errors(args):
    result = runner.invoke(app, ["convergence", *args])
    assert result.exit_code == 2
