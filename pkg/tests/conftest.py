"""Shared pytest helpers."""

import csv
import io
import re

import pytest

from fuzzop_cli.corpus import get_entry
from fuzzop_cli.fuzzy_core import interval, triangular
from fuzzop_cli.sigmoid import get_sigmoid


ANSI_ESCAPE_RE = re.compile(r"\x1b\[[0-9;]*m")


@pytest.fixture
def clean_output():
    """Return a helper that strips ANSI color/style escape codes."""

    def _clean_output(text: str) -> str:
        return ANSI_ESCAPE_RE.sub("", text)

    return _clean_output


@pytest.fixture
def parse_csv():
    """Return a helper that turns CSV text into a list of row dicts."""

    def _parse_csv(text: str) -> list[dict[str, str]]:
        return list(csv.DictReader(io.StringIO(text)))

    return _parse_csv


@pytest.fixture
def ramp():
    return get_sigmoid("ramp")


@pytest.fixture
def heaviside():
    return get_sigmoid("heaviside")


@pytest.fixture(params=["ramp", "heaviside", "smooth-ramp", "bspline"])
def any_sigma(request):
    """Every registered sigmoid at m = 1."""
    return get_sigmoid(request.param)


@pytest.fixture
def level_example():
    return get_entry("level-example")


@pytest.fixture
def end_not_send():
    return get_entry("end-not-send")


@pytest.fixture
def triangles():
    return get_entry("triangular:0.25")


@pytest.fixture
def unit_triangle():
    return triangular(0.0, 1.0, 2.0)


@pytest.fixture
def unit_box():
    return interval(0.0, 1.0)
