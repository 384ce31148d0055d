"""Hypothesis strategies shared by the invariant tests."""

import numpy as np
from hypothesis import strategies as st

from fuzzop_cli.fuzzy_core import LevelGrid, from_levels

finite = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
coefficients = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
levels = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@st.composite
def sampled_numbers(draw, max_resolution: int = 8):
    """Sampled fuzzy numbers with sorted draws as endpoints."""
    resolution = draw(st.integers(min_value=1, max_value=max_resolution))
    values = sorted(draw(st.lists(finite, min_size=2 * (resolution + 1), max_size=2 * (resolution + 1))))
    lo = np.array(values[: resolution + 1])
    hi = np.array(values[resolution + 1 :][::-1])
    return from_levels(lo, hi, grid=LevelGrid(resolution))


@st.composite
def intervals(draw):
    """(lo, hi) pairs with lo <= hi."""
    a, b = draw(finite), draw(finite)
    return min(a, b), max(a, b)
