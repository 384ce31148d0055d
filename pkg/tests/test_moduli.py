"""Tests for fuzzy moduli of continuity."""

import numpy as np
import pytest

from fuzzop_cli.errors import DomainError, MissingAnalyticModulus, UnknownMetric
from fuzzop_cli.moduli import (
    ANALYTIC,
    EMPIRICAL,
    analytic_modulus,
    empirical_modulus,
    level_example_modulus,
    level_modulus,
    modulus_curve,
)


@pytest.mark.parametrize("lam", [0.50005, 0.6, 0.8])
def test_level_example_modulus_closed_form(lam):
    epsilon = lam - 0.5
    for n in (2, 10, 1000):
        assert level_example_modulus(1.0 / n, lam) == pytest.approx(1.0 - epsilon ** (1.0 / n))


def test_level_example_modulus_vanishes_below_one_half():
    assert level_example_modulus(0.3, 0.5) == 0.0
    assert level_example_modulus(0.3, 0.1) == 0.0


def test_level_example_modulus_saturates():
    assert level_example_modulus(5.0, 0.6) == level_example_modulus(1.0, 0.6)


def test_non_positive_delta():
    with pytest.raises(DomainError):
        level_example_modulus(0.0, 0.6)


def test_analytic_modulus_lookup(level_example, triangles):
    f = level_example.function
    assert analytic_modulus(f, "level", 0.1, 0.6) == pytest.approx(1.0 - 0.1**0.1)
    assert analytic_modulus(f, "d_inf", 0.1) == 1.0
    assert analytic_modulus(triangles.function, "sendograph", 0.2) == 0.2


def test_analytic_modulus_missing(level_example):
    with pytest.raises(MissingAnalyticModulus):
        analytic_modulus(level_example.function, "endograph", 0.1)


def test_level_modulus_prefers_closed_form(level_example):
    estimate = level_modulus(level_example.function, 0.1, 0.8)
    assert estimate.kind == ANALYTIC
    assert estimate.is_analytic


def test_level_modulus_empirical_is_a_lower_bound(level_example):
    f = level_example.function
    for delta in (0.05, 0.1, 0.5):
        for lam in (0.50005, 0.6, 0.8):
            empirical = level_modulus(f, delta, lam, analytic=False)
            assert empirical.kind == EMPIRICAL
            assert empirical.value <= level_example_modulus(delta, lam) + 1e-12
            # The probe step is 1/2000, so the sup is nearly attained
            assert empirical.value >= level_example_modulus(delta - 1e-3, lam) - 1e-12


def test_level_modulus_rejects_bad_level(level_example):
    with pytest.raises(DomainError):
        level_modulus(level_example.function, 0.1, 1.2)


def test_empirical_d_inf_of_translation(triangles):
    estimate = empirical_modulus(triangles.function, 0.1)
    assert estimate.value <= 0.1 + 1e-12
    assert estimate.value == pytest.approx(0.1, abs=1e-3)
    assert "2001 uniform probes" in estimate.sampling


def test_empirical_d_inf_understates_a_jump(level_example):
    # The probe levels never reach λ = 1/2 from above, where the jump lives
    estimate = empirical_modulus(level_example.function, 0.01)
    assert 0.0 < estimate.value < analytic_modulus(level_example.function, "d_inf", 0.01)


def test_empirical_sendograph_of_translation(triangles):
    estimate = empirical_modulus(triangles.function, 0.25, metric="sendograph", probes=9, spacing=1e-2)
    assert estimate.value <= 0.25 + 1e-9
    assert estimate.value >= 0.125 - 1e-2


def test_empirical_unknown_metric(triangles):
    with pytest.raises(UnknownMetric):
        empirical_modulus(triangles.function, 0.1, metric="d_p")


def test_probe_count_must_allow_pairs(triangles):
    with pytest.raises(DomainError):
        empirical_modulus(triangles.function, 0.1, probes=1)


def test_modulus_curve_vanishes(triangles):
    deltas = [0.4, 0.2, 0.1, 0.05]
    curve = modulus_curve(triangles.function, deltas, metric="d_inf", probes=401)
    values = [estimate.value for estimate in curve]
    assert values == sorted(values, reverse=True)
    assert values[-1] < 0.06


def test_modulus_curve_level_needs_lambda(level_example):
    with pytest.raises(DomainError):
        modulus_curve(level_example.function, [0.1], metric="level")


def test_modulus_curve_level_matches_closed_form(level_example):
    deltas = np.array([0.5, 0.1, 0.01])
    curve = modulus_curve(level_example.function, deltas, lam=0.6, analytic=True)
    assert [c.value for c in curve] == pytest.approx([level_example_modulus(d, 0.6) for d in deltas])
