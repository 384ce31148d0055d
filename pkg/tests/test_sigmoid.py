"""Tests for sigmoidal functions of class A(m)."""

import numpy as np
import pytest

from fuzzop_cli.errors import NonPositiveM, UnknownSigma
from fuzzop_cli.sigmoid import (
    SIGMOIDS,
    check_class_A,
    get_sigmoid,
    heaviside,
    phi,
    ramp,
    sigmoidal,
)


def test_registry_names():
    assert set(SIGMOIDS) == {"ramp", "heaviside", "smooth-ramp", "bspline"}


def test_unknown_sigma():
    with pytest.raises(UnknownSigma):
        get_sigmoid("logistic")


@pytest.mark.parametrize("m", [0.0, -1.0])
def test_non_positive_m(m):
    with pytest.raises(NonPositiveM):
        ramp(m)


def test_ramp_values():
    sigma = ramp(1.0)
    assert sigma(-1.0) == 0.0
    assert sigma(0.0) == 0.5
    assert sigma(0.5) == 0.75
    assert sigma(2.0) == 1.0


def test_heaviside_is_zero_at_origin():
    sigma = heaviside()
    assert sigma(0.0) == 0.0
    assert sigma(1e-300) == 1.0
    assert sigma(-3.0) == 0.0


def test_heaviside_bump_is_half_open_box():
    sigma = heaviside(1.0)
    assert phi(sigma, -1.0) == 0.0
    assert phi(sigma, -0.999) == 1.0
    assert phi(sigma, 1.0) == 1.0
    assert phi(sigma, 1.001) == 0.0


def test_sigmoids_are_vectorized(any_sigma):
    x = np.linspace(-2.0, 2.0, 9)
    values = any_sigma(x)
    assert values.shape == x.shape
    assert isinstance(any_sigma(0.3), float)


@pytest.mark.parametrize("m", [0.5, 1.0, 2.0])
def test_registered_sigmoids_belong_to_class(m):
    for name in SIGMOIDS:
        report = check_class_A(get_sigmoid(name, m))
        assert report.passed, (name, report.items)
        assert set(report.items) == {
            "monotone",
            "boundary",
            "nonnegative",
            "unimodal",
            "support",
            "partition",
        }


def test_ramp_bump_is_a_hat():
    sigma = ramp(1.0)
    x = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
    assert sigma.bump(x).tolist() == [0.0, 0.5, 1.0, 0.5, 0.0]


@pytest.mark.parametrize("name", ["ramp", "smooth-ramp", "bspline"])
def test_continuous_sigmoids_are_odd_around_one_half(name):
    sigma = get_sigmoid(name)
    x = np.linspace(-1.5, 1.5, 31)
    assert np.allclose(sigma(x) + sigma(-x), 1.0)


def test_bspline_matches_quadratic_spline_at_knots():
    sigma = get_sigmoid("bspline", 3.0)
    assert sigma(-1.0) == pytest.approx(1.0 / 6.0)
    assert sigma(0.0) == pytest.approx(0.5)
    assert sigma(1.0) == pytest.approx(5.0 / 6.0)


def test_check_class_a_flags_a_decreasing_function():
    bad = sigmoidal("bad", 1.0, lambda x: np.clip(-x, 0.0, 1.0))
    report = check_class_A(bad)
    assert not report.passed
    ok, violation = report.items["monotone"]
    assert not ok
    assert violation > 0


def test_check_class_a_flags_wrong_support():
    wide = sigmoidal("wide", 1.0, lambda x: np.clip((x + 2.0) / 4.0, 0.0, 1.0))
    report = check_class_A(wide)
    assert not report.items["boundary"][0]


def test_check_class_a_needs_three_probes():
    with pytest.raises(ValueError):
        check_class_A(ramp(), probe_points=2)
