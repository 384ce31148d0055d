"""Tests for the randomized property suites and the Jackson checks."""

import math
import time

import numpy as np
import pytest

from fuzzop_cli.corpus import get_entry
from fuzzop_cli.errors import DomainError, MissingAnalyticModulus, UnknownMetric
from fuzzop_cli.fuzzy_core import LevelGrid
from fuzzop_cli.sigmoid import get_sigmoid
from fuzzop_cli.verify import (
    REPORT_HEADER,
    SUITES,
    PropertyReport,
    RandomFuzzySpec,
    SuiteSettings,
    gen_fuzzy,
    jackson_bound,
    measure_sup_error,
    run_class_a_suite,
    run_endograph_membership_suite,
    run_interpolation_suite,
    run_jackson_suite,
    run_level_combination_suite,
    run_metric_axioms,
    run_metric_properties,
    run_ordering_suite,
    run_plane_inequality_suite,
    run_suites,
    smallest_n,
    trial_generator,
    trial_generators,
)


def test_gen_fuzzy_is_valid_and_bounded():
    spec = RandomFuzzySpec(levels=8, support=2.0)
    rng = np.random.default_rng(0)
    for _ in range(20):
        u = gen_fuzzy(spec, rng)
        assert u.grid == LevelGrid(8)
        assert np.all(np.diff(u.lo) >= 0.0)
        assert np.all(np.diff(u.hi) <= 0.0)
        assert u.lo[-1] <= u.hi[-1]
        assert -2.0 <= u.lo[0] and u.hi[0] <= 2.0


def test_gen_fuzzy_is_deterministic():
    spec = RandomFuzzySpec(levels=4, seed=9)
    assert np.array_equal(gen_fuzzy(spec).lo, gen_fuzzy(spec).lo)


def test_gen_fuzzy_zero_levels_is_an_interval():
    u = gen_fuzzy(RandomFuzzySpec(levels=0), np.random.default_rng(1))
    assert u.grid == LevelGrid(1)
    assert u.level(0.0) == u.level(1.0)


@pytest.mark.parametrize("levels, support", [(-1, 1.0), (4, 0.0)])
def test_random_spec_validation(levels, support):
    with pytest.raises(DomainError):
        RandomFuzzySpec(levels=levels, support=support)


def test_trial_generator_replays_a_trial():
    draws = [rng.random() for _, rng in trial_generators(42, 5)]
    assert trial_generator(42, 3).random() == draws[3]
    assert len(set(draws)) == 5


def test_property_report():
    report = PropertyReport("demo", trials=3, seed=7)
    assert report.passed
    report.record("a", -0.5, 0)
    report.record("a", -0.75, 1)
    assert report.items == {"a": -0.5}
    assert report.line() == "demo,3,-0.5,true,7"
    report.record("b", 0.25, 2)
    assert not report.passed
    assert report.worst_trial == 2


def test_property_report_treats_nan_as_failure():
    report = PropertyReport("demo", trials=1, seed=0)
    report.record("a", math.nan)
    assert report.worst_slack == math.inf
    assert not report.passed


def test_report_header():
    assert REPORT_HEADER == "id,trials,worst_slack,passed,seed"


def test_class_a_suite(any_sigma):
    report = run_class_a_suite(any_sigma, probes=2001, seed=1)
    assert report.property_id == f"class-a-{any_sigma.name}"
    assert report.passed, report.items


def test_interpolation_suite():
    report = run_interpolation_suite(5, seed=3, levels=4)
    assert set(report.items) == {"interpolation", "partition", "range", "locality", "normalisation"}
    assert report.passed, report.items


@pytest.mark.parametrize(
    "metric, property_id",
    [("sendograph", "sendograph-bounds"), ("endograph", "endograph-bounds")],
)
def test_metric_properties(metric, property_id):
    report = run_metric_properties(metric, 3, spacing=1e-2, seed=5, levels=4)
    assert report.property_id == property_id
    assert report.passed, report.items
    assert ("convex-root" in report.items) == (metric == "endograph")


def test_metric_properties_reject_d_inf():
    with pytest.raises(UnknownMetric):
        run_metric_properties("d_inf", 1)


def test_plane_inequalities():
    report = run_plane_inequality_suite(10000, seed=8)
    assert report.trials == 10000
    assert set(report.items) == {"i", "ii"}
    assert report.passed


def test_level_combination_suite():
    report = run_level_combination_suite(200, seed=2)
    assert report.passed, report.items


def test_endograph_membership_suite():
    report = run_endograph_membership_suite(10, seed=2, levels=4)
    assert report.property_id == "endograph-convexity-membership"
    assert report.passed, report.items


@pytest.mark.parametrize("metric", ["d_inf", "sendograph", "endograph"])
def test_metric_axioms(metric):
    report = run_metric_axioms(metric, 3, spacing=1e-2, seed=4, levels=4)
    assert report.property_id == f"axioms-{metric}"
    assert set(report.items) == {"symmetry", "identity", "separation", "triangle"}
    assert report.passed, report.items


def test_ordering_suite():
    report = run_ordering_suite(5, spacing=1e-2, seed=6, levels=4)
    assert report.passed, report.items


def test_measure_sup_error_of_constant_is_zero():
    constant = get_entry("constant")
    result = measure_sup_error(constant, get_sigmoid("ramp"), 4, "level", lam=0.6)
    assert result.value <= 1e-15


def test_measure_sup_error_checks_arguments(level_example, ramp):
    with pytest.raises(UnknownMetric):
        measure_sup_error(level_example, ramp, 4, "d_p")
    with pytest.raises(DomainError):
        measure_sup_error(level_example, ramp, 4, "level")


def test_measure_sup_error_at_nodes(level_example, any_sigma):
    xs = np.linspace(0.0, 1.0, 5)
    result = measure_sup_error(level_example, any_sigma, 4, "level", lam=0.8, xs=xs)
    assert result.value <= 1e-12


def test_jackson_bound(level_example, triangles):
    assert jackson_bound(level_example, 10, "level", 0.6) == pytest.approx(1.0 - 0.1**0.1)
    assert jackson_bound(triangles, 4, "sendograph") == pytest.approx(math.sqrt(2.0) / 4.0)
    assert jackson_bound(triangles, 4, "d_inf") == pytest.approx(0.25)
    with pytest.raises(MissingAnalyticModulus):
        jackson_bound(get_entry("end-tail"), 4, "endograph")


def test_jackson_suite_level(level_example, ramp):
    report = run_jackson_suite(level_example, ramp, (2, 10, 50), "level", lam=0.6, epsilon=0.01)
    assert report.property_id == "jackson-level-level-example-ramp@0.6"
    assert set(report.items) == {"n=2", "n=10", "n=50", "corollary"}
    assert report.passed, report.items


def test_jackson_suite_d_inf(triangles, heaviside):
    report = run_jackson_suite(triangles, heaviside, (4, 16), "d_inf")
    assert report.property_id == "jackson-d_inf-triangular:0.25-heaviside"
    assert report.passed, report.items


def test_jackson_suite_endograph(heaviside):
    entry = get_entry("end-not-send:0.1")
    report = run_jackson_suite(entry, heaviside, (2, 4), "endograph", spacing=1e-2, resolution=4)
    assert report.passed, report.items


def test_jackson_suite_needs_a_modulus(level_example, ramp):
    with pytest.raises(MissingAnalyticModulus):
        run_jackson_suite(level_example, ramp, (2,), "sendograph")


def test_smallest_n(triangles, heaviside):
    # Nearest-node errors on 51 probes: 0.5, 0.24, 0.12, then 0.06 at n = 8
    assert smallest_n(triangles, heaviside, 0.1, "d_inf") == 8
    assert smallest_n(triangles, heaviside, 1e-6, "d_inf", max_n=2) is None


def test_smallest_n_rejects_non_positive_epsilon(triangles, heaviside):
    with pytest.raises(DomainError):
        smallest_n(triangles, heaviside, 0.0, "d_inf")


def test_suite_settings_trials():
    settings = SuiteSettings()
    assert settings.trials_for("plane-inequalities") == 100000
    assert settings.trials_for("ordering") == 1000
    assert SuiteSettings(trials=7).trials_for("plane-inequalities") == 7


def test_run_suites_rejects_unknown_ids():
    with pytest.raises(DomainError, match="nope"):
        list(run_suites(["plane-inequalities", "nope"]))


def test_run_suites_yields_reports():
    settings = SuiteSettings(trials=20, seed=3)
    reports = list(run_suites(["plane-inequalities", "endograph-convexity"], settings))
    assert [r.property_id for r in reports] == [
        "plane-inequalities",
        "endograph-convexity-levels",
        "endograph-convexity-membership",
    ]
    assert all(r.trials == 20 and r.seed == 3 for r in reports)


def test_suite_registry():
    assert list(SUITES) == [
        "class-a",
        "interpolation",
        "sendograph-bounds",
        "plane-inequalities",
        "endograph-convexity",
        "endograph-bounds",
        "axioms",
        "ordering",
        "jackson",
    ]


@pytest.mark.acceptance
def test_plane_inequalities_full_size():
    assert run_plane_inequality_suite(100000).passed


@pytest.mark.acceptance
def test_metric_suites_full_size():
    start = time.perf_counter()
    reports = list(
        run_suites(["sendograph-bounds", "endograph-bounds", "ordering"], SuiteSettings(trials=1000))
    )
    elapsed = time.perf_counter() - start
    assert all(r.passed for r in reports), [r.line() for r in reports]
    assert elapsed < 120.0


@pytest.mark.acceptance
def test_jackson_registry_passes():
    reports = list(run_suites(["jackson"]))
    assert all(r.passed for r in reports), [r.line() for r in reports if not r.passed]
