"""Tests for fuzzy numbers in level representation."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import coefficients, levels, sampled_numbers

from fuzzop_cli.errors import (
    CrossingViolation,
    DomainError,
    MonotonicityViolation,
    NegativeCoefficient,
)
from fuzzop_cli.fuzzy_core import (
    AnalyticFuzzyNumber,
    LevelGrid,
    SampledFuzzyNumber,
    add,
    as_sampled,
    convex_combine,
    crisp,
    from_endpoint_pair,
    from_levels,
    in_level_neighborhood,
    interval,
    sample,
    scale,
    support_bound,
    trapezoidal,
    triangular,
)


def test_level_grid_levels():
    grid = LevelGrid(4)
    assert grid.levels.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert grid.step == 0.25


def test_level_grid_rejects_zero_resolution():
    with pytest.raises(DomainError):
        LevelGrid(0)


def test_triangular_levels(unit_triangle):
    assert unit_triangle.level(0.0) == (0.0, 2.0)
    assert unit_triangle.level(0.5) == (0.5, 1.5)
    assert unit_triangle.level(1.0) == (1.0, 1.0)


def test_trapezoidal_core():
    u = trapezoidal(0.0, 1.0, 2.0, 4.0)
    assert u.level(1.0) == (1.0, 2.0)
    assert u.level(0.5) == (0.5, 3.0)


def test_triangular_rejects_unordered_points():
    with pytest.raises(DomainError):
        triangular(1.0, 0.0, 2.0)


def test_crisp_is_a_point():
    u = crisp(3.0)
    for lam in (0.0, 0.3, 1.0):
        assert u.level(lam) == (3.0, 3.0)


def test_interval_levels_are_constant(unit_box):
    lo, hi = unit_box.endpoints(np.linspace(0.0, 1.0, 7))
    assert np.all(lo == 0.0)
    assert np.all(hi == 1.0)


def test_level_outside_unit_interval():
    with pytest.raises(DomainError):
        crisp(0.0).level(1.5)


def test_from_levels_rejects_decreasing_lower_endpoint():
    with pytest.raises(MonotonicityViolation):
        from_levels([0.0, -1.0], [2.0, 2.0])


def test_from_levels_rejects_increasing_upper_endpoint():
    with pytest.raises(MonotonicityViolation):
        from_levels(lambda lams: 0.0 * lams, lambda lams: 1.0 + lams)


def test_from_levels_rejects_empty_core():
    with pytest.raises(CrossingViolation):
        from_levels([0.0, 2.0], [3.0, 1.0])


def test_from_levels_rejects_non_finite_values():
    with pytest.raises(DomainError):
        from_levels([0.0, np.nan], [1.0, 1.0])


def test_from_levels_tolerates_round_off():
    u = from_levels([0.0, 1.0, 1.0 - 1e-14], [2.0, 2.0, 2.0])
    assert isinstance(u, SampledFuzzyNumber)


def test_from_levels_infers_grid_from_length():
    u = from_levels([0.0, 0.5, 1.0], [3.0, 2.0, 1.0])
    assert u.grid == LevelGrid(2)
    assert u.level(0.25) == (0.25, 2.5)


def test_from_levels_rejects_wrong_sample_count():
    with pytest.raises(DomainError):
        from_levels([0.0, 0.5, 1.0], [3.0, 1.0], grid=LevelGrid(2))


def test_analytic_keeps_jumps_exact():
    u = from_endpoint_pair(lambda lams: (np.where(lams > 0.5, 1.0, 0.0), np.full(lams.shape, 2.0)))
    assert isinstance(u, AnalyticFuzzyNumber)
    assert u.level(0.5) == (0.0, 2.0)
    assert u.level(0.5000001) == (1.0, 2.0)


def test_sampled_values_are_read_only():
    u = from_levels([0.0, 1.0], [2.0, 1.0])
    with pytest.raises(ValueError):
        u.lo[0] = 5.0


def test_add_is_levelwise(unit_triangle, unit_box):
    w = add(unit_triangle, unit_box)
    assert w.level(0.5) == (0.5, 2.5)
    assert (unit_triangle + unit_box).level(0.0) == (0.0, 3.0)


def test_scale_negative_swaps_endpoints(unit_triangle):
    w = scale(-2.0, unit_triangle)
    assert w.level(0.0) == (-4.0, 0.0)
    assert (unit_triangle * -2.0).level(1.0) == (-2.0, -2.0)


def test_scale_rejects_non_finite(unit_triangle):
    with pytest.raises(DomainError):
        scale(float("inf"), unit_triangle)


def test_convex_combine_rejects_negative_coefficient(unit_triangle, unit_box):
    with pytest.raises(NegativeCoefficient):
        convex_combine([1.5, -0.5], [unit_triangle, unit_box])


def test_convex_combine_of_sampled_uses_common_grid():
    u = from_levels([0.0, 1.0], [3.0, 2.0])
    v = from_levels([0.0, 0.5, 1.0], [2.0, 2.0, 2.0])
    w = convex_combine([0.5, 0.5], [u, v])
    assert isinstance(w, SampledFuzzyNumber)
    assert w.grid == LevelGrid(2)
    assert w.level(0.5) == pytest.approx((0.5, 2.25))


def test_sample_and_as_sampled(unit_triangle):
    u = sample(unit_triangle, 4)
    assert u.lo.tolist() == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert as_sampled(u) is u


def test_sample_default_resolution(unit_triangle):
    assert sample(unit_triangle).grid == LevelGrid(256)


def test_support_bound():
    assert support_bound(triangular(-3.0, 0.0, 1.0)) == 3.0


def test_level_neighborhood(unit_triangle):
    shifted = from_levels(lambda lams: 0.05 + lams, lambda lams: 2.05 - lams)
    assert in_level_neighborhood(unit_triangle, shifted, [0.2, 0.9], 0.1)
    assert not in_level_neighborhood(unit_triangle, shifted, [0.2, 0.9], 0.04)


def test_level_neighborhood_rejects_bad_epsilon(unit_triangle):
    with pytest.raises(DomainError):
        in_level_neighborhood(unit_triangle, unit_triangle, [0.5], 0.0)


@given(sampled_numbers(), sampled_numbers(), coefficients, levels)
def test_convex_combination_is_levelwise(u, v, alpha, lam):
    w = convex_combine([alpha, 1.0 - alpha], [u, v])
    (u_lo, u_hi), (v_lo, v_hi), (w_lo, w_hi) = u.level(lam), v.level(lam), w.level(lam)
    assert w_lo == pytest.approx(alpha * u_lo + (1.0 - alpha) * v_lo, abs=1e-12)
    assert w_hi == pytest.approx(alpha * u_hi + (1.0 - alpha) * v_hi, abs=1e-12)


@given(sampled_numbers(), levels)
def test_levels_are_nested(u, lam):
    lo, hi = u.level(lam)
    lo0, hi0 = u.level(0.0)
    # np.interp may round one ulp past a sample
    assert lo0 - 1e-12 <= lo <= hi + 1e-12
    assert hi <= hi0 + 1e-12


@pytest.mark.parametrize("alpha_sign, beta_sign", [(1, 1), (1, -1), (-1, 1), (-1, -1)])
@given(u=sampled_numbers(), alpha=coefficients, beta=coefficients)
def test_scale_composes(alpha_sign, beta_sign, u, alpha, beta):
    alpha, beta = alpha_sign * 2.0 * alpha, beta_sign * 2.0 * beta
    nested = scale(alpha, scale(beta, u))
    direct = scale(alpha * beta, u)
    assert nested.grid == direct.grid
    assert np.allclose(nested.lo, direct.lo, rtol=0.0, atol=1e-12)
    assert np.allclose(nested.hi, direct.hi, rtol=0.0, atol=1e-12)


@given(sampled_numbers(), sampled_numbers(), levels)
def test_add_is_levelwise_on_any_grids(u, v, lam):
    (u_lo, u_hi), (v_lo, v_hi) = u.level(lam), v.level(lam)
    lo, hi = add(u, v).level(lam)
    assert lo == pytest.approx(u_lo + v_lo, abs=1e-12)
    assert hi == pytest.approx(u_hi + v_hi, abs=1e-12)


@given(u=sampled_numbers(), weights=st.lists(st.floats(min_value=0.01, max_value=1.0), min_size=1, max_size=6))
def test_convex_combination_of_copies_is_identity(u, weights):
    coeffs = np.array(weights) / sum(weights)
    w = convex_combine(coeffs, [u] * len(coeffs))
    assert w.grid == u.grid
    assert np.allclose(w.lo, u.lo, rtol=0.0, atol=1e-12)
    assert np.allclose(w.hi, u.hi, rtol=0.0, atol=1e-12)
