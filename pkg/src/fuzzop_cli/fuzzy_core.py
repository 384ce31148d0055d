"""Fuzzy numbers in level (alpha-cut) representation.

A fuzzy number is stored through its endpoint functions lo(λ) and hi(λ),
λ in [0, 1], with [u]^λ = [lo(λ), hi(λ)]. Two representations exist:

- `AnalyticFuzzyNumber` keeps numpy-aware closures, so jumps in λ stay exact.
- `SampledFuzzyNumber` keeps endpoint values on a uniform `LevelGrid` and
  interpolates linearly between grid levels; region geometry needs it.

All values are immutable; every operation returns a new number.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from fuzzop_cli.config import get_default
from fuzzop_cli.errors import (
    CrossingViolation,
    DomainError,
    FuzzopError,
    MonotonicityViolation,
    NegativeCoefficient,
)

__all__ = [
    "AnalyticFuzzyNumber",
    "FuzzyNumber",
    "LevelGrid",
    "SampledFuzzyNumber",
    "add",
    "as_sampled",
    "convex_combine",
    "crisp",
    "from_endpoint_pair",
    "from_levels",
    "in_level_neighborhood",
    "interval",
    "sample",
    "scale",
    "support_bound",
    "trapezoidal",
    "triangular",
]

EndpointFn = Callable[[np.ndarray], "np.ndarray | float"]
EndpointPair = Callable[[np.ndarray], "tuple[np.ndarray, np.ndarray]"]


@dataclass(frozen=True)
class LevelGrid:
    """Uniform level grid λ_i = i/L, i = 0..L."""

    resolution: int

    def __post_init__(self) -> None:
        if self.resolution < 1:
            raise DomainError(f"level resolution must be >= 1, got {self.resolution}")

    @property
    def levels(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.resolution + 1)

    @property
    def step(self) -> float:
        return 1.0 / self.resolution


def _check_level(lam: float) -> float:
    lam = float(lam)
    if not (0.0 <= lam <= 1.0):
        raise DomainError(f"level {lam} is outside [0, 1]")
    return lam


class FuzzyNumber:
    """Common interface of both representations."""

    def endpoints(self, lams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """
        Evaluate both endpoint functions on an array of levels.

        Args:
            lams: Levels in [0, 1] (not checked, for speed).

        Returns:
            tuple[np.ndarray, np.ndarray]: (lo, hi) with the shape of `lams`.
        """
        raise NotImplementedError

    def level(self, lam: float) -> tuple[float, float]:
        """
        Return the λ-level [u]^λ as a (lo, hi) pair.

        Raises:
            DomainError: If λ is outside [0, 1].
        """
        lam = _check_level(lam)
        lo, hi = self.endpoints(np.array([lam]))
        return float(lo[0]), float(hi[0])

    def __add__(self, other: "FuzzyNumber") -> "FuzzyNumber":
        if not isinstance(other, FuzzyNumber):
            return NotImplemented
        return add(self, other)

    def __mul__(self, alpha: float) -> "FuzzyNumber":
        return scale(alpha, self)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class AnalyticFuzzyNumber(FuzzyNumber):
    """Fuzzy number given by a closure λ -> (lo(λ), hi(λ))."""

    pair: EndpointPair

    def endpoints(self, lams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lams = np.asarray(lams, dtype=float)
        lo, hi = self.pair(lams)
        lo = np.broadcast_to(np.asarray(lo, dtype=float), lams.shape)
        hi = np.broadcast_to(np.asarray(hi, dtype=float), lams.shape)
        return lo, hi


@dataclass(frozen=True, eq=False)
class SampledFuzzyNumber(FuzzyNumber):
    """Fuzzy number sampled on a uniform level grid, linear in between."""

    grid: LevelGrid
    lo: np.ndarray
    hi: np.ndarray

    def endpoints(self, lams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lams = np.asarray(lams, dtype=float)
        levels = self.grid.levels
        return np.interp(lams, levels, self.lo), np.interp(lams, levels, self.hi)

    def on_grid(self, grid: LevelGrid) -> "SampledFuzzyNumber":
        """Resample on another grid (exact when it refines this one)."""
        if grid == self.grid:
            return self
        lo, hi = self.endpoints(grid.levels)
        return _sampled(grid, lo, hi)


def _frozen(values: np.ndarray) -> np.ndarray:
    values = np.array(values, dtype=float)
    values.setflags(write=False)
    return values


def _sampled(grid: LevelGrid, lo: np.ndarray, hi: np.ndarray) -> SampledFuzzyNumber:
    return SampledFuzzyNumber(grid=grid, lo=_frozen(lo), hi=_frozen(hi))


def _validate(
    lams: np.ndarray, lo: np.ndarray, hi: np.ndarray, tolerance: float
) -> None:
    if not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi))):
        raise DomainError("endpoint values must be finite reals")

    # Round-off grows with magnitude, so the tolerance is relative above 1
    tol = tolerance * max(1.0, float(np.max(np.abs(lo))), float(np.max(np.abs(hi))))

    lo_steps = np.diff(lo)
    if lo_steps.size and lo_steps.min() < -tol:
        i = int(np.argmin(lo_steps))
        raise MonotonicityViolation(
            f"lower endpoint decreases by {-lo_steps[i]:.3g} "
            f"between λ={lams[i]:.6g} and λ={lams[i + 1]:.6g}"
        )
    hi_steps = np.diff(hi)
    if hi_steps.size and hi_steps.max() > tol:
        i = int(np.argmax(hi_steps))
        raise MonotonicityViolation(
            f"upper endpoint increases by {hi_steps[i]:.3g} "
            f"between λ={lams[i]:.6g} and λ={lams[i + 1]:.6g}"
        )
    if lo[-1] - hi[-1] > tol:
        raise CrossingViolation(f"lo(1)={lo[-1]:.17g} exceeds hi(1)={hi[-1]:.17g}")


def _analytic(pair: EndpointPair, tolerance: float | None = None) -> AnalyticFuzzyNumber:
    u = AnalyticFuzzyNumber(pair=pair)
    probes = np.linspace(0.0, 1.0, get_default("probe_levels"))
    lo, hi = u.endpoints(probes)
    _validate(probes, lo, hi, tolerance or get_default("tolerance"))
    return u


def _on_levels(
    endpoint: EndpointFn | Sequence[float] | np.ndarray,
    levels: np.ndarray,
    grid: LevelGrid,
) -> np.ndarray:
    values = np.asarray(endpoint(levels) if callable(endpoint) else endpoint, dtype=float)
    if values.ndim == 0:
        return np.full(levels.shape, float(values))
    if values.shape != levels.shape:
        raise DomainError(
            f"expected {levels.size} samples for a grid of resolution "
            f"{grid.resolution}, got {values.size}"
        )
    return values


def from_endpoint_pair(
    pair: EndpointPair, tolerance: float | None = None
) -> AnalyticFuzzyNumber:
    """
    Build a validated Analytic number from one closure λ -> (lo, hi).

    Raises:
        MonotonicityViolation: If lo decreases or hi increases beyond tolerance.
        CrossingViolation: If lo(1) > hi(1).
    """
    return _analytic(pair, tolerance)


def from_levels(
    lo: EndpointFn | Sequence[float] | np.ndarray,
    hi: EndpointFn | Sequence[float] | np.ndarray,
    grid: LevelGrid | None = None,
    tolerance: float | None = None,
) -> FuzzyNumber:
    """
    Build a validated fuzzy number from its endpoint functions.

    Closures must accept a numpy array of levels; they may return a scalar
    for constant endpoints. Arrays are taken as samples on a uniform grid.

    Args:
        lo: Lower endpoint u^-(λ), closure or array of L+1 values.
        hi: Upper endpoint u^+(λ), closure or array of L+1 values.
        grid: Level grid of the arrays (inferred from their length if omitted).
        tolerance: Monotonicity tolerance (default from config).

    Returns:
        FuzzyNumber: Analytic if both inputs are closures, otherwise Sampled.

    Raises:
        MonotonicityViolation: If lo decreases or hi increases beyond tolerance.
        CrossingViolation: If lo(1) > hi(1).
    """
    tolerance = tolerance or get_default("tolerance")

    if callable(lo) and callable(hi):
        lo_fn, hi_fn = lo, hi
        return _analytic(lambda lams: (lo_fn(lams), hi_fn(lams)), tolerance)

    size = len(hi) if callable(lo) else len(lo)
    grid = grid or LevelGrid(size - 1)
    levels = grid.levels
    lo_values = _on_levels(lo, levels, grid)
    hi_values = _on_levels(hi, levels, grid)
    _validate(levels, lo_values, hi_values, tolerance)
    return _sampled(grid, lo_values, hi_values)


def crisp(x: float) -> FuzzyNumber:
    """The characteristic function of {x}: every level is [x, x]."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"crisp value must be finite, got {x}")
    return AnalyticFuzzyNumber(pair=lambda lams: (x, x))


def interval(lo: float, hi: float) -> FuzzyNumber:
    """Rectangular fuzzy number: every level is [lo, hi]."""
    return from_levels(lambda lams: float(lo), lambda lams: float(hi))


def triangular(a: float, b: float, c: float) -> FuzzyNumber:
    """Triangular fuzzy number with support [a, c] and peak b."""
    if not a <= b <= c:
        raise DomainError(f"triangular needs a <= b <= c, got ({a}, {b}, {c})")
    return from_levels(lambda lams: a + (b - a) * lams, lambda lams: c - (c - b) * lams)


def trapezoidal(a: float, b: float, c: float, d: float) -> FuzzyNumber:
    """Trapezoidal fuzzy number with support [a, d] and core [b, c]."""
    if not a <= b <= c <= d:
        raise DomainError(f"trapezoidal needs a <= b <= c <= d, got ({a}, {b}, {c}, {d})")
    return from_levels(lambda lams: a + (b - a) * lams, lambda lams: d - (d - c) * lams)


def _common_grid(*values: SampledFuzzyNumber) -> LevelGrid:
    return LevelGrid(math.lcm(*(v.grid.resolution for v in values)))


def add(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """Level-wise Minkowski sum: [u+v]^λ = [u^- + v^-, u^+ + v^+]."""
    return convex_combine((1.0, 1.0), (u, v))


def scale(alpha: float, u: FuzzyNumber) -> FuzzyNumber:
    """
    Scalar multiple α·u; a negative α swaps the endpoints.

    Args:
        alpha: Finite real factor.
        u: Fuzzy number.

    Returns:
        FuzzyNumber: Same representation as `u`.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha):
        raise DomainError(f"scale factor must be finite, got {alpha}")

    if isinstance(u, SampledFuzzyNumber):
        if alpha >= 0:
            return _sampled(u.grid, alpha * u.lo, alpha * u.hi)
        return _sampled(u.grid, alpha * u.hi, alpha * u.lo)

    def pair(lams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = u.endpoints(lams)
        return (alpha * lo, alpha * hi) if alpha >= 0 else (alpha * hi, alpha * lo)

    return AnalyticFuzzyNumber(pair=pair)


def convex_combine(
    coeffs: Sequence[float], values: Sequence[FuzzyNumber]
) -> FuzzyNumber:
    """
    Level-wise weighted sum Σ c_i·u_i with nonnegative coefficients.

    With coefficients summing to one the λ-level of the result is the
    weighted Minkowski combination of the λ-levels of the inputs.

    Args:
        coeffs: Nonnegative reals.
        values: Fuzzy numbers, same length as `coeffs`.

    Returns:
        FuzzyNumber: Sampled when every input is Sampled, otherwise Analytic.

    Raises:
        NegativeCoefficient: If a coefficient is negative.
    """
    coeffs = np.asarray(coeffs, dtype=float)
    values = list(values)
    if coeffs.ndim != 1 or coeffs.size != len(values) or not values:
        raise FuzzopError(
            f"need equally many coefficients and values (>= 1), "
            f"got {coeffs.size} and {len(values)}"
        )
    if np.any(coeffs < 0):
        raise NegativeCoefficient(f"coefficients must be nonnegative, got {coeffs.min()}")

    if all(isinstance(v, SampledFuzzyNumber) for v in values):
        grid = _common_grid(*values)
        resampled = [v.on_grid(grid) for v in values]
        lo = sum(c * v.lo for c, v in zip(coeffs, resampled))
        hi = sum(c * v.hi for c, v in zip(coeffs, resampled))
        return _sampled(grid, lo, hi)

    terms = [(float(c), v) for c, v in zip(coeffs, values) if c > 0]

    def pair(lams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        lo = np.zeros(np.shape(lams))
        hi = np.zeros(np.shape(lams))
        for c, v in terms:
            v_lo, v_hi = v.endpoints(lams)
            lo = lo + c * v_lo
            hi = hi + c * v_hi
        return lo, hi

    return AnalyticFuzzyNumber(pair=pair)


def sample(u: FuzzyNumber, resolution: int | None = None) -> SampledFuzzyNumber:
    """
    Evaluate the endpoints of `u` on the grid λ_i = i/L.

    Raises:
        MonotonicityViolation: If the samples are not monotone (invalid input).
    """
    grid = LevelGrid(get_default("levels") if resolution is None else resolution)
    lo, hi = u.endpoints(grid.levels)
    return from_levels(lo, hi, grid=grid)


def as_sampled(u: FuzzyNumber, resolution: int | None = None) -> SampledFuzzyNumber:
    """Return `u` unchanged if already Sampled, otherwise `sample(u, resolution)`."""
    if isinstance(u, SampledFuzzyNumber):
        return u
    return sample(u, resolution)


def support_bound(u: FuzzyNumber) -> float:
    """max{|z| : z in [u]^0}."""
    lo, hi = u.level(0.0)
    return max(abs(lo), abs(hi))


def in_level_neighborhood(
    u: FuzzyNumber, v: FuzzyNumber, levels: Sequence[float], epsilon: float
) -> bool:
    """
    Test v ∈ V(u, {λ_j}, ε), the basic neighbourhood of the level topology.

    Raises:
        DomainError: If ε <= 0 or a level is outside [0, 1].
    """
    if epsilon <= 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    lams = np.array([_check_level(lam) for lam in levels])
    u_lo, u_hi = u.endpoints(lams)
    v_lo, v_hi = v.endpoints(lams)
    gap = np.maximum(np.abs(u_lo - v_lo), np.abs(u_hi - v_hi))
    return bool(np.all(gap < epsilon))
