"""Sigmoidal functions of class A(m) and their bump functions.

σ belongs to A(m) when it is nondecreasing, exactly 0 for x <= -m and exactly
1 for x >= m. Its bump φ(x) = σ(x+m) - σ(x-m) is what the operator weights
node values with.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from fuzzop_cli.errors import NonPositiveM, UnknownSigma

__all__ = [
    "SIGMOIDS",
    "BumpFunction",
    "ClassCheck",
    "SigmoidalFunction",
    "bspline_sigmoid",
    "check_class_A",
    "get_sigmoid",
    "heaviside",
    "phi",
    "ramp",
    "sigmoidal",
    "smooth_ramp",
]


@dataclass(frozen=True, eq=False)
class SigmoidalFunction:
    """A member of A(m); `fn` must work element-wise on numpy arrays."""

    name: str
    m: float
    fn: Callable[[np.ndarray], np.ndarray]

    def __call__(self, x):
        values = np.asarray(self.fn(np.asarray(x, dtype=float)), dtype=float)
        return float(values) if values.ndim == 0 else values

    @property
    def bump(self) -> "BumpFunction":
        return BumpFunction(source=self)


@dataclass(frozen=True, eq=False)
class BumpFunction:
    """φ(x) = σ(x+m) - σ(x-m)."""

    source: SigmoidalFunction

    def __call__(self, x):
        sigma, m = self.source, self.source.m
        x = np.asarray(x, dtype=float)
        values = np.asarray(sigma(x + m), dtype=float) - np.asarray(sigma(x - m), dtype=float)
        return float(values) if values.ndim == 0 else values


def sigmoidal(
    name: str, m: float, fn: Callable[[np.ndarray], np.ndarray]
) -> SigmoidalFunction:
    """
    Wrap a user-supplied σ; membership in A(m) is checked by `check_class_A`.

    Raises:
        NonPositiveM: If m <= 0.
    """
    m = float(m)
    if not m > 0:
        raise NonPositiveM(f"m must be positive, got {m}")
    return SigmoidalFunction(name=name, m=m, fn=fn)


def ramp(m: float = 1.0) -> SigmoidalFunction:
    """Linear ramp from 0 at -m to 1 at m."""
    return sigmoidal("ramp", m, lambda x: np.clip((x + m) / (2.0 * m), 0.0, 1.0))


def heaviside(m: float = 1.0) -> SigmoidalFunction:
    """
    Unit step with σ(0) = 0 and σ(x) = 1 for x > 0.

    m only declares the class A(m); the step itself does not depend on it.
    Consequently φ equals 1 on (-m, m] and 0 elsewhere.
    """
    return sigmoidal("heaviside", m, lambda x: np.where(x > 0.0, 1.0, 0.0))


def smooth_ramp(m: float = 1.0) -> SigmoidalFunction:
    """C1 ramp s²(3 - 2s) with s = (x + m) / 2m clipped to [0, 1]."""

    def fn(x: np.ndarray) -> np.ndarray:
        s = np.clip((x + m) / (2.0 * m), 0.0, 1.0)
        return s * s * (3.0 - 2.0 * s)

    return sigmoidal("smooth-ramp", m, fn)


def bspline_sigmoid(m: float = 1.0) -> SigmoidalFunction:
    """Distribution function of the central quadratic B-spline on [-m, m]."""

    def fn(x: np.ndarray) -> np.ndarray:
        # Knots -m, -m/3, m/3, m mapped to t = 0, 1, 2, 3
        t = np.clip((x + m) * 1.5 / m, 0.0, 3.0)
        return np.select(
            [t <= 1.0, t <= 2.0],
            [
                t**3 / 6.0,
                0.5 + (-2.0 * t**3 / 3.0 + 3.0 * t**2 - 3.0 * t) / 2.0,
            ],
            default=1.0 - (3.0 - t) ** 3 / 6.0,
        )

    return sigmoidal("bspline", m, fn)


SIGMOIDS: dict[str, Callable[[float], SigmoidalFunction]] = {
    "ramp": ramp,
    "heaviside": heaviside,
    "smooth-ramp": smooth_ramp,
    "bspline": bspline_sigmoid,
}


def get_sigmoid(name: str, m: float = 1.0) -> SigmoidalFunction:
    """
    Look up a registered sigmoidal function by name.

    Raises:
        UnknownSigma: If the name is not registered.
    """
    try:
        factory = SIGMOIDS[name]
    except KeyError:
        raise UnknownSigma(
            f"unknown sigma '{name}' (choose from {', '.join(SIGMOIDS)})"
        ) from None
    return factory(m)


def phi(sigma: SigmoidalFunction, x):
    """Bump φ(x) = σ(x+m) - σ(x-m); scalar in, scalar out."""
    return sigma.bump(x)


@dataclass
class ClassCheck:
    """Outcome of `check_class_A`: item name -> (passed, worst violation)."""

    sigma: str
    probes: int
    items: dict[str, tuple[bool, float]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.items.values())

    def record(self, item: str, violation: float, tolerance: float = 0.0) -> None:
        violation = max(0.0, float(violation))
        self.items[item] = (violation <= tolerance, violation)


def check_class_A(
    sigma: SigmoidalFunction, probe_points: int = 10001, tolerance: float = 1e-12
) -> ClassCheck:
    """
    Check A(m) membership and the four bump properties on a probe grid.

    Items: `monotone` and `boundary` (class membership), then the bump
    properties `nonnegative`, `unimodal`, `support` and `partition`.

    Args:
        sigma: Function to check.
        probe_points: Uniform probes over [-3m, 3m] (>= 3).
        tolerance: Allowed error for the partition-of-unity item.

    Returns:
        ClassCheck: Per-item pass/fail with the worst violation found.
    """
    if probe_points < 3:
        raise ValueError(f"probe_points must be >= 3, got {probe_points}")

    m = sigma.m
    x = np.linspace(-3.0 * m, 3.0 * m, probe_points)
    s = np.asarray(sigma(x), dtype=float)
    bump = np.asarray(sigma.bump(x), dtype=float)
    report = ClassCheck(sigma=sigma.name, probes=probe_points)

    report.record("monotone", -np.min(np.diff(s), initial=0.0))

    below, above = s[x <= -m], s[x >= m]
    report.record(
        "boundary",
        max(np.max(np.abs(below), initial=0.0), np.max(np.abs(above - 1.0), initial=0.0)),
    )

    report.record("nonnegative", -np.min(bump, initial=0.0))

    left, right = bump[x < 0], bump[x > 0]
    report.record(
        "unimodal",
        max(-np.min(np.diff(left), initial=0.0), np.max(np.diff(right), initial=0.0)),
    )

    report.record("support", np.max(np.abs(bump[np.abs(x) >= 2.0 * m]), initial=0.0))

    window = x[(x >= 0.0) & (x <= 2.0 * m)]
    pair_sum = np.asarray(sigma.bump(window), dtype=float) + np.asarray(
        sigma.bump(window - 2.0 * m), dtype=float
    )
    report.record("partition", np.max(np.abs(pair_sum - 1.0), initial=0.0), tolerance)

    return report
