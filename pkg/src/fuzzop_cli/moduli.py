"""Fuzzy moduli of continuity.

ω_d(f, δ) = sup{d(f(x), f(y)) : |x - y| < δ} for a metric d, and the level
modulus ω(f, δ, λ) = sup{d_H([f(x)]^λ, [f(y)]^λ) : |x - y| < δ}. Empirical
values are maxima over a uniform probe grid and therefore lower bounds;
closed forms come from the `analytic_modulus` table of a FuzzyFunction.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from fuzzop_cli.config import get_default
from fuzzop_cli.errors import DomainError, MissingAnalyticModulus
from fuzzop_cli.fuzzy_core import LevelGrid, as_sampled
from fuzzop_cli.metrics import get_metric
from fuzzop_cli.nn_operator import FuzzyFunction

__all__ = [
    "ANALYTIC",
    "EMPIRICAL",
    "ModulusEstimate",
    "analytic_modulus",
    "empirical_modulus",
    "level_example_modulus",
    "level_modulus",
    "modulus_curve",
]

logger = logging.getLogger(__name__)

ANALYTIC = "analytic"
EMPIRICAL = "empirical-lower-bound"


@dataclass(frozen=True)
class ModulusEstimate:
    """A modulus value and how it was obtained."""

    value: float
    kind: str
    sampling: str

    @property
    def is_analytic(self) -> bool:
        return self.kind == ANALYTIC


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not delta > 0:
        raise DomainError(f"delta must be positive, got {delta}")
    return delta


def _probe_grid(f: FuzzyFunction, delta: float, probes: int) -> tuple[np.ndarray, int]:
    """Uniform probes on [a, b] and the largest index offset k with k·step < δ."""
    if probes < 2:
        raise DomainError(f"probes must be >= 2, got {probes}")
    xs = np.linspace(f.a, f.b, probes)
    step = (f.b - f.a) / (probes - 1)
    window = int(np.count_nonzero(np.arange(1, probes) * step < delta))
    return xs, window


def _windowed_gap(lo: np.ndarray, hi: np.ndarray, window: int) -> float:
    """max over offsets 1..window of the endpoint gap between probes i and i+k."""
    worst = 0.0
    for k in range(1, window + 1):
        gap = max(np.max(np.abs(lo[k:] - lo[:-k])), np.max(np.abs(hi[k:] - hi[:-k])))
        worst = max(worst, float(gap))
    return worst


def level_example_modulus(delta: float, lam: float) -> float:
    """
    Level modulus of the level-continuous example function on [0, 1].

    For λ = 1/2 + ε the lower endpoint is x -> ε^x, whose largest drop over
    an interval shorter than δ is 1 - ε^δ (taken at x = 0). Levels λ <= 1/2
    are constant in x, so the modulus vanishes there.
    """
    delta = _check_delta(delta)
    if lam <= 0.5:
        return 0.0
    return 1.0 - (lam - 0.5) ** min(delta, 1.0)


def analytic_modulus(
    f: FuzzyFunction, kind: str, delta: float, lam: float | None = None
) -> float:
    """
    Closed-form modulus of `f` for a metric name or "level".

    Raises:
        MissingAnalyticModulus: If `f` carries no closed form for `kind`.
    """
    delta = _check_delta(delta)
    try:
        closed_form = f.analytic_modulus[kind]
    except KeyError:
        raise MissingAnalyticModulus(
            f"function '{f.name}' has no analytic {kind} modulus"
        ) from None
    if kind == "level":
        return float(closed_form(delta, lam))
    return float(closed_form(delta))


def empirical_modulus(
    f: FuzzyFunction,
    delta: float,
    metric: str = "d_inf",
    probes: int | None = None,
    spacing: float | None = None,
) -> ModulusEstimate:
    """
    Probe-grid estimate of ω_d(f, δ) for d in {d_inf, sendograph, endograph}.

    Pairs are taken from a sliding window over `probes` uniform points, so
    the cost is O(probes · window) metric evaluations.

    Args:
        f: Function to measure.
        delta: Positive radius.
        metric: Metric name.
        probes: Probe count (default `modulus_probes` for d_inf and
            `metric_probes` for the region metrics).
        spacing: Hausdorff spacing for region metrics.

    Returns:
        ModulusEstimate: A lower bound of the true modulus.

    Raises:
        DomainError: If δ <= 0 or probes < 2.
        UnknownMetric: If the metric name is not registered.
    """
    delta = _check_delta(delta)
    distance = get_metric(metric)
    if probes is None:
        probes = get_default("modulus_probes" if metric == "d_inf" else "metric_probes")
    xs, window = _probe_grid(f, delta, probes)

    if metric == "d_inf":
        lams = LevelGrid(get_default("probe_levels")).levels
        lo, hi = f.level_arrays(xs[:, None], lams[None, :])
        value = _windowed_gap(lo, hi, window)
    else:
        values = [as_sampled(f.eval(float(x))) for x in xs]
        value = 0.0
        for k in range(1, window + 1):
            for i in range(probes - k):
                value = max(value, distance(values[i], values[i + k], spacing=spacing).value)

    logger.debug("%s modulus of %s at δ=%g: %.6g", metric, f.name, delta, value)
    return ModulusEstimate(
        value=value,
        kind=EMPIRICAL,
        sampling=f"{probes} uniform probes on [{f.a}, {f.b}], window {window}",
    )


def level_modulus(
    f: FuzzyFunction,
    delta: float,
    lam: float,
    probes: int | None = None,
    analytic: bool = True,
) -> ModulusEstimate:
    """
    ω(f, δ, λ), from the closed form when `f` has one and `analytic` is set.

    Raises:
        DomainError: If δ <= 0, λ is outside [0, 1] or probes < 2.
    """
    delta = _check_delta(delta)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"level {lam} is outside [0, 1]")

    if analytic and "level" in f.analytic_modulus:
        value = analytic_modulus(f, "level", delta, lam)
        return ModulusEstimate(value=value, kind=ANALYTIC, sampling="closed form")

    probes = probes or get_default("modulus_probes")
    xs, window = _probe_grid(f, delta, probes)
    lo, hi = f.level_arrays(xs, lam)
    return ModulusEstimate(
        value=_windowed_gap(lo, hi, window),
        kind=EMPIRICAL,
        sampling=f"{probes} uniform probes on [{f.a}, {f.b}], window {window}",
    )


def modulus_curve(
    f: FuzzyFunction,
    deltas: Sequence[float],
    metric: str = "level",
    lam: float | None = None,
    probes: int | None = None,
    analytic: bool = False,
) -> list[ModulusEstimate]:
    """Moduli over a sequence of radii, for a metric name or "level"."""
    if metric == "level":
        if lam is None:
            raise DomainError("the level modulus needs a level λ")
        return [level_modulus(f, d, lam, probes, analytic=analytic) for d in deltas]
    return [empirical_modulus(f, d, metric, probes) for d in deltas]
