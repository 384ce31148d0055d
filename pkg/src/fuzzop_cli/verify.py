"""Randomized property suites and Jackson-bound checks.

Every check records a slack: the measured violation minus its allowed error
budget. A property fails when its worst slack is positive. Trials draw from
generators spawned from one master seed, so any trial can be replayed from
(seed, trial index).
"""

from __future__ import annotations

import logging
import math
import time
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import reduce
from itertools import islice

import numpy as np

from fuzzop_cli.config import get_default
from fuzzop_cli.corpus import CorpusEntry, get_entry
from fuzzop_cli.errors import DomainError, MissingAnalyticModulus, UnknownMetric
from fuzzop_cli.fuzzy_core import (
    LevelGrid,
    SampledFuzzyNumber,
    add,
    convex_combine,
    from_levels,
    scale,
    support_bound,
)
from fuzzop_cli.metrics import (
    METRICS,
    HausdorffResult,
    RegionGeometry,
    distances,
    get_metric,
    level_neighborhood_check,
    point_region_distance,
    sendograph,
)
from fuzzop_cli.moduli import analytic_modulus
from fuzzop_cli.nn_operator import (
    FuzzyFunction,
    NodeGrid,
    apply,
    apply_levels,
    approximant,
    weights,
)
from fuzzop_cli.sigmoid import SIGMOIDS, SigmoidalFunction, check_class_A, get_sigmoid

__all__ = [
    "REPORT_HEADER",
    "SUITES",
    "THEOREMS",
    "PropertyReport",
    "RandomFuzzySpec",
    "SuiteSettings",
    "gen_fuzzy",
    "jackson_bound",
    "measure_sup_error",
    "random_function",
    "run_endograph_membership_suite",
    "run_interpolation_suite",
    "run_jackson_suite",
    "run_level_combination_suite",
    "run_metric_axioms",
    "run_metric_properties",
    "run_ordering_suite",
    "run_plane_inequality_suite",
    "run_class_a_suite",
    "run_suites",
    "smallest_n",
    "trial_generator",
    "trial_generators",
]

logger = logging.getLogger(__name__)

THEOREMS = ("level", "d_inf", "sendograph", "endograph")
REPORT_HEADER = "id,trials,worst_slack,passed,seed"


@dataclass(frozen=True)
class RandomFuzzySpec:
    """Shape of random fuzzy numbers: L+1 levels inside [-M, M]."""

    levels: int = field(default_factory=lambda: get_default("random_levels"))
    support: float = field(default_factory=lambda: get_default("support"))
    seed: int = 0

    def __post_init__(self) -> None:
        if self.levels < 0:
            raise DomainError(f"levels must be >= 0, got {self.levels}")
        if not self.support > 0:
            raise DomainError(f"support must be positive, got {self.support}")


@dataclass
class PropertyReport:
    """Outcome of one property: fail iff worst_slack > 0."""

    property_id: str
    trials: int
    seed: int
    worst_slack: float = -math.inf
    worst_trial: int | None = None
    items: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.worst_slack <= 0.0

    def record(self, item: str, slack: float, trial: int | None = None) -> None:
        slack = float(slack)
        if math.isnan(slack):
            slack = math.inf
        if slack > self.items.get(item, -math.inf):
            self.items[item] = slack
        if slack > self.worst_slack:
            self.worst_slack = slack
            self.worst_trial = trial

    def line(self) -> str:
        passed = "true" if self.passed else "false"
        return f"{self.property_id},{self.trials},{self.worst_slack:.17g},{passed},{self.seed}"


def trial_generators(seed: int, trials: int) -> Iterator[tuple[int, np.random.Generator]]:
    """Independent generators for trials 0..trials-1 of one master seed."""
    for index, child in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        yield index, np.random.default_rng(child)


def trial_generator(seed: int, index: int) -> np.random.Generator:
    """The generator of a single trial, for replaying a reported failure."""
    return np.random.default_rng(np.random.SeedSequence(seed).spawn(index + 1)[index])


def gen_fuzzy(
    spec: RandomFuzzySpec, rng: np.random.Generator | None = None
) -> SampledFuzzyNumber:
    """
    Draw a random Sampled fuzzy number.

    2(L+1) uniform values in [-M, M] are sorted; the lower half becomes the
    ascending lo, the upper half reversed becomes the descending hi, so
    lo[L] <= hi[L] holds by construction. L = 0 gives a random interval.

    Args:
        spec: Resolution and support box.
        rng: Generator to draw from (default: one seeded with spec.seed).
    """
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    count = spec.levels + 1
    draws = np.sort(rng.uniform(-spec.support, spec.support, 2 * count))
    lo, hi = draws[:count], draws[count:][::-1]
    if spec.levels == 0:
        return from_levels(np.repeat(lo, 2), np.repeat(hi, 2), grid=LevelGrid(1))
    return from_levels(lo, hi, grid=LevelGrid(spec.levels))


def random_function(
    spec: RandomFuzzySpec, rng: np.random.Generator, a: float, b: float
) -> FuzzyFunction:
    """A smooth random path x -> (1 - c(x))·u + c(x)·v between two random numbers."""
    u, v = gen_fuzzy(spec, rng), gen_fuzzy(spec, rng)
    freq, phase = rng.uniform(0.5, 6.0), rng.uniform(0.0, 2.0 * math.pi)

    def levels(x, lam):
        x, lam = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(lam, dtype=float))
        c = 0.5 * (1.0 + np.sin(freq * x + phase))
        u_lo, u_hi = u.endpoints(lam)
        v_lo, v_hi = v.endpoints(lam)
        return (1.0 - c) * u_lo + c * v_lo, (1.0 - c) * u_hi + c * v_hi

    return FuzzyFunction(a=a, b=b, levels=levels, name="random")


def _unit_coefficient(rng: np.random.Generator) -> float:
    """Uniform in [0, 1], landing exactly on either end one time in ten."""
    draw = rng.random()
    if draw < 0.1:
        return 0.0
    if draw < 0.2:
        return 1.0
    return float(rng.random())


def run_class_a_suite(
    sigma: SigmoidalFunction,
    probes: int = 10001,
    seed: int | None = None,
) -> PropertyReport:
    """Class A(m) membership and the bump properties of σ, as a report."""
    tolerance = get_default("tolerance")
    check = check_class_A(sigma, probe_points=probes, tolerance=tolerance)
    report = PropertyReport(
        f"class-a-{sigma.name}", trials=probes, seed=get_default("seed") if seed is None else seed
    )
    for item, (_, violation) in check.items.items():
        allowed = tolerance if item == "partition" else 0.0
        report.record(item, violation - allowed)
    return report


def _unit_levels(x, lam) -> tuple[np.ndarray, np.ndarray]:
    ones = np.ones(np.broadcast_shapes(np.shape(x), np.shape(lam)))
    return ones, ones


def run_interpolation_suite(
    trials: int, seed: int, levels: int | None = None, support: float | None = None
) -> PropertyReport:
    """
    Node interpolation, normalisation and partition of unity.

    Each trial draws a random path f, n in [1, 64], a registered σ and
    m in [0.5, 2]; S_n(f) must reproduce f at every node on every grid
    level, and the weights at 100 random points must lie in [0, 1], sum to
    one and stay within h of x.
    """
    spec = RandomFuzzySpec(levels or get_default("random_levels"), support or get_default("support"))
    tol = get_default("tolerance")
    report = PropertyReport("interpolation", trials, seed)
    lams = LevelGrid(max(1, spec.levels)).levels

    for trial, rng in trial_generators(seed, trials):
        n = int(rng.integers(1, 65))
        sigma = get_sigmoid(str(rng.choice(list(SIGMOIDS))), m=float(rng.uniform(0.5, 2.0)))
        a = float(rng.uniform(-2.0, 0.0))
        b = a + float(rng.uniform(0.5, 3.0))
        f = random_function(spec, rng, a, b)
        grid = NodeGrid(a, b, n)
        nodes = grid.nodes

        s_lo, s_hi = apply_levels(f, grid, sigma, nodes[:, None], lams[None, :])
        f_lo, f_hi = f.level_arrays(nodes[:, None], lams[None, :])
        gap = max(np.max(np.abs(s_lo - f_lo)), np.max(np.abs(s_hi - f_hi)))
        report.record("interpolation", gap - tol, trial)

        for x in rng.uniform(a, b, 100):
            pairs = weights(grid, sigma, float(x))
            coeffs = np.array([c for _, c in pairs])
            report.record("partition", abs(coeffs.sum() - 1.0) - tol, trial)
            report.record("range", max(-coeffs.min(), coeffs.max() - 1.0), trial)
            report.record(
                "locality", max(abs(x - nodes[k]) for k, _ in pairs) - grid.h, trial
            )

        # S_n applied to the constant 1 returns the crisp 1
        one = FuzzyFunction(a=a, b=b, levels=_unit_levels)
        lo, hi = apply(one, grid, sigma, float(rng.uniform(a, b))).level(float(rng.random()))
        report.record("normalisation", max(abs(lo - 1.0), abs(hi - 1.0)) - tol, trial)

    return report


def _measure_batches(
    metric: str, batches: Sequence[Sequence[tuple]], spacing: float | None
) -> list[list[HausdorffResult]]:
    """Distances of several pair lists in one batched pass, split back per list."""
    results = iter(distances(metric, [pair for batch in batches for pair in batch], spacing=spacing))
    return [list(islice(results, len(batch))) for batch in batches]


def run_metric_properties(
    metric: str,
    trials: int,
    spacing: float | None = None,
    seed: int | None = None,
    levels: int | None = None,
    support: float | None = None,
) -> PropertyReport:
    """
    Scaling, sum and convex-combination bounds for D_S or D_E.

    Items: `i-scaling` D(αu, βu) <= |α - β|·max|[u]^0|; `ii-sums`
    D(Σu_j, Σv_j) <= Σ D(u_j, v_j); `convex-max`
    D(αu + (1-α)v, w) <= √2·max(D(u, w), D(v, w)); for D_E also
    `convex-root` with √(D(u, w)² + D(v, w)²) on the right.

    The right-hand sides use value + error_bound and the left-hand sides the
    value alone, so a positive slack is a genuine violation.
    """
    if metric not in ("sendograph", "endograph"):
        raise UnknownMetric(f"metric properties exist for sendograph and endograph, not '{metric}'")
    seed = get_default("seed") if seed is None else seed
    spec = RandomFuzzySpec(levels or get_default("random_levels"), support or get_default("support"))
    budget = get_default("geometry_tolerance")
    report = PropertyReport("sendograph-bounds" if metric == "sendograph" else "endograph-bounds", trials, seed)

    scaled, allowed, sums, parts, owners, mixed, sides = [], [], [], [], [], [], []
    for trial, rng in trial_generators(seed, trials):
        u, v, w = (gen_fuzzy(spec, rng) for _ in range(3))

        alpha, beta = (float(c) for c in rng.uniform(-2.0, 2.0, 2))
        if rng.random() < 0.1:
            beta = alpha
        scaled.append((scale(alpha, u), scale(beta, u)))
        allowed.append(abs(alpha - beta) * support_bound(u))

        count = int(rng.integers(2, 4))
        us = [u] + [gen_fuzzy(spec, rng) for _ in range(count - 1)]
        vs = [v] + [gen_fuzzy(spec, rng) for _ in range(count - 1)]
        sums.append((reduce(add, us), reduce(add, vs)))
        parts.extend(zip(us, vs))
        owners.extend([trial] * count)

        alpha = _unit_coefficient(rng)
        mixed.append((convex_combine((alpha, 1.0 - alpha), (u, v)), w))
        sides.extend([(u, w), (v, w)])

    scaled_d, sums_d, parts_d, mixed_d, sides_d = _measure_batches(
        metric, [scaled, sums, parts, mixed, sides], spacing
    )
    part_totals = np.zeros(trials)
    np.add.at(part_totals, np.asarray(owners, dtype=int), [r.upper for r in parts_d])

    for trial in range(trials):
        report.record("i-scaling", scaled_d[trial].value - allowed[trial] - budget, trial)
        report.record("ii-sums", sums_d[trial].value - part_totals[trial] - budget, trial)

        lhs = mixed_d[trial].value
        uw, vw = sides_d[2 * trial].upper, sides_d[2 * trial + 1].upper
        report.record("convex-max", lhs - math.sqrt(2.0) * max(uw, vw) - budget, trial)
        if metric == "endograph":
            report.record("convex-root", lhs - math.hypot(uw, vw) - budget, trial)

    return report



def run_plane_inequality_suite(
    trials: int, seed: int | None = None, support: float | None = None
) -> PropertyReport:
    """
    The two plane inequalities behind the endograph convexity bounds.

    (i)  d((x, b), (αy1 + (1-α)y2, min(k1, k2)))
             <= √(d((x, b), (y1, k1))² + d((x, b), (y2, k2))²)
    (ii) the same with x = αx1 + (1-α)x2 on the left and x1, x2 on the right.

    Pure geometry on random reals, checked to a relative 1e-12; all trials
    are drawn in one batch from the master seed.
    """
    seed = get_default("seed") if seed is None else seed
    bound = support or get_default("support")
    rng = np.random.default_rng(seed)
    x, y1, y2, x1, x2, b, k1, k2 = rng.uniform(-bound, bound, (8, trials))
    alpha = rng.uniform(0.0, 1.0, trials)

    y = alpha * y1 + (1.0 - alpha) * y2
    k = np.minimum(k1, k2)
    lhs_i = np.hypot(x - y, b - k)
    rhs_i = np.sqrt(np.hypot(x - y1, b - k1) ** 2 + np.hypot(x - y2, b - k2) ** 2)
    lhs_ii = np.hypot(alpha * x1 + (1.0 - alpha) * x2 - y, b - k)
    rhs_ii = np.sqrt(np.hypot(x1 - y1, b - k1) ** 2 + np.hypot(x2 - y2, b - k2) ** 2)

    tol = get_default("tolerance")
    report = PropertyReport("plane-inequalities", trials, seed)
    for item, lhs, rhs in (("i", lhs_i, rhs_i), ("ii", lhs_ii, rhs_ii)):
        slack = lhs - rhs - tol * np.maximum(1.0, rhs)
        worst = int(np.argmax(slack))
        report.record(item, slack[worst], worst)
    return report


def run_level_combination_suite(
    trials: int,
    seed: int | None = None,
    levels: int | None = None,
    support: float | None = None,
) -> PropertyReport:
    """
    Level characterisation of w = αu + (1-α)v.

    `decomposition`: z = k·w^- + (1-k)·w^+ equals αx + (1-α)y with
    x = k·u^- + (1-k)·u^+ in [u]^λ and y likewise in [v]^λ.
    `closure`: αx + (1-α)y lies in [w]^λ for random x in [u]^λ, y in [v]^λ.
    """
    seed = get_default("seed") if seed is None else seed
    spec = RandomFuzzySpec(levels or get_default("random_levels"), support or get_default("support"))
    tol = get_default("tolerance") * max(1.0, spec.support)
    report = PropertyReport("endograph-convexity-levels", trials, seed)

    for trial, rng in trial_generators(seed, trials):
        u, v = gen_fuzzy(spec, rng), gen_fuzzy(spec, rng)
        alpha = _unit_coefficient(rng)
        lam, k = float(rng.random()), float(rng.random())
        w = convex_combine((alpha, 1.0 - alpha), (u, v))
        (u_lo, u_hi), (v_lo, v_hi), (w_lo, w_hi) = u.level(lam), v.level(lam), w.level(lam)

        z = k * w_lo + (1.0 - k) * w_hi
        x = k * u_lo + (1.0 - k) * u_hi
        y = k * v_lo + (1.0 - k) * v_hi
        report.record("decomposition", abs(z - (alpha * x + (1.0 - alpha) * y)) - tol, trial)

        x, y = rng.uniform(u_lo, u_hi), rng.uniform(v_lo, v_hi)
        z = alpha * x + (1.0 - alpha) * y
        report.record("closure", max(w_lo - z, z - w_hi) - tol, trial)

    return report


def _endograph_point(
    u: SampledFuzzyNumber, rng: np.random.Generator, support: float
) -> tuple[float, float]:
    """A random point of end(u): on R×{0} one time in five, else in send(u)."""
    if rng.random() < 0.2:
        return float(rng.uniform(-2.0 * support, 2.0 * support)), 0.0
    lam = float(rng.random())
    lo, hi = u.level(lam)
    return float(rng.uniform(lo, hi)), lam


def _endograph_gap(region: RegionGeometry, x: float, lam: float) -> float:
    # R×{0} belongs to every endograph
    if lam <= 0.0:
        return 0.0
    return point_region_distance((x, lam), region)


def run_endograph_membership_suite(
    trials: int,
    seed: int | None = None,
    levels: int | None = None,
    support: float | None = None,
    points: int = 8,
) -> PropertyReport:
    """
    Convexity of endographs under the min-level combination.

    (i)  (βx1 + (1-β)x2, min(λ1, λ2)) ∈ end(u) for (x_j, λ_j) ∈ end(u);
    (ii) (αy1 + (1-α)y2, min(λ1, λ2)) ∈ end(αu + (1-α)v) for
         (y1, λ1) ∈ end(u) and (y2, λ2) ∈ end(v).

    Membership is tested within the geometry tolerance (1e-9).
    """
    seed = get_default("seed") if seed is None else seed
    spec = RandomFuzzySpec(levels or get_default("random_levels"), support or get_default("support"))
    tol = get_default("geometry_tolerance")
    report = PropertyReport("endograph-convexity-membership", trials, seed)

    for trial, rng in trial_generators(seed, trials):
        u, v = gen_fuzzy(spec, rng), gen_fuzzy(spec, rng)
        alpha = _unit_coefficient(rng)
        send_u = sendograph(u)
        send_w = sendograph(convex_combine((alpha, 1.0 - alpha), (u, v)))

        for _ in range(points):
            (x1, l1), (x2, l2) = _endograph_point(u, rng, spec.support), _endograph_point(u, rng, spec.support)
            beta = float(rng.random())
            gap = _endograph_gap(send_u, beta * x1 + (1.0 - beta) * x2, min(l1, l2))
            report.record("i", gap - tol, trial)

            (y1, k1), (y2, k2) = _endograph_point(u, rng, spec.support), _endograph_point(v, rng, spec.support)
            gap = _endograph_gap(send_w, alpha * y1 + (1.0 - alpha) * y2, min(k1, k2))
            report.record("ii", gap - tol, trial)

    return report


def run_metric_axioms(
    metric: str,
    trials: int,
    spacing: float | None = None,
    seed: int | None = None,
    levels: int | None = None,
    support: float | None = None,
) -> PropertyReport:
    """Symmetry, identity, separation and the triangle inequality for one metric."""
    seed = get_default("seed") if seed is None else seed
    spec = RandomFuzzySpec(levels or get_default("random_levels"), support or get_default("support"))
    get_metric(metric)
    budget = get_default("geometry_tolerance")
    report = PropertyReport(f"axioms-{metric}", trials, seed)

    forward, backward, same, to_w = [], [], [], []
    for _, rng in trial_generators(seed, trials):
        u, v, w = (gen_fuzzy(spec, rng) for _ in range(3))
        forward.append((u, v))
        backward.append((v, u))
        same.append((u, u))
        to_w.extend([(u, w), (v, w)])

    uv_d, vu_d, same_d, to_w_d = _measure_batches(metric, [forward, backward, same, to_w], spacing)
    for trial in range(trials):
        uv, vu = uv_d[trial], vu_d[trial]
        report.record(
            "symmetry", abs(uv.value - vu.value) - uv.error_bound - vu.error_bound - budget, trial
        )
        report.record("identity", same_d[trial].value - budget, trial)
        # Random draws are distinct, so their distance must be positive
        report.record("separation", budget - uv.upper, trial)

        uw, vw = to_w_d[2 * trial], to_w_d[2 * trial + 1]
        report.record("triangle", uw.value - uv.upper - vw.upper - budget, trial)

    return report


def run_ordering_suite(
    trials: int,
    spacing: float | None = None,
    seed: int | None = None,
    levels: int | None = None,
    support: float | None = None,
) -> PropertyReport:
    """D_E(u, v) <= D_S(u, v) within both error bounds."""
    seed = get_default("seed") if seed is None else seed
    spec = RandomFuzzySpec(levels or get_default("random_levels"), support or get_default("support"))
    budget = get_default("geometry_tolerance")
    report = PropertyReport("ordering", trials, seed)

    pairs = []
    for _, rng in trial_generators(seed, trials):
        pairs.append((gen_fuzzy(spec, rng), gen_fuzzy(spec, rng)))

    sends = distances("sendograph", pairs, spacing=spacing)
    ends = distances("endograph", pairs, spacing=spacing)
    for trial, (send, end) in enumerate(zip(sends, ends)):
        report.record(
            "D_E<=D_S", end.value - send.value - send.error_bound - end.error_bound - budget, trial
        )

    return report



def _check_theorem(theorem: str) -> None:
    if theorem not in THEOREMS:
        raise UnknownMetric(f"unknown theorem metric '{theorem}' (choose from {', '.join(THEOREMS)})")


def _endpoint_gap(a: tuple[np.ndarray, np.ndarray], b: tuple[np.ndarray, np.ndarray]) -> float:
    return float(max(np.max(np.abs(a[0] - b[0]), initial=0.0), np.max(np.abs(a[1] - b[1]), initial=0.0)))


def measure_sup_error(
    entry: CorpusEntry,
    sigma: SigmoidalFunction,
    n: int,
    theorem: str,
    lam: float | None = None,
    xs: Sequence[float] | None = None,
    spacing: float | None = None,
    resolution: int | None = None,
) -> HausdorffResult:
    """
    sup over probe points x of the distance between S_n(f, x) and f(x).

    `level` compares λ-levels on the x-grid, `d_inf` compares all probe
    levels, and the region metrics evaluate D_S or D_E point by point.

    Returns:
        HausdorffResult: The largest measured distance and the largest
        error bound among the evaluations.
    """
    _check_theorem(theorem)
    f = entry.function
    grid = NodeGrid(f.a, f.b, n)

    if theorem == "level":
        if lam is None:
            raise DomainError("the level theorem needs a level λ")
        xs = np.linspace(f.a, f.b, get_default("x_grid")) if xs is None else np.asarray(xs, dtype=float)
        approx = apply_levels(f, grid, sigma, xs, lam)
        return HausdorffResult(value=_endpoint_gap(approx, f.level_arrays(xs, lam)))

    if theorem == "d_inf":
        xs = np.linspace(f.a, f.b, get_default("metric_probes")) if xs is None else np.asarray(xs, dtype=float)
        lams = LevelGrid(get_default("probe_levels")).levels
        approx = apply_levels(f, grid, sigma, xs[:, None], lams[None, :])
        return HausdorffResult(value=_endpoint_gap(approx, f.level_arrays(xs[:, None], lams[None, :])))

    xs = np.linspace(f.a, f.b, get_default("jackson_probes")) if xs is None else np.asarray(xs, dtype=float)
    pairs = [(apply(f, grid, sigma, float(x)), f.eval(float(x))) for x in xs]
    results = distances(theorem, pairs, spacing=spacing, resolution=resolution)
    return HausdorffResult(
        value=max(r.value for r in results),
        error_bound=max(r.error_bound for r in results),
        evaluations=sum(r.evaluations for r in results),
    )


def jackson_bound(entry: CorpusEntry, n: int, theorem: str, lam: float | None = None) -> float:
    """
    Right-hand side of the Jackson estimate at h = (b - a)/n.

    ω(f, h, λ) for `level`, ω_{d_inf}(f, h) for `d_inf` and √2·ω_D(f, h) for
    the sendograph and endograph metrics.

    Raises:
        MissingAnalyticModulus: If the entry has no closed-form modulus.
    """
    _check_theorem(theorem)
    f = entry.function
    omega = analytic_modulus(f, theorem, (f.b - f.a) / n, lam)
    return math.sqrt(2.0) * omega if theorem in ("sendograph", "endograph") else omega


def _search(
    entry: CorpusEntry,
    sigma: SigmoidalFunction,
    epsilon: float,
    theorem: str,
    lam: float | None,
    max_n: int,
    xs,
    spacing: float | None,
    resolution: int | None,
) -> tuple[int | None, float]:
    f = entry.function
    n, error = 1, math.inf
    while n <= max_n:
        measured = measure_sup_error(entry, sigma, n, theorem, lam, xs, spacing, resolution)
        error = measured.upper
        if theorem == "level":
            probe_xs = np.linspace(f.a, f.b, get_default("x_grid")) if xs is None else xs
            inside = level_neighborhood_check(
                f, approximant(f, NodeGrid(f.a, f.b, n), sigma), [lam], epsilon, probe_xs
            )
        else:
            inside = error < epsilon
        if inside:
            return n, error
        n *= 2
    return None, error


def smallest_n(
    entry: CorpusEntry,
    sigma: SigmoidalFunction,
    epsilon: float,
    theorem: str,
    lam: float | None = None,
    max_n: int = 1024,
    xs: Sequence[float] | None = None,
    spacing: float | None = None,
    resolution: int | None = None,
) -> int | None:
    """
    First n in 1, 2, 4, ... <= max_n whose sup error is below ε.

    For `level` the test is membership of S_n(f) in the level neighbourhood
    V(f, {λ}, ε) at every probe; for the region metrics the certified upper
    value must be below ε.

    Raises:
        DomainError: If ε <= 0.
    """
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    n, _ = _search(entry, sigma, epsilon, theorem, lam, max_n, xs, spacing, resolution)
    return n


def run_jackson_suite(
    entry: CorpusEntry,
    sigma: SigmoidalFunction,
    ns: Sequence[int],
    theorem: str,
    lam: float | None = None,
    xs: Sequence[float] | None = None,
    spacing: float | None = None,
    resolution: int | None = None,
    epsilon: float | None = None,
    seed: int = 0,
) -> PropertyReport:
    """
    Check measured sup error <= Jackson bound for every n.

    Region metrics add their error bound to the budget; `level` and `d_inf`
    allow only floating-point round-off. With `epsilon` the corollary form
    is checked too: some n <= 1024 brings the error below ε.

    Raises:
        MissingAnalyticModulus: If the entry lacks the needed modulus.
    """
    _check_theorem(theorem)
    if theorem not in entry.function.analytic_modulus:
        raise MissingAnalyticModulus(f"'{entry.id}' has no analytic {theorem} modulus")

    label = f"jackson-{theorem}-{entry.id}-{sigma.name}"
    if theorem == "level":
        label += f"@{lam:g}"
    report = PropertyReport(label, len(ns), seed)
    tol = get_default("tolerance")

    for index, n in enumerate(ns):
        measured = measure_sup_error(entry, sigma, n, theorem, lam, xs, spacing, resolution)
        bound = jackson_bound(entry, n, theorem, lam)
        budget = measured.error_bound + tol * max(1.0, bound)
        report.record(f"n={n}", measured.value - bound - budget, index)
        logger.debug("%s n=%d: error %.6g, bound %.6g", label, n, measured.value, bound)

    if epsilon is not None:
        n_star, error = _search(entry, sigma, epsilon, theorem, lam, 1024, xs, spacing, resolution)
        # No n <= 1024 reached ε
        report.record("corollary", error - epsilon if n_star is not None else 1.0)

    return report


@dataclass(frozen=True)
class SuiteSettings:
    """Knobs shared by every suite; `trials=None` picks each suite's default."""

    trials: int | None = None
    seed: int = field(default_factory=lambda: get_default("seed"))
    spacing: float = field(default_factory=lambda: get_default("spacing"))
    levels: int = field(default_factory=lambda: get_default("random_levels"))
    support: float = field(default_factory=lambda: get_default("support"))

    def trials_for(self, suite_id: str) -> int:
        if self.trials is not None:
            return self.trials
        return get_default("suite_trials").get(suite_id, get_default("trials"))


def _class_a(s: SuiteSettings) -> list[PropertyReport]:
    return [run_class_a_suite(get_sigmoid(name), seed=s.seed) for name in SIGMOIDS]


def _interpolation(s: SuiteSettings) -> list[PropertyReport]:
    return [run_interpolation_suite(s.trials_for("interpolation"), s.seed, s.levels, s.support)]


def _sendograph_bounds(s: SuiteSettings) -> list[PropertyReport]:
    return [
        run_metric_properties(
            "sendograph", s.trials_for("sendograph-bounds"), s.spacing, s.seed, s.levels, s.support
        )
    ]


def _plane_inequalities(s: SuiteSettings) -> list[PropertyReport]:
    return [run_plane_inequality_suite(s.trials_for("plane-inequalities"), s.seed, s.support)]


def _endograph_convexity(s: SuiteSettings) -> list[PropertyReport]:
    trials = s.trials_for("endograph-convexity")
    return [
        run_level_combination_suite(trials, s.seed, s.levels, s.support),
        run_endograph_membership_suite(trials, s.seed, s.levels, s.support),
    ]


def _endograph_bounds(s: SuiteSettings) -> list[PropertyReport]:
    return [
        run_metric_properties(
            "endograph", s.trials_for("endograph-bounds"), s.spacing, s.seed, s.levels, s.support
        )
    ]


def _axioms(s: SuiteSettings) -> list[PropertyReport]:
    trials = s.trials_for("axioms")
    return [
        run_metric_axioms(name, trials, s.spacing, s.seed, s.levels, s.support)
        for name in METRICS
    ]


def _ordering(s: SuiteSettings) -> list[PropertyReport]:
    return [run_ordering_suite(s.trials_for("ordering"), s.spacing, s.seed, s.levels, s.support)]


def _jackson(s: SuiteSettings) -> list[PropertyReport]:
    reports = []
    level_example = get_entry("level-example")
    for name, ns in get_default("table_ns").items():
        sigma = get_sigmoid(name)
        for lam in get_default("table_lambdas"):
            reports.append(
                run_jackson_suite(
                    level_example,
                    sigma,
                    ns,
                    "level",
                    lam=lam,
                    epsilon=0.01 if lam >= 0.6 else None,
                    seed=s.seed,
                )
            )

    heaviside = get_sigmoid("heaviside")
    triangles = get_entry("triangular:0.25")
    reports.append(run_jackson_suite(triangles, heaviside, (4, 16, 64), "d_inf", seed=s.seed))
    reports.append(
        run_jackson_suite(
            triangles,
            heaviside,
            (4, 16),
            "sendograph",
            spacing=s.spacing,
            resolution=16,
            epsilon=0.05,
            seed=s.seed,
        )
    )
    reports.append(
        run_jackson_suite(
            get_entry("end-not-send:0.1"),
            heaviside,
            (2, 4, 8, 16),
            "endograph",
            spacing=s.spacing,
            resolution=4,
            seed=s.seed,
        )
    )
    reports.append(
        run_jackson_suite(get_entry("constant"), get_sigmoid("ramp"), (2, 8), "level", lam=0.6, seed=s.seed)
    )
    return reports


SUITES: dict[str, Callable[[SuiteSettings], list[PropertyReport]]] = {
    "class-a": _class_a,
    "interpolation": _interpolation,
    "sendograph-bounds": _sendograph_bounds,
    "plane-inequalities": _plane_inequalities,
    "endograph-convexity": _endograph_convexity,
    "endograph-bounds": _endograph_bounds,
    "axioms": _axioms,
    "ordering": _ordering,
    "jackson": _jackson,
}


def run_suites(
    suite_ids: Iterable[str] | None = None, settings: SuiteSettings | None = None
) -> Iterator[PropertyReport]:
    """
    Run the selected suites in order and yield their reports.

    Raises:
        DomainError: If a suite id is not registered.
    """
    settings = settings or SuiteSettings()
    suite_ids = list(suite_ids or SUITES)
    unknown = [s for s in suite_ids if s not in SUITES]
    if unknown:
        raise DomainError(
            f"unknown suite(s) {', '.join(unknown)} (choose from {', '.join(SUITES)})"
        )

    for suite_id in suite_ids:
        start = time.perf_counter()
        logger.info("running suite %s", suite_id)
        yield from SUITES[suite_id](settings)
        logger.debug("suite %s finished in %.2fs", suite_id, time.perf_counter() - start)
