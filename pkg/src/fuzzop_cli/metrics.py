"""Distances between fuzzy numbers.

`d_inf` and `level_hausdorff` compare endpoint values. `D_S` and `D_E`
compare plane regions: the sendograph {(x, λ) : lo(λ) <= x <= hi(λ)} and
the endograph, which adds the line R×{0}. Region distances are certified:
the reported value never exceeds the true Hausdorff distance, and the true
distance never exceeds value + error_bound.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from fuzzop_cli.config import get_default
from fuzzop_cli.errors import DomainError, NonPositiveSpacing, UnknownMetric
from fuzzop_cli.fuzzy_core import (
    FuzzyNumber,
    LevelGrid,
    SampledFuzzyNumber,
    as_sampled,
)

__all__ = [
    "HAUSDORFF_METHODS",
    "METRICS",
    "HausdorffResult",
    "RegionGeometry",
    "D_E",
    "D_S",
    "d_inf",
    "directed_hausdorff",
    "distance",
    "distances",
    "get_metric",
    "hausdorff_intervals",
    "hausdorff_pairs",
    "hausdorff_regions",
    "level_hausdorff",
    "level_neighborhood_check",
    "point_region_distance",
    "region_contains",
    "sendograph",
]

logger = logging.getLogger(__name__)

HAUSDORFF_METHODS = ("adaptive", "dense")

# Upper limit on point × segment pairs held in memory at once
_CHUNK = 1 << 20
_MAX_ROUNDS = 80
# Region pairs refined together by the adaptive method
_BLOCK = 64


@dataclass(frozen=True)
class HausdorffResult:
    """A distance with its certified one-sided sampling error.

    value <= true distance <= value + error_bound.
    """

    value: float
    error_bound: float = 0.0
    evaluations: int = 0

    @property
    def upper(self) -> float:
        return self.value + self.error_bound


@dataclass(frozen=True, eq=False)
class RegionGeometry:
    """
    Sendograph of a sampled fuzzy number.

    Strip i is the trapezoid between levels λ_i and λ_{i+1}. The boundary is
    the closed polyline bottom edge, right chain hi(λ), top edge, left chain
    lo(λ), stored as segment start and end points.
    """

    levels: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    seg_start: np.ndarray
    seg_end: np.ndarray

    @property
    def strips(self) -> int:
        return self.levels.size - 1

    @property
    def vertices(self) -> np.ndarray:
        return self.seg_start


def sendograph(u: FuzzyNumber, resolution: int | None = None) -> RegionGeometry:
    """
    Build the region {(x, λ) : lo(λ) <= x <= hi(λ), λ in [0, 1]}.

    Analytic numbers are sampled first (`resolution` levels, default from
    config); crisp numbers give a degenerate vertical segment.
    """
    sampled = as_sampled(u, resolution)
    levels = sampled.grid.levels
    lo, hi = np.asarray(sampled.lo), np.asarray(sampled.hi)

    right = np.column_stack([hi, levels])
    left = np.column_stack([lo[::-1], levels[::-1]])
    ring = np.vstack([right, left, right[:1]])
    return RegionGeometry(
        levels=levels,
        lo=lo,
        hi=hi,
        seg_start=ring[:-1],
        seg_end=ring[1:],
    )


def _as_points(points) -> tuple[np.ndarray, np.ndarray, bool]:
    arr = np.asarray(points, dtype=float)
    single = arr.ndim == 1
    arr = np.atleast_2d(arr)
    if arr.shape[-1] != 2:
        raise DomainError(f"points must be (x, λ) pairs, got shape {arr.shape}")
    return arr[:, 0], arr[:, 1], single


class _Stack(NamedTuple):
    """Regions padded to a common strip and segment count, one per row.

    Padding repeats the last level and the last segment, which changes
    neither membership nor boundary distances.
    """

    levels: np.ndarray
    lo: np.ndarray
    hi: np.ndarray
    seg_start: np.ndarray
    direction: np.ndarray
    length2: np.ndarray
    keys: np.ndarray


def _pad(values: np.ndarray, size: int) -> np.ndarray:
    return np.concatenate([values, np.repeat(values[-1:], size - len(values), axis=0)])


def _stack(regions: Sequence[RegionGeometry]) -> _Stack:
    size = max(r.levels.size for r in regions)
    segments = max(len(r.seg_start) for r in regions)
    start = np.stack([_pad(r.seg_start, segments) for r in regions])
    levels = np.stack([_pad(r.levels, size) for r in regions])
    direction = np.stack([_pad(r.seg_end, segments) for r in regions]) - start
    return _Stack(
        levels=levels,
        lo=np.stack([_pad(r.lo, size) for r in regions]),
        hi=np.stack([_pad(r.hi, size) for r in regions]),
        seg_start=start,
        direction=direction,
        length2=np.einsum("rsk,rsk->rs", direction, direction),
        # Row r occupies [2r, 2r + 1], so one sorted array serves every row
        keys=(levels + 2.0 * np.arange(len(regions))[:, None]).ravel(),
    )


def _level_bounds(
    stack: _Stack, rows: np.ndarray, lams: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """np.interp of lo and hi at λ in [0, 1], each point against its own row."""
    width = stack.levels.shape[1]
    j = np.searchsorted(stack.keys, lams + 2.0 * rows, side="left") - rows * width
    j = np.clip(j, 1, width - 1)
    l0, l1 = stack.levels[rows, j - 1], stack.levels[rows, j]
    w = np.clip((lams - l0) / np.where(l1 > l0, l1 - l0, 1.0), 0.0, 1.0)
    lo0, hi0 = stack.lo[rows, j - 1], stack.hi[rows, j - 1]
    return lo0 + w * (stack.lo[rows, j] - lo0), hi0 + w * (stack.hi[rows, j] - hi0)


def _contains(
    stack: _Stack, rows: np.ndarray, xs: np.ndarray, lams: np.ndarray, tol: float
) -> np.ndarray:
    lo, hi = _level_bounds(stack, rows, np.clip(lams, 0.0, 1.0))
    return (lams >= -tol) & (lams <= 1.0 + tol) & (xs >= lo - tol) & (xs <= hi + tol)


def _segment_distances(
    stack: _Stack, rows: np.ndarray, xs: np.ndarray, lams: np.ndarray
) -> np.ndarray:
    out = np.empty(xs.size)
    chunk = max(1, _CHUNK // stack.seg_start.shape[1])
    for first in range(0, xs.size, chunk):
        part = slice(first, first + chunk)
        start, direction = stack.seg_start[rows[part]], stack.direction[rows[part]]
        length2 = stack.length2[rows[part]]
        degenerate = length2 <= 0.0

        px = xs[part, None] - start[..., 0]
        py = lams[part, None] - start[..., 1]
        safe = np.where(degenerate, 1.0, length2)
        t = np.clip((px * direction[..., 0] + py * direction[..., 1]) / safe, 0.0, 1.0)
        t = np.where(degenerate, 0.0, t)
        gaps = np.hypot(px - t * direction[..., 0], py - t * direction[..., 1])
        out[part] = gaps.min(axis=1)
    return out


def _distances(
    stack: _Stack, rows: np.ndarray, xs: np.ndarray, lams: np.ndarray
) -> np.ndarray:
    out = np.zeros(xs.size)
    outside = ~_contains(stack, rows, xs, lams, 0.0)
    if outside.any():
        out[outside] = _segment_distances(stack, rows[outside], xs[outside], lams[outside])
    return out


def region_contains(region: RegionGeometry, points, tol: float | None = None):
    """
    Strip-membership test for one (x, λ) point or an (N, 2) array of them.

    Args:
        region: Sendograph.
        points: A pair or an array of pairs.
        tol: Geometric tolerance (default from config).

    Returns:
        bool or np.ndarray: Membership, shaped like the input.
    """
    xs, lams, single = _as_points(points)
    tol = get_default("geometry_tolerance") if tol is None else tol
    inside = _contains(_stack([region]), np.zeros(xs.size, dtype=int), xs, lams, tol)
    return bool(inside[0]) if single else inside


def point_region_distance(points, region: RegionGeometry):
    """
    Euclidean distance from (x, λ) points to a region.

    Zero on the region; otherwise the exact minimum over the boundary
    segments. Accepts one pair or an (N, 2) array.
    """
    xs, lams, single = _as_points(points)
    out = _distances(_stack([region]), np.zeros(xs.size, dtype=int), xs, lams)
    return float(out[0]) if single else out


def hausdorff_intervals(a: Sequence[float], b: Sequence[float]) -> float:
    """Hausdorff distance of closed intervals: max(|a1 - a2|, |b1 - b2|)."""
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def level_hausdorff(u: FuzzyNumber, v: FuzzyNumber, lam: float) -> float:
    """
    d_H([u]^λ, [v]^λ).

    Raises:
        DomainError: If λ is outside [0, 1].
    """
    return hausdorff_intervals(u.level(lam), v.level(lam))


def d_inf(u: FuzzyNumber, v: FuzzyNumber, resolution: int | None = None) -> float:
    """
    Supremum metric sup_λ max(|u^- - v^-|, |u^+ - v^+|).

    Exact when both numbers are Sampled (probed on the lcm of their grids);
    otherwise the maximum over `resolution` + 1 uniform levels, a lower bound
    of the supremum.
    """
    if isinstance(u, SampledFuzzyNumber) and isinstance(v, SampledFuzzyNumber):
        grid = LevelGrid(math.lcm(u.grid.resolution, v.grid.resolution))
    else:
        grid = LevelGrid(resolution or get_default("probe_levels"))
    lams = grid.levels
    u_lo, u_hi = u.endpoints(lams)
    v_lo, v_hi = v.endpoints(lams)
    return float(max(np.max(np.abs(u_lo - v_lo)), np.max(np.abs(u_hi - v_hi))))


class _Cells(NamedTuple):
    """Parameter rectangles [s0, s1] × [t0, t1] inside strips of source `row`."""

    row: np.ndarray
    strip: np.ndarray
    s0: np.ndarray
    s1: np.ndarray
    t0: np.ndarray
    t1: np.ndarray

    def select(self, mask: np.ndarray) -> "_Cells":
        return _Cells(*(field[mask] for field in self))

    @staticmethod
    def concat(parts: Sequence["_Cells"]) -> "_Cells":
        return _Cells(*(np.concatenate(fields) for fields in zip(*parts)))


def _map(
    stack: _Stack, row: np.ndarray, strip: np.ndarray, s: np.ndarray, t: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Strip parametrisation (s, t) in [0, 1]² -> (x, λ)."""
    lam0 = stack.levels[row, strip]
    lam = lam0 + t * (stack.levels[row, strip + 1] - lam0)
    lo0, hi0 = stack.lo[row, strip], stack.hi[row, strip]
    lo = lo0 + t * (stack.lo[row, strip + 1] - lo0)
    hi = hi0 + t * (stack.hi[row, strip + 1] - hi0)
    return lo + s * (hi - lo), lam


def _objective(
    target: _Stack, rows: np.ndarray, xs: np.ndarray, lams: np.ndarray, endograph: bool
) -> np.ndarray:
    gaps = _distances(target, rows, xs, lams)
    # Distance to R×{0} is λ; the endograph keeps the nearer of the two
    return np.minimum(lams, gaps) if endograph else gaps


def _measure(source: _Stack, cells: _Cells):
    """Cell centres, circumradius, width, shear extent and top level."""
    sm, tm = 0.5 * (cells.s0 + cells.s1), 0.5 * (cells.t0 + cells.t1)
    cx, clam = _map(source, cells.row, cells.strip, sm, tm)

    x00, lam0 = _map(source, cells.row, cells.strip, cells.s0, cells.t0)
    x10, _ = _map(source, cells.row, cells.strip, cells.s1, cells.t0)
    x01, lam1 = _map(source, cells.row, cells.strip, cells.s0, cells.t1)
    x11, _ = _map(source, cells.row, cells.strip, cells.s1, cells.t1)

    # Cells map to trapezoids with horizontal sides, so the farthest point
    # from the centre is a corner
    radius = np.max(
        [
            np.hypot(x00 - cx, lam0 - clam),
            np.hypot(x10 - cx, lam0 - clam),
            np.hypot(x01 - cx, lam1 - clam),
            np.hypot(x11 - cx, lam1 - clam),
        ],
        axis=0,
    )
    width = np.maximum(x10 - x00, x11 - x01)
    extent = np.max([lam1 - lam0, np.abs(x01 - x00), np.abs(x11 - x10)], axis=0)
    corners = (x00, x10, x01, x11)
    return cx, clam, radius, width, extent, lam1, corners


def _inside(
    target: _Stack, rows: np.ndarray, corners: tuple[np.ndarray, ...], lam_top: np.ndarray
) -> np.ndarray:
    """Conservative test that whole cells lie in the target sendograph."""
    x00, x10, x01, x11 = corners
    # lo is nondecreasing and hi nonincreasing, so the top level is the tightest
    lo_top, hi_top = _level_bounds(target, rows, lam_top)
    return (lo_top <= np.minimum(x00, x01)) & (hi_top >= np.maximum(x10, x11))


def _split(cells: _Cells, width: np.ndarray, extent: np.ndarray) -> _Cells:
    split_s = width > 0.5 * extent
    split_t = extent > 0.5 * width
    sm, tm = 0.5 * (cells.s0 + cells.s1), 0.5 * (cells.t0 + cells.t1)
    s_mid = np.where(split_s, sm, cells.s1)
    t_mid = np.where(split_t, tm, cells.t1)

    low_left = _Cells(cells.row, cells.strip, cells.s0, s_mid, cells.t0, t_mid)
    low_right = _Cells(cells.row, cells.strip, sm, cells.s1, cells.t0, t_mid).select(split_s)
    high_left = _Cells(cells.row, cells.strip, cells.s0, s_mid, tm, cells.t1).select(split_t)
    high_right = _Cells(cells.row, cells.strip, sm, cells.s1, tm, cells.t1).select(split_s & split_t)
    return _Cells.concat([low_left, low_right, high_left, high_right])


def _whole_strips(sources: Sequence[RegionGeometry]) -> _Cells:
    counts = np.array([r.strips for r in sources])
    row = np.repeat(np.arange(len(sources)), counts)
    strip = np.concatenate([np.arange(c) for c in counts])
    zeros, ones = np.zeros(strip.size), np.ones(strip.size)
    return _Cells(row, strip, zeros, ones, zeros.copy(), ones.copy())


def _adaptive(
    sources: Sequence[RegionGeometry],
    targets: Sequence[RegionGeometry],
    tol: float,
    endograph: bool,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Branch and bound for H*(sources[i], targets[i]), all rows in one loop.

    Each row is pruned against its own running maximum, so the result of a
    row does not depend on what else is in the batch.

    Returns:
        Per-row best value, evaluation count and error bound.
    """
    src, tgt = _stack(sources), _stack(targets)
    count = len(sources)

    vertex_rows = np.repeat(np.arange(count), src.seg_start.shape[1])
    vx, vlam = src.seg_start[..., 0].ravel(), src.seg_start[..., 1].ravel()
    best = np.full(count, -np.inf)
    np.maximum.at(best, vertex_rows, _objective(tgt, vertex_rows, vx, vlam, endograph))
    evaluations = np.array([len(r.vertices) for r in sources])
    bound = np.full(count, tol)

    cells = _whole_strips(sources)
    rounds = 0
    while cells.row.size:
        rounds += 1
        cx, clam, radius, width, extent, lam_top, corners = _measure(src, cells)
        values = _objective(tgt, cells.row, cx, clam, endograph)
        evaluations += np.bincount(cells.row, minlength=count)
        np.maximum.at(best, cells.row, values)

        # The objective is 1-Lipschitz, so a cell cannot exceed value + radius
        upper = values + radius
        if endograph:
            upper = np.minimum(upper, lam_top)
        upper = np.where(_inside(tgt, cells.row, corners, lam_top), 0.0, upper)

        open_cells = upper > best[cells.row] + tol
        if rounds >= _MAX_ROUNDS and open_cells.any():
            stuck = cells.row[open_cells]
            logger.warning(
                "Hausdorff refinement stopped after %d rounds with %d open cells",
                rounds,
                int(open_cells.sum()),
            )
            # Report a bound that still covers the unresolved cells
            np.maximum.at(bound, stuck, upper[open_cells] - best[stuck])
            break
        cells = _split(cells.select(open_cells), width[open_cells], extent[open_cells])

    logger.debug("adaptive sup over %d rows after %d rounds", count, rounds)
    return best, evaluations, bound


def _dense(
    source: RegionGeometry, target: RegionGeometry, spacing: float, endograph: bool
) -> tuple[float, int, float]:
    src, tgt = _stack([source]), _stack([target])
    vx, vlam = source.vertices[:, 0], source.vertices[:, 1]
    best = float(np.max(_objective(tgt, np.zeros(vx.size, dtype=int), vx, vlam, endograph)))
    evaluations = vx.size

    levels, lo, hi = source.levels, source.lo, source.hi
    for i in range(source.strips):
        extent = max(levels[i + 1] - levels[i], abs(lo[i + 1] - lo[i]), abs(hi[i + 1] - hi[i]))
        width = max(hi[i] - lo[i], hi[i + 1] - lo[i + 1])
        # Sub-cells at most g/2 in every direction keep each centre within
        # g·√2/2 of the whole cell
        kt = max(1, math.ceil(2.0 * extent / spacing))
        ks = max(1, math.ceil(2.0 * width / spacing))
        t = (np.arange(kt) + 0.5) / kt
        s = (np.arange(ks) + 0.5) / ks
        ss, tt = np.meshgrid(s, t)
        rows = np.zeros(ss.size, dtype=int)
        xs, lams = _map(src, rows, np.full(ss.size, i), ss.ravel(), tt.ravel())
        best = max(best, float(np.max(_objective(tgt, rows, xs, lams, endograph))))
        evaluations += xs.size

    logger.debug("dense sup %.6g, %d evaluations", best, evaluations)
    return best, evaluations, spacing * math.sqrt(2.0) / 2.0


def _check_spacing(spacing: float | None, method: str | None) -> tuple[float, str]:
    spacing = get_default("spacing") if spacing is None else float(spacing)
    if not spacing > 0:
        raise NonPositiveSpacing(f"spacing must be positive, got {spacing}")
    method = method or get_default("hausdorff_method")
    if method not in HAUSDORFF_METHODS:
        raise DomainError(
            f"unknown Hausdorff method '{method}' (choose from {', '.join(HAUSDORFF_METHODS)})"
        )
    return spacing, method


def directed_hausdorff(
    source: RegionGeometry,
    target: RegionGeometry,
    spacing: float | None = None,
    endograph: bool = False,
    method: str | None = None,
) -> HausdorffResult:
    """
    One-sided distance H*(A, B) = sup_{p in A} d(p, B).

    With `endograph=True` both regions stand for their endographs: points of
    R×{0} contribute nothing, and d(p, end(B)) = min(λ, d(p, B)).

    Args:
        source: Region A, the side whose supremum is sampled.
        target: Region B, measured exactly.
        spacing: Covering spacing g; error_bound is g·√2/2.
        endograph: Compare endographs instead of sendographs.
        method: "adaptive" (branch and bound) or "dense" (full covering).

    Raises:
        NonPositiveSpacing: If g <= 0.
    """
    spacing, method = _check_spacing(spacing, method)
    if method == "dense":
        value, evaluations, bound = _dense(source, target, spacing, endograph)
        return HausdorffResult(value=value, error_bound=bound, evaluations=evaluations)
    best, evaluations, bound = _adaptive([source], [target], spacing * math.sqrt(2.0) / 2.0, endograph)
    return HausdorffResult(value=float(best[0]), error_bound=float(bound[0]), evaluations=int(evaluations[0]))


def hausdorff_pairs(
    pairs: Sequence[tuple[RegionGeometry, RegionGeometry]],
    spacing: float | None = None,
    method: str | None = None,
    endograph: bool = False,
) -> list[HausdorffResult]:
    """
    d_H(A, B) for many region pairs, both directions refined together.

    The adaptive method runs one branch and bound per block of pairs instead
    of two per pair; each result matches what `hausdorff_regions` gives for
    the pair alone.

    Raises:
        NonPositiveSpacing: If g <= 0.
    """
    spacing, method = _check_spacing(spacing, method)
    if method == "dense":
        results = []
        for a, b in pairs:
            forward = directed_hausdorff(a, b, spacing, endograph, method)
            backward = directed_hausdorff(b, a, spacing, endograph, method)
            results.append(
                HausdorffResult(
                    value=max(forward.value, backward.value),
                    error_bound=max(forward.error_bound, backward.error_bound),
                    evaluations=forward.evaluations + backward.evaluations,
                )
            )
        return results

    tol = spacing * math.sqrt(2.0) / 2.0
    results = []
    for first in range(0, len(pairs), _BLOCK):
        block = pairs[first : first + _BLOCK]
        size = len(block)
        sources = [a for a, _ in block] + [b for _, b in block]
        targets = [b for _, b in block] + [a for a, _ in block]
        best, evaluations, bound = _adaptive(sources, targets, tol, endograph)
        results.extend(
            HausdorffResult(
                value=float(max(best[i], best[size + i])),
                error_bound=float(max(bound[i], bound[size + i])),
                evaluations=int(evaluations[i] + evaluations[size + i]),
            )
            for i in range(size)
        )
    return results


def hausdorff_regions(
    a: RegionGeometry,
    b: RegionGeometry,
    spacing: float | None = None,
    method: str | None = None,
    endograph: bool = False,
) -> HausdorffResult:
    """
    d_H(A, B) = max(H*(A, B), H*(B, A)) with a certified error bound.

    Raises:
        NonPositiveSpacing: If g <= 0.
    """
    return hausdorff_pairs([(a, b)], spacing, method, endograph)[0]


def D_S(
    u: FuzzyNumber,
    v: FuzzyNumber,
    spacing: float | None = None,
    method: str | None = None,
    resolution: int | None = None,
) -> HausdorffResult:
    """Sendograph metric d_H(send(u), send(v))."""
    return hausdorff_regions(
        sendograph(u, resolution), sendograph(v, resolution), spacing, method
    )


def D_E(
    u: FuzzyNumber,
    v: FuzzyNumber,
    spacing: float | None = None,
    method: str | None = None,
    resolution: int | None = None,
) -> HausdorffResult:
    """Endograph metric d_H(end(u), end(v)), never larger than D_S."""
    return hausdorff_regions(
        sendograph(u, resolution),
        sendograph(v, resolution),
        spacing,
        method,
        endograph=True,
    )


def _d_inf_result(u: FuzzyNumber, v: FuzzyNumber, **_) -> HausdorffResult:
    return HausdorffResult(value=d_inf(u, v))


METRICS: dict[str, Callable[..., HausdorffResult]] = {
    "d_inf": _d_inf_result,
    "sendograph": D_S,
    "endograph": D_E,
}


def get_metric(name: str) -> Callable[..., HausdorffResult]:
    """
    Look up a metric by name; every metric returns a HausdorffResult.

    Raises:
        UnknownMetric: If the name is not registered.
    """
    try:
        return METRICS[name]
    except KeyError:
        raise UnknownMetric(
            f"unknown metric '{name}' (choose from {', '.join(METRICS)})"
        ) from None


def distance(
    name: str, u: FuzzyNumber, v: FuzzyNumber, spacing: float | None = None
) -> HausdorffResult:
    """Evaluate the metric registered under `name`."""
    return get_metric(name)(u, v, spacing=spacing)


def distances(
    name: str,
    pairs: Sequence[tuple[FuzzyNumber, FuzzyNumber]],
    spacing: float | None = None,
    resolution: int | None = None,
) -> list[HausdorffResult]:
    """
    Evaluate the metric registered under `name` on many (u, v) pairs.

    Region metrics build each distinct number's sendograph once and refine
    all pairs in shared batches.

    Raises:
        UnknownMetric: If the name is not registered.
    """
    metric = get_metric(name)
    if name == "d_inf":
        return [metric(u, v) for u, v in pairs]

    regions: dict[int, RegionGeometry] = {}

    def region(u: FuzzyNumber) -> RegionGeometry:
        if id(u) not in regions:
            regions[id(u)] = sendograph(u, resolution)
        return regions[id(u)]

    return hausdorff_pairs(
        [(region(u), region(v)) for u, v in pairs], spacing, endograph=name == "endograph"
    )


def level_neighborhood_check(
    f,
    g,
    levels: Sequence[float],
    epsilon: float,
    xs: Sequence[float],
) -> bool:
    """
    Test g(x) ∈ V(f(x), {λ_j}, ε) at every probe x.

    True iff the largest level Hausdorff distance over `xs` and `levels` is
    below ε.

    Raises:
        DomainError: If ε <= 0 or a level is outside [0, 1].
    """
    if not epsilon > 0:
        raise DomainError(f"epsilon must be positive, got {epsilon}")
    lams = np.asarray(levels, dtype=float)
    if np.any((lams < 0.0) | (lams > 1.0)):
        raise DomainError(f"levels must lie in [0, 1], got {lams.tolist()}")
    xs = np.asarray(xs, dtype=float)

    f_lo, f_hi = f.level_arrays(xs[None, :], lams[:, None])
    g_lo, g_hi = g.level_arrays(xs[None, :], lams[:, None])
    worst = max(np.max(np.abs(f_lo - g_lo), initial=0.0), np.max(np.abs(f_hi - g_hi), initial=0.0))
    return bool(worst < epsilon)
