"""Neural-network interpolation operator for fuzzy-number-valued functions.

For f: [a, b] -> fuzzy numbers, a uniform node grid x_k = a + k·h and a
sigmoid σ in A(m):

    S_n(f, x) = Σ_k φ((2m/h)(x - x_k)) · f(x_k)

The weights are nonnegative and sum to one, so every level of S_n(f, x) is
the weighted interval combination of the node levels.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field

import numpy as np

from fuzzop_cli.errors import DomainError
from fuzzop_cli.fuzzy_core import FuzzyNumber, convex_combine, from_endpoint_pair
from fuzzop_cli.sigmoid import SigmoidalFunction

__all__ = [
    "CONTINUITY_CLASSES",
    "FuzzyFunction",
    "NodeGrid",
    "apply",
    "apply_curve",
    "apply_levels",
    "approximant",
    "weights",
]

logger = logging.getLogger(__name__)

CONTINUITY_CLASSES = frozenset({"d_inf", "level", "sendograph", "endograph"})

LevelFn = Callable[[np.ndarray, np.ndarray], "tuple[np.ndarray, np.ndarray]"]


@dataclass(frozen=True)
class NodeGrid:
    """Uniform nodes x_k = a + k·h on [a, b], h = (b - a) / n."""

    a: float
    b: float
    n: int

    def __post_init__(self) -> None:
        if not self.a < self.b:
            raise DomainError(f"node grid needs a < b, got [{self.a}, {self.b}]")
        if self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n}")

    @property
    def h(self) -> float:
        return (self.b - self.a) / self.n

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.n + 1)


@dataclass(frozen=True, eq=False)
class FuzzyFunction:
    """
    A map from [a, b] into fuzzy numbers, given level-wise.

    Attributes:
        a, b: Domain.
        levels: Closure (x, λ) -> (f(x)^-(λ), f(x)^+(λ)); x and λ are numpy
            arrays that broadcast against each other.
        classes: Continuity classes the function belongs to, drawn from
            CONTINUITY_CLASSES.
        analytic_modulus: Closed-form moduli keyed by continuity class. The
            `level` entry takes (δ, λ); the metric entries take δ.
        name: Label used in reports.
    """

    a: float
    b: float
    levels: LevelFn
    classes: frozenset[str] = frozenset()
    analytic_modulus: Mapping[str, Callable[..., float]] = field(default_factory=dict)
    name: str = "f"

    def __post_init__(self) -> None:
        unknown = set(self.classes) - CONTINUITY_CLASSES
        if unknown:
            raise DomainError(
                f"unknown continuity class(es) {', '.join(sorted(unknown))} "
                f"(choose from {', '.join(sorted(CONTINUITY_CLASSES))})"
            )

    def check_domain(self, xs) -> np.ndarray:

        """
        Return `xs` as a float array, rejecting points outside [a, b].

        Raises:
            DomainError: Carrying the index of the first offending point.
        """
        xs = np.asarray(xs, dtype=float)
        bad = np.flatnonzero(~((xs >= self.a) & (xs <= self.b)))
        if bad.size:
            i = int(bad[0])
            raise DomainError(
                f"x={xs.flat[i]} is outside [{self.a}, {self.b}]", index=i
            )
        return xs

    def eval(self, x: float) -> FuzzyNumber:
        """The fuzzy number f(x), as a validated Analytic number."""
        x = float(self.check_domain(x))
        return from_endpoint_pair(lambda lams: self.levels(np.asarray(x), lams))

    def level_arrays(self, xs, lam) -> tuple[np.ndarray, np.ndarray]:
        """Endpoints of f(x) at level λ for every x in `xs`."""
        xs = self.check_domain(xs)
        lo, hi = self.levels(xs, np.asarray(lam, dtype=float))
        shape = np.broadcast_shapes(xs.shape, np.shape(lam))
        return (
            np.broadcast_to(np.asarray(lo, dtype=float), shape),
            np.broadcast_to(np.asarray(hi, dtype=float), shape),
        )


def _node_coordinate(grid: NodeGrid, xs: np.ndarray) -> np.ndarray:
    """(x - a) / h, snapped to the nearest integer within a few ulps."""
    u = (xs - grid.a) / grid.h
    # x_k computed as a + k·h may land a few ulps off its own index
    nearest = np.rint(u)
    return np.where(np.abs(u - nearest) <= 8 * np.finfo(float).eps * max(1, grid.n), nearest, u)


def _bracket(
    grid: NodeGrid, sigma: SigmoidalFunction, xs: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Indices (N, 2) of the nodes bracketing each x and their weights (N, 2)."""
    u = _node_coordinate(grid, xs)
    k = np.clip(np.floor(u), 0, grid.n - 1).astype(int)
    y = 2.0 * sigma.m * (u - k)

    # φ(y) + φ(y - 2m) shares σ(y - m), so each pair sums to one exactly
    upper = np.asarray(sigma(y + sigma.m), dtype=float)
    middle = np.asarray(sigma(y - sigma.m), dtype=float)
    lower = np.asarray(sigma(y - 3.0 * sigma.m), dtype=float)

    idx = np.stack([k, k + 1], axis=-1)
    w = np.stack([upper - middle, middle - lower], axis=-1)
    return idx, w


def _dense_weights(grid: NodeGrid, sigma: SigmoidalFunction, xs: np.ndarray) -> np.ndarray:
    """Full (N, n+1) weight matrix, no support culling."""
    u = _node_coordinate(grid, xs)
    scaled = 2.0 * sigma.m * (u[:, None] - np.arange(grid.n + 1)[None, :])
    return np.asarray(sigma.bump(scaled), dtype=float)


def _check_points(grid: NodeGrid, xs) -> np.ndarray:
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    bad = np.flatnonzero(~((xs >= grid.a) & (xs <= grid.b)))
    if bad.size:
        i = int(bad[0])
        raise DomainError(f"x={xs[i]} is outside [{grid.a}, {grid.b}]", index=i)
    return xs


def weights(
    grid: NodeGrid, sigma: SigmoidalFunction, x: float, cull: bool = True
) -> list[tuple[int, float]]:
    """
    Nonzero operator coefficients c_k = φ((2m/h)(x - x_k)) at a point.

    Only nodes with |x - x_k| < h can carry weight, so the culled path looks
    at the two nodes bracketing x. `cull=False` evaluates all n+1 terms.

    Args:
        grid: Node grid.
        sigma: Sigmoidal function in A(m).
        x: Point in [a, b].
        cull: Restrict the evaluation to the bracketing nodes.

    Returns:
        list[tuple[int, float]]: (k, c_k) pairs with c_k > 0, ordered by k.

    Raises:
        DomainError: If x is outside [a, b].
    """
    xs = _check_points(grid, x)
    if cull:
        idx, w = _bracket(grid, sigma, xs)
        pairs = zip(idx[0].tolist(), w[0].tolist())
    else:
        pairs = enumerate(_dense_weights(grid, sigma, xs)[0].tolist())
    return [(int(k), float(c)) for k, c in pairs if c > 0.0]


def apply(
    f: FuzzyFunction, grid: NodeGrid, sigma: SigmoidalFunction, x: float
) -> FuzzyNumber:
    """
    Evaluate S_n(f, x) as a fuzzy number.

    Raises:
        DomainError: If x is outside [a, b].
    """
    pairs = weights(grid, sigma, x)
    nodes = grid.nodes
    return convex_combine(
        [c for _, c in pairs], [f.eval(float(nodes[k])) for k, _ in pairs]
    )


def apply_curve(
    f: FuzzyFunction, grid: NodeGrid, sigma: SigmoidalFunction, xs: Sequence[float]
) -> list[FuzzyNumber]:
    """
    Evaluate S_n(f, x) at every point of `xs`, preserving order.

    Raises:
        DomainError: Carrying the index of the first point outside [a, b].
    """
    xs = np.asarray(xs, dtype=float).ravel()
    if xs.size == 0:
        return []
    xs = _check_points(grid, xs)

    node_values = [f.eval(float(x)) for x in grid.nodes]
    idx, w = _bracket(grid, sigma, xs)
    results = []
    for row_idx, row_w in zip(idx, w):
        keep = row_w > 0.0
        results.append(
            convex_combine(row_w[keep], [node_values[k] for k in row_idx[keep]])
        )
    return results


def apply_levels(
    f: FuzzyFunction,
    grid: NodeGrid,
    sigma: SigmoidalFunction,
    xs,
    lam,
    cull: bool = True,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Vectorized level endpoints of S_n(f, x).

    Args:
        f: Function to approximate.
        grid: Node grid on the domain of f.
        sigma: Sigmoidal function in A(m).
        xs: Points in [a, b].
        lam: Level(s), broadcasting against `xs`.
        cull: Use the two-node bracket (True) or the full sum (False).

    Returns:
        tuple[np.ndarray, np.ndarray]: (lo, hi) shaped like broadcast(xs, lam).
    """
    xs_b, lam_b = np.broadcast_arrays(np.asarray(xs, dtype=float), np.asarray(lam, dtype=float))
    shape = xs_b.shape
    flat_x = _check_points(grid, xs_b.ravel())
    flat_lam = lam_b.ravel()

    if cull:
        idx, w = _bracket(grid, sigma, flat_x)
        node_lo, node_hi = f.level_arrays(grid.nodes[idx], flat_lam[:, None])
    else:
        w = _dense_weights(grid, sigma, flat_x)
        node_lo, node_hi = f.level_arrays(grid.nodes[None, :], flat_lam[:, None])

    lo = np.sum(w * node_lo, axis=-1)
    hi = np.sum(w * node_hi, axis=-1)
    return lo.reshape(shape), hi.reshape(shape)


def approximant(
    f: FuzzyFunction, grid: NodeGrid, sigma: SigmoidalFunction
) -> FuzzyFunction:
    """S_n(f, ·) as a FuzzyFunction on the same domain."""
    if (grid.a, grid.b) != (f.a, f.b):
        raise DomainError(
            f"node grid [{grid.a}, {grid.b}] does not match the domain [{f.a}, {f.b}]"
        )
    return FuzzyFunction(
        a=f.a,
        b=f.b,
        levels=lambda x, lam: apply_levels(f, grid, sigma, x, lam),
        name=f"S_{grid.n},{sigma.name}({f.name})",
    )
