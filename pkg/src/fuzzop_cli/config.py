"""Configuration defaults for fuzzop-cli."""

from dataclasses import dataclass, field
from typing import Any

from fuzzop_cli.errors import DomainError, NonPositiveM, NonPositiveSpacing

# Default settings
DEFAULTS = {
    # Fuzzy number representation
    "levels": 256,  # Sampled conversion resolution L
    "probe_levels": 1024,  # Analytic validation probe grid
    "tolerance": 1e-12,  # Monotonicity / identity tolerance
    # Hausdorff engine
    "spacing": 1e-3,  # Covering spacing g
    "hausdorff_method": "adaptive",
    "geometry_tolerance": 1e-9,
    # Experiments
    "x_grid": 10000,  # Uniform x points, both endpoints included
    "m": 1.0,
    "sigma": "ramp",
    "function": "level-example",
    "table_ns": {
        "ramp": (2, 6, 10, 50, 100, 1000),
        "heaviside": (10, 50, 100, 1000),
    },
    "table_lambdas": (0.50005, 0.6, 0.8),
    "convergence_ns": (2, 4, 8, 16, 32, 64),
    "convergence_lambda": 0.6,
    "metric_probes": 51,  # x probes for sendograph / endograph sup errors
    "jackson_probes": 11,  # x probes per n in the region-metric Jackson checks
    "modulus_probes": 2001,
    # Property suites
    "trials": 1000,
    "suite_trials": {  # Per-suite overrides of `trials`
        "interpolation": 100,
        "plane-inequalities": 100000,
        "axioms": 200,
    },
    "seed": 20240611,
    "support": 5.0,  # Random support box [-M, M]
    "random_levels": 16,
}


def get_default(key: str) -> Any:
    """
    Get a default configuration value.

    Args:
        key: The configuration key.

    Returns:
        The configuration value.
    """
    return DEFAULTS.get(key)


@dataclass(frozen=True)
class RunConfig:
    """Parsed experiment configuration shared by the CLI commands.

    Call `validate` before computing anything; it enforces the preconditions
    of every downstream operation.
    """

    command: str
    function: str = field(default_factory=lambda: get_default("function"))
    sigma: str = field(default_factory=lambda: get_default("sigma"))
    m: float = field(default_factory=lambda: get_default("m"))
    ns: tuple[int, ...] = ()
    lambdas: tuple[float, ...] = field(
        default_factory=lambda: get_default("table_lambdas")
    )
    x_grid: int = field(default_factory=lambda: get_default("x_grid"))
    spacing: float = field(default_factory=lambda: get_default("spacing"))
    output: str | None = None
    seed: int = field(default_factory=lambda: get_default("seed"))

    def validate(self) -> "RunConfig":
        """
        Check every field against the preconditions of the library.

        Returns:
            The config itself, for chaining.

        Raises:
            FuzzopError: On the first invalid field.
        """
        if self.m <= 0:
            raise NonPositiveM(f"m must be positive, got {self.m}")
        if self.spacing <= 0:
            raise NonPositiveSpacing(f"spacing must be positive, got {self.spacing}")
        if self.x_grid < 2:
            raise DomainError(f"x-grid needs at least 2 points, got {self.x_grid}")
        for n in self.ns:
            if n < 1:
                raise DomainError(f"n must be a positive integer, got {n}")
        for lam in self.lambdas:
            if not 0.0 <= lam <= 1.0:
                raise DomainError(f"level {lam} is outside [0, 1]")
        if self.seed < 0 or self.seed >= 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        return self
