"""Example fuzzy-number-valued functions with known continuity behaviour.

Entries are addressable by id (`get_entry`), e.g. `level-example`,
`end-not-send`, `end-not-send:0.1`, `end-tail`, `triangular:0.25`,
`constant` and `crisp-identity`.
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from fuzzop_cli.errors import DomainError, NonPositiveWidth, UnknownFunction
from fuzzop_cli.fuzzy_core import FuzzyNumber, triangular
from fuzzop_cli.moduli import level_example_modulus
from fuzzop_cli.nn_operator import CONTINUITY_CLASSES, FuzzyFunction

__all__ = [
    "ENTRIES",
    "CorpusEntry",
    "constant_function",
    "crisp_identity",
    "example_end_not_send",
    "example_end_tail",
    "example_level_continuous",
    "get_entry",
    "smooth_triangular_family",
]


@dataclass(frozen=True, eq=False)
class CorpusEntry:
    """
    A named FuzzyFunction plus facts the library can check against.

    Attributes:
        id: Registry id.
        function: The function itself, with class and modulus metadata.
        facts: Closed-form distances keyed by a short description; each value
            is a callable of the arguments named in the key.
    """

    id: str
    function: FuzzyFunction
    facts: Mapping[str, Any] = field(default_factory=dict)

    @property
    def domain(self) -> tuple[float, float]:
        return self.function.a, self.function.b

    @property
    def classes(self) -> frozenset[str]:
        return self.function.classes


def _broadcast(x, lam) -> tuple[np.ndarray, np.ndarray]:
    x, lam = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(lam, dtype=float))
    return x, lam


def _linear(delta: float, lam: float | None = None) -> float:
    return delta


def example_level_continuous() -> CorpusEntry:
    """
    f on [0, 1] with f(t)^-(λ) = (λ - 1/2)^t above λ = 1/2, 0 below, and
    f(t)^+ = 1.

    At t = 0 the lower endpoint jumps from 0 to 1 at λ = 1/2. Each level
    varies continuously in t, but d_inf(f(t), f(0)) = 1 for every t > 0.
    """

    def levels(x, lam):
        x, lam = _broadcast(x, lam)
        # ε^0 = 1 reproduces f(0)^- = 1 above the jump
        lo = np.where(lam > 0.5, np.clip(lam - 0.5, 0.0, None) ** x, 0.0)
        return lo, np.ones_like(lo)

    function = FuzzyFunction(
        a=0.0,
        b=1.0,
        levels=levels,
        classes=frozenset({"level"}),
        analytic_modulus={
            "level": level_example_modulus,
            "d_inf": lambda delta: 1.0,
        },
        name="level-example",
    )
    return CorpusEntry(
        id="level-example",
        function=function,
        facts={"d_inf(t, 0)": lambda t: 1.0 if t > 0 else 0.0},
    )


def example_end_not_send(a: float = 0.0) -> CorpusEntry:
    """
    u_t = χ_[t, 1] on [a, 1], with u_0 = χ_{0}.

    For t, s > 0 every distance between u_t and u_s is |t - s|. At t = 0 the
    family breaks in all four senses: send(u_t) keeps the corner (1, 1),
    which lies at distance 1 from both send(u_0) and end(u_0), so D_S and
    D_E between u_t and u_0 are both 1.
    """
    if not 0.0 <= a < 1.0:
        raise DomainError(f"end-not-send needs 0 <= a < 1, got {a}")

    def levels(x, lam):
        x, lam = _broadcast(x, lam)
        return x.copy(), np.where(x > 0.0, 1.0, 0.0)

    if a > 0:
        classes = CONTINUITY_CLASSES
        moduli = {name: _linear for name in CONTINUITY_CLASSES}
    else:
        classes = frozenset()
        moduli = {name: (lambda delta, lam=None: 1.0) for name in CONTINUITY_CLASSES}

    entry_id = "end-not-send" if a == 0 else f"end-not-send:{a:g}"
    return CorpusEntry(
        id=entry_id,
        function=FuzzyFunction(
            a=float(a),
            b=1.0,
            levels=levels,
            classes=classes,
            analytic_modulus=moduli,
            name=entry_id,
        ),
        facts={
            "D_E(t, s), t, s > 0": lambda t, s: abs(t - s),
            "D_S(t, 0), t > 0": lambda t: 1.0,
            "D_E(t, 0), t > 0": lambda t: 1.0,
        },
    )


def example_end_tail() -> CorpusEntry:
    """
    w_t on [0, 1] with lo ≡ 0 and hi(λ) = max(0, 1 - λ/t), and w_0 = χ_{0}.

    send(w_t) is the triangle (0, 0), (1, 0), (0, t) plus the segment
    {0}×[t, 1]. Its far corner (1, 0) keeps D_S(w_t, w_0) = 1, while the
    endograph distance is attained on the hypotenuse where λ = 1 - λ/t,
    giving D_E(w_t, w_0) = t / (1 + t).
    """

    def levels(x, lam):
        x, lam = _broadcast(x, lam)
        safe = np.where(x > 0.0, x, 1.0)
        hi = np.where(x > 0.0, np.clip(1.0 - lam / safe, 0.0, None), 0.0)
        return np.zeros_like(hi), hi

    function = FuzzyFunction(
        a=0.0,
        b=1.0,
        levels=levels,
        classes=frozenset({"endograph"}),
        name="end-tail",
    )
    return CorpusEntry(
        id="end-tail",
        function=function,
        facts={
            "D_S(t, 0), t > 0": lambda t: 1.0,
            "D_E(t, 0), t > 0": lambda t: t / (1.0 + t),
        },
    )


def smooth_triangular_family(width: float = 0.25) -> CorpusEntry:
    """
    f(t) = triangular(t - w, t, t + w) on [0, 1], a pure translation.

    d_inf, level and D_S distances equal |t - s|; D_E is at most that, so
    ω(δ) = δ bounds all four moduli.

    Raises:
        NonPositiveWidth: If w <= 0.
    """
    width = float(width)
    if not width > 0:
        raise NonPositiveWidth(f"triangular width must be positive, got {width}")

    def levels(x, lam):
        x, lam = _broadcast(x, lam)
        spread = width * (1.0 - lam)
        return x - spread, x + spread

    entry_id = f"triangular:{width:g}"
    return CorpusEntry(
        id=entry_id,
        function=FuzzyFunction(
            a=0.0,
            b=1.0,
            levels=levels,
            classes=CONTINUITY_CLASSES,
            analytic_modulus={name: _linear for name in CONTINUITY_CLASSES},
            name=entry_id,
        ),
        facts={"d_inf(t, s)": lambda t, s: abs(t - s)},
    )


def constant_function(value: FuzzyNumber | None = None) -> CorpusEntry:
    """f(t) = value on [0, 1]; every modulus is 0. Defaults to triangular(0, 1, 2)."""
    value = value if value is not None else triangular(0.0, 1.0, 2.0)

    def levels(x, lam):
        x, lam = _broadcast(x, lam)
        return value.endpoints(lam)

    return CorpusEntry(
        id="constant",
        function=FuzzyFunction(
            a=0.0,
            b=1.0,
            levels=levels,
            classes=CONTINUITY_CLASSES,
            analytic_modulus={name: (lambda delta, lam=None: 0.0) for name in CONTINUITY_CLASSES},
            name="constant",
        ),
    )


def crisp_identity() -> CorpusEntry:
    """f(t) = crisp(t) on [0, 1]."""

    def levels(x, lam):
        x, lam = _broadcast(x, lam)
        return x.copy(), x.copy()

    return CorpusEntry(
        id="crisp-identity",
        function=FuzzyFunction(
            a=0.0,
            b=1.0,
            levels=levels,
            classes=CONTINUITY_CLASSES,
            analytic_modulus={name: _linear for name in CONTINUITY_CLASSES},
            name="crisp-identity",
        ),
        facts={"d_inf(t, s)": lambda t, s: abs(t - s)},
    )


ENTRIES: dict[str, Callable[..., CorpusEntry]] = {
    "level-example": example_level_continuous,
    "end-not-send": example_end_not_send,
    "end-tail": example_end_tail,
    "triangular": smooth_triangular_family,
    "constant": constant_function,
    "crisp-identity": crisp_identity,
}

# Entries whose factory takes one numeric parameter after a colon
_PARAMETRIC = {"end-not-send", "triangular"}


def get_entry(entry_id: str) -> CorpusEntry:
    """
    Resolve an id such as `level-example` or `triangular:0.25`.

    Raises:
        UnknownFunction: If the id or its parameter is not recognised.
    """
    name, _, param = entry_id.partition(":")
    factory = ENTRIES.get(name)
    if factory is None:
        raise UnknownFunction(
            f"unknown function '{entry_id}' (choose from {', '.join(ENTRIES)})"
        )
    if not param:
        return factory()
    if name not in _PARAMETRIC:
        raise UnknownFunction(f"function '{name}' takes no parameter")
    try:
        value = float(param)
    except ValueError:
        raise UnknownFunction(f"invalid parameter '{param}' for '{name}'") from None
    return factory(value)
