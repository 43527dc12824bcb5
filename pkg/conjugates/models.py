"""Domain types for convex models, conjugates, area reports and checks.

None of these are database models: the app stores nothing. They live here
next to the Django ``TextChoices`` enumerations they use.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np
from django.db import models

from conjugates.exceptions import InvalidInterval, InvalidSamples

RealFunction = Callable[[float], float]


class DerivativeKind(models.TextChoices):
    """How a model evaluates f = F'."""

    ANALYTIC = "analytic", "Analytic"
    FINITE_DIFFERENCE = "finite_difference", "Finite Difference"


class QuadrantCase(models.TextChoices):
    """Sign pattern of a graph point (x, y = f(x))."""

    PP = "PP", "x >= 0, y >= 0"
    NN = "NN", "x <= 0, y <= 0"
    PN = "PN", "x > 0, y < 0"
    NP = "NP", "x < 0, y > 0"

    @classmethod
    def classify(cls, x: float, y: float) -> "QuadrantCase":
        """Classify a point; the axes belong to the same-sign cases."""
        if x >= 0 and y >= 0:
            return cls.PP
        if x <= 0 and y <= 0:
            return cls.NN
        if x > 0:
            return cls.PN
        return cls.NP

    @property
    def is_same_sign(self) -> bool:
        """True for PP and NN."""
        return self in (QuadrantCase.PP, QuadrantCase.NN)

    def swapped(self) -> "QuadrantCase":
        """Case of the mirrored point (y, x)."""
        mirror = {
            QuadrantCase.PN: QuadrantCase.NP,
            QuadrantCase.NP: QuadrantCase.PN,
        }
        return mirror.get(self, self)


class CheckName(models.TextChoices):
    """Named invariant checks reported by the CLI."""

    INVOLUTION = "involution", "Involution"
    DERIVATIVE = "derivative", "Conjugate Derivative"
    FENCHEL_YOUNG = "fenchel-young", "Fenchel-Young Equality"
    TANGENT = "tangent", "Tangent Duality"
    SHIFT = "shift", "Constant-Shift Covariance"
    AREA = "area", "Area Identity"
    ORACLE = "oracle", "Discrete Oracle"


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with lo < hi."""

    lo: float
    hi: float

    def __post_init__(self):
        """Reject degenerate, reversed or non-finite intervals."""
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise InvalidInterval(f"interval [{self.lo!r}, {self.hi!r}] is not finite")
        if not self.lo < self.hi:
            raise InvalidInterval(f"interval needs lo < hi, got [{self.lo!r}, {self.hi!r}]")

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """Parse ``a:b`` as used on the command line."""
        parts = text.split(":")
        if len(parts) != 2:
            raise InvalidInterval(f"expected 'a:b', got {text!r}")
        try:
            lo, hi = float(parts[0]), float(parts[1])
        except ValueError as exc:
            raise InvalidInterval(f"expected 'a:b' with numbers, got {text!r}") from exc
        return cls(lo, hi)

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def contains_strictly(self, x: float) -> bool:
        return self.lo < x < self.hi

    def interior(self, fraction: float) -> "Interval":
        """Centered sub-interval covering ``fraction`` of the width."""
        mid = (self.lo + self.hi) / 2
        half = self.width * fraction / 2
        return Interval(mid - half, mid + half)

    def grid(self, count: int) -> List[float]:
        """``count`` equally spaced points including both endpoints."""
        return [float(v) for v in np.linspace(self.lo, self.hi, count)]

    def as_list(self) -> List[float]:
        return [self.lo, self.hi]


@dataclass(frozen=True)
class ConvexModel:
    """A validated function F on a compact interval with f = F' increasing.

    Instances come from ``ModelService.make_model``; constructing one by hand
    skips validation.
    """

    domain: Interval
    F_eval: RealFunction
    f_eval: RealFunction
    f_range: Interval
    derivative_kind: DerivativeKind
    name: str = ""

    def __str__(self) -> str:
        return f"{self.name or 'F'} on {self.domain}"


@dataclass(frozen=True)
class ConjugatePoint:
    """One transform evaluation: x = g(y) and G(y) = x*y - F(x)."""

    y: float
    x: float
    G: float


@dataclass(frozen=True)
class AreaPoint:
    """Areas for one graph point (x, y = f(x))."""

    x: float
    y: float
    F_tilde: float
    G_tilde: float
    residual: float

    def as_dict(self) -> Dict[str, float]:
        return {
            "x": self.x,
            "y": self.y,
            "f_tilde": self.F_tilde,
            "g_tilde": self.G_tilde,
            "residual": self.residual,
        }


@dataclass(frozen=True)
class AreaReport:
    """Area decomposition of the rectangles under graph points of f.

    Same-sign reports carry ``A0 = None`` and residual F~ + G~ - x*y.
    Mixed-sign and anchored reports carry the constant A0 and residual
    a(x) - A0 with a(x) = -x*y + F~ + G~.
    """

    case: QuadrantCase
    x0: float
    y0: float
    points: Tuple[AreaPoint, ...]
    A0: Optional[float]
    c: float

    @property
    def max_abs_residual(self) -> float:
        return max(abs(p.residual) for p in self.points)


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Samples (x_i, F(x_i)) with x strictly increasing."""

    xs: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        """Freeze the arrays and validate ordering."""
        xs = np.array(self.xs, dtype=float)
        values = np.array(self.values, dtype=float)
        if xs.ndim != 1 or xs.shape != values.shape:
            raise InvalidSamples("samples need matching one-dimensional x and F arrays")
        if xs.size < 2:
            raise InvalidSamples(f"at least 2 samples are required, got {xs.size}")
        if not np.all(np.diff(xs) > 0):
            raise InvalidSamples("sample x values must be strictly increasing")
        xs.flags.writeable = False
        values.flags.writeable = False
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_pairs(cls, pairs: List[Tuple[float, float]]) -> "SampledFunction":
        return cls(
            xs=np.array([x for x, _ in pairs], dtype=float),
            values=np.array([v for _, v in pairs], dtype=float),
        )

    def __len__(self) -> int:
        return int(self.xs.size)

    def pairs(self) -> List[Tuple[float, float]]:
        return [(float(x), float(v)) for x, v in zip(self.xs, self.values)]


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named invariant check, serializable for the CLI."""

    check_name: str
    function: str
    domain: Interval
    max_abs_error: float
    tolerance: float
    points_evaluated: int
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.max_abs_error <= self.tolerance

    def as_dict(self) -> Dict[str, Any]:
        """Flat JSON-ready mapping with lowercase snake-case keys."""
        payload: Dict[str, Any] = {
            "check_name": self.check_name,
            "function": self.function,
            "domain": self.domain.as_list(),
            "max_abs_error": self.max_abs_error,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "points_evaluated": self.points_evaluated,
        }
        payload.update(self.extra)
        return payload
