"""Model service: validated convex models, derivatives and inversion."""

import logging
import math
import sys
from functools import partial
from typing import Optional

from scipy.optimize import brentq

from conjugates.conf import get_setting
from conjugates.exceptions import (
    ConjugateOutOfRange,
    DerivativeMismatch,
    NonFiniteValue,
    NonMonotoneDerivative,
    OutOfDomain,
)
from conjugates.models import ConvexModel, DerivativeKind, Interval, RealFunction

logger = logging.getLogger(__name__)

# Optimal-order step scale for first differences.
FD_STEP_SCALE = sys.float_info.epsilon ** (1.0 / 3.0)


class _Converged(Exception):
    """Raised from inside the root-finder callback once |f(x) - y| is small."""

    def __init__(self, x: float):
        super().__init__(x)
        self.x = x


class ModelService:
    """Service for building and querying convex models."""

    @staticmethod
    def make_model(
        F_eval: RealFunction,
        f_eval: Optional[RealFunction],
        domain: Interval,
        name: str = "",
    ) -> ConvexModel:
        """
        Build a validated model of F on a compact domain.

        Args:
            F_eval: Evaluator for F
            f_eval: Evaluator for f = F', or None to use finite differences
            domain: Compact x-range
            name: Label used in reports

        Returns:
            ConvexModel with f_range = [f(lo), f(hi)]

        Raises:
            NonFiniteValue: F or f is not finite on the validation grid
            NonMonotoneDerivative: f is not strictly increasing on the grid
            DerivativeMismatch: supplied f disagrees with differences of F
        """
        if f_eval is None:
            kind = DerivativeKind.FINITE_DIFFERENCE
            f_eval = partial(ModelService.finite_difference, F_eval, domain)
        else:
            kind = DerivativeKind.ANALYTIC

        grid = domain.grid(get_setting("VALIDATION_SAMPLES"))

        for x in grid:
            value = F_eval(x)
            if not math.isfinite(value):
                raise NonFiniteValue(x, value, "F")

        slopes = []
        for x in grid:
            slope = f_eval(x)
            if not math.isfinite(slope):
                raise NonFiniteValue(x, slope, "f")
            slopes.append(slope)

        for i in range(len(grid) - 1):
            if slopes[i] >= slopes[i + 1]:
                raise NonMonotoneDerivative(grid[i], grid[i + 1], slopes[i], slopes[i + 1])

        if kind == DerivativeKind.ANALYTIC:
            # Endpoints are skipped: a one-sided difference cannot follow a
            # derivative that is singular at the boundary.
            rtol = get_setting("DERIVATIVE_CROSSCHECK_RTOL")
            for x, slope in zip(grid[1:-1], slopes[1:-1]):
                differenced = ModelService.finite_difference(F_eval, domain, x)
                if abs(slope - differenced) > rtol * max(1.0, abs(slope)):
                    raise DerivativeMismatch(x, slope, differenced)

        model = ConvexModel(
            domain=domain,
            F_eval=F_eval,
            f_eval=f_eval,
            f_range=Interval(slopes[0], slopes[-1]),
            derivative_kind=kind,
            name=name,
        )
        logger.debug("Validated %s (%s derivative), f_range %s", model, kind.label, model.f_range)
        return model

    @staticmethod
    def finite_difference(F_eval: RealFunction, domain: Interval, x: float) -> float:
        """
        Second-order difference quotient of F at x.

        Centered where the stencil fits inside the domain, one-sided of the
        same order at the edges.
        """
        h = FD_STEP_SCALE * max(1.0, abs(x))
        h = min(h, domain.width / 4)
        if x - h >= domain.lo and x + h <= domain.hi:
            return (F_eval(x + h) - F_eval(x - h)) / (2 * h)
        if x - h < domain.lo:
            return (-3 * F_eval(x) + 4 * F_eval(x + h) - F_eval(x + 2 * h)) / (2 * h)
        return (3 * F_eval(x) - 4 * F_eval(x - h) + F_eval(x - 2 * h)) / (2 * h)

    @staticmethod
    def derivative(model: ConvexModel, x: float) -> float:
        """
        Evaluate f(x) = F'(x).

        Raises:
            OutOfDomain: x is outside the model's domain
        """
        ModelService.require_in_domain(model, x)
        return model.f_eval(x)

    @staticmethod
    def invert_derivative(model: ConvexModel, y: float) -> float:
        """
        Solve f(x) = y for x = g(y) inside the domain.

        Endpoint values of f_range map to the domain endpoints exactly.

        Raises:
            ConjugateOutOfRange: y is outside [f(lo), f(hi)]
        """
        if not model.f_range.contains(y):
            raise ConjugateOutOfRange(
                f"y = {y!r} is outside f_range {model.f_range} of {model}"
            )
        if y == model.f_range.lo:
            return model.domain.lo
        if y == model.f_range.hi:
            return model.domain.hi

        # Below |y| = 1 only the bracket width decides; an absolute residual
        # test there stops early wherever f is flat, e.g. x^3 near 0.
        check_residual = abs(y) >= 1.0
        ftol = get_setting("ROOT_FTOL") * abs(y)

        def residual(x: float) -> float:
            r = model.f_eval(x) - y
            if check_residual and abs(r) <= ftol:
                raise _Converged(x)
            return r

        try:
            return float(
                brentq(
                    residual,
                    model.domain.lo,
                    model.domain.hi,
                    xtol=get_setting("ROOT_XTOL"),
                    rtol=get_setting("ROOT_RTOL"),
                    maxiter=get_setting("ROOT_MAXITER"),
                )
            )
        except _Converged as done:
            return done.x

    @staticmethod
    def require_in_domain(model: ConvexModel, x: float) -> None:
        """Raise OutOfDomain unless lo <= x <= hi."""
        if not model.domain.contains(x):
            raise OutOfDomain(f"x = {x!r} is outside the domain of {model}")
