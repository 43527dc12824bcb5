"""Oracle service: brute-force discrete conjugates of sampled data.

Shares no code path with the transform service: no root finding, no
derivatives of the model, only the maximum of x_i*y - F_i over samples.
"""

import logging
from typing import Sequence

import numpy as np

from conjugates.conf import get_setting
from conjugates.exceptions import ConjugateOutOfRange, InvalidSamples
from conjugates.models import CheckName, CheckReport, ConvexModel, SampledFunction
from conjugates.services.transform import TransformService

logger = logging.getLogger(__name__)

BOUND_SLACK = 1e-9


class OracleService:
    """Service for the discrete Legendre-Fenchel oracle."""

    @staticmethod
    def sample_model(model: ConvexModel, n: int) -> SampledFunction:
        """
        Sample F at n equally spaced points, endpoints included.

        Raises:
            InvalidSamples: n < 2
        """
        if n < 2:
            raise InvalidSamples(f"need at least 2 samples, got {n}")
        xs = np.linspace(model.domain.lo, model.domain.hi, n)
        values = np.array([model.F_eval(float(x)) for x in xs])
        return SampledFunction(xs=xs, values=values)

    @staticmethod
    def discrete_conjugate(samples: SampledFunction, y: float) -> float:
        """Maximum of x_i*y - F_i over the samples."""
        candidates = samples.xs * y - samples.values
        return float(candidates[_best_index(candidates)])

    @staticmethod
    def discrete_maximizer(samples: SampledFunction, y: float) -> float:
        """The sample x_i attaining the discrete conjugate at y."""
        candidates = samples.xs * y - samples.values
        return float(samples.xs[_best_index(candidates)])

    @staticmethod
    def error_bound(model: ConvexModel, n: int) -> float:
        """
        Sampling error bound M*h^2/8 + slack for n uniform samples.

        M is the largest difference-quotient estimate of f' on the
        validation grid.
        """
        grid = np.linspace(model.domain.lo, model.domain.hi, get_setting("VALIDATION_SAMPLES"))
        slopes = np.array([model.f_eval(float(x)) for x in grid])
        curvature = float(np.max(np.gradient(slopes, grid)))
        h = model.domain.width / (n - 1)
        return curvature * h * h / 8 + BOUND_SLACK

    @staticmethod
    def oracle_compare(model: ConvexModel, n: int, y_grid: Sequence[float]) -> CheckReport:
        """
        Compare conjugate_point against the discrete oracle on y_grid.

        Args:
            model: Validated model
            n: Number of uniform samples of F
            y_grid: Conjugate arguments strictly inside f_range

        Returns:
            CheckReport whose tolerance is the M*h^2/8 + 1e-9 bound

        Raises:
            ConjugateOutOfRange: some y is not strictly inside f_range
        """
        for y in y_grid:
            if not model.f_range.contains_strictly(y):
                raise ConjugateOutOfRange(
                    f"oracle grid value y = {y!r} is not inside f_range {model.f_range}"
                )
        samples = OracleService.sample_model(model, n)
        errors = [
            abs(TransformService.conjugate_point(model, y).G - OracleService.discrete_conjugate(samples, y))
            for y in y_grid
        ]
        report = CheckReport(
            check_name=CheckName.ORACLE.value,
            function=model.name,
            domain=model.domain,
            max_abs_error=max(errors) if errors else 0.0,
            tolerance=OracleService.error_bound(model, n),
            points_evaluated=len(errors),
            extra={"samples": n},
        )
        logger.info("Oracle check for %s with %d samples: %.3e", model, n, report.max_abs_error)
        return report


def _best_index(candidates: np.ndarray) -> int:
    # argmax returns the first maximum, so ties go to the smallest x_i.
    return int(np.argmax(candidates))
