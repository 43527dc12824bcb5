"""Check service: named invariant checks producing CheckReports."""

import logging
from functools import partial
from typing import Optional, Sequence, Tuple

from conjugates.conf import check_tolerance, get_setting
from conjugates.exceptions import NoAxisIntersection
from conjugates.models import AreaReport, CheckName, CheckReport, ConvexModel, QuadrantCase
from conjugates.services.areas import AreaService
from conjugates.services.modeling import ModelService
from conjugates.services.oracle import OracleService
from conjugates.services.transform import TransformService

logger = logging.getLogger(__name__)

DEFAULT_SHIFTS = (-3.0, 1.0, 7.5)
AREA_POINTS = 5


def _shifted(F_eval, c: float, x: float) -> float:
    return F_eval(x) + c


class CheckService:
    """Service running the transform's invariants over interior grids."""

    @staticmethod
    def interior_grid(model: ConvexModel, count: int, conjugate_side: bool = False):
        """Equally spaced points over the inner part of the domain or f_range."""
        span = model.f_range if conjugate_side else model.domain
        return span.interior(get_setting("INTERIOR_FRACTION")).grid(count)

    @staticmethod
    def involution(model: ConvexModel, tol: Optional[float] = None, points: int = 201) -> CheckReport:
        """Compare the double transform with F on the interior grid."""
        tol = check_tolerance(CheckName.INVOLUTION.value) if tol is None else tol
        double = TransformService.double_transform(model)
        grid = CheckService.interior_grid(model, points)
        error = max(abs(double.F_eval(x) - model.F_eval(x)) for x in grid)
        return _report(CheckName.INVOLUTION, model, error, tol, len(grid))

    @staticmethod
    def conjugate_derivative(
        model: ConvexModel, tol: Optional[float] = None, points: int = 101
    ) -> CheckReport:
        """Compare differenced conjugate values with g = invert_derivative."""
        tol = check_tolerance(CheckName.DERIVATIVE.value) if tol is None else tol
        conjugate = TransformService.conjugate_model(model)
        grid = CheckService.interior_grid(model, points, conjugate_side=True)
        error = max(
            abs(
                ModelService.finite_difference(conjugate.F_eval, conjugate.domain, y)
                - ModelService.invert_derivative(model, y)
            )
            for y in grid
        )
        return _report(CheckName.DERIVATIVE, model, error, tol, len(grid))

    @staticmethod
    def fenchel_young(model: ConvexModel, tol: Optional[float] = None, points: int = 201) -> CheckReport:
        """
        Young's equality case on the interior grid.

        The reported error is scaled: residual / max(1, |x*f(x)|).
        """
        tol = check_tolerance(CheckName.FENCHEL_YOUNG.value) if tol is None else tol
        grid = CheckService.interior_grid(model, points)
        error = max(
            TransformService.fenchel_young_residual(model, x) / max(1.0, abs(x * model.f_eval(x)))
            for x in grid
        )
        return _report(CheckName.FENCHEL_YOUNG, model, error, tol, len(grid))

    @staticmethod
    def tangent_duality(model: ConvexModel, tol: Optional[float] = None, points: int = 201) -> CheckReport:
        """Tangent intercept plus G(f(x)) must vanish."""
        tol = check_tolerance(CheckName.TANGENT.value) if tol is None else tol
        grid = CheckService.interior_grid(model, points)
        error = max(
            abs(
                TransformService.tangent_intercept(model, x)
                + TransformService.conjugate_point(model, model.f_eval(x)).G
            )
            for x in grid
        )
        return _report(CheckName.TANGENT, model, error, tol, len(grid))

    @staticmethod
    def shift_covariance(
        model: ConvexModel,
        tol: Optional[float] = None,
        shifts: Sequence[float] = DEFAULT_SHIFTS,
        points: int = 101,
    ) -> CheckReport:
        """
        (F + c)* = F* - c for each shift c, as a relative difference.

        The shifted model keeps the same f, so both conjugates are evaluated
        at the same x.
        """
        tol = check_tolerance(CheckName.SHIFT.value) if tol is None else tol
        grid = CheckService.interior_grid(model, points, conjugate_side=True)
        error = 0.0
        for c in shifts:
            shifted = ModelService.make_model(
                partial(_shifted, model.F_eval, c), model.f_eval, model.domain, name=f"{model.name}{c:+g}"
            )
            for y in grid:
                expected = TransformService.conjugate_point(model, y).G - c
                actual = TransformService.conjugate_point(shifted, y).G
                error = max(error, abs(actual - expected) / max(1.0, abs(expected)))
        return _report(CheckName.SHIFT, model, error, tol, len(grid) * len(shifts), shifts=list(shifts))

    @staticmethod
    def area(
        model: ConvexModel,
        box: Optional[Tuple[float, float]] = None,
        xs: Optional[Sequence[float]] = None,
        tol: Optional[float] = None,
        quadrature_tol: Optional[float] = None,
    ) -> CheckReport:
        """
        Area identity check in whichever mode applies.

        With a box the mixed-sign report is used. Without one the
        same-sign report is used, falling back to an anchor at the domain
        edge nearest the origin when the graph meets no axis. Generated
        points that leave the base point's same-sign quadrant are measured
        from the base point as an anchor instead.
        """
        if quadrature_tol is None:
            quadrature_tol = get_setting("QUADRATURE_TOL")
        if tol is None:
            tol = max(check_tolerance(CheckName.AREA.value), 10 * quadrature_tol)

        if box is not None:
            x0, y0 = box
            if xs is None:
                xs = [x0 * k / (AREA_POINTS + 1) for k in range(1, AREA_POINTS + 1)]
            report = AreaService.area_report_mixed(model, x0, y0, xs, quadrature_tol)
            mode = "mixed"
        else:
            try:
                x0, _ = AreaService.base_point(model)
                mode = "same-sign"
            except NoAxisIntersection:
                x0 = min(model.domain.as_list(), key=abs)
                mode = "anchored"
            if xs is None:
                xs = _default_area_points(model, x0)
                if mode == "same-sign" and not _one_same_sign_quadrant(model, xs):
                    logger.debug("Default area points for %s straddle quadrants; anchoring at x0 = %r", model, x0)
                    mode = "anchored"
            if mode == "same-sign":
                report = AreaService.area_report_same_sign(model, xs, quadrature_tol)
            else:
                report = AreaService.area_report_anchored(model, x0, xs, quadrature_tol)
        return _area_report(model, report, tol, mode)

    @staticmethod
    def oracle(model: ConvexModel, samples: int = 1601, grid: int = 33) -> CheckReport:
        """Discrete oracle comparison on the interior of f_range."""
        y_grid = CheckService.interior_grid(model, grid, conjugate_side=True)
        return OracleService.oracle_compare(model, samples, y_grid)

    @staticmethod
    def run_all(model: ConvexModel):
        """Every check with its default settings, in a fixed order."""
        return [
            CheckService.involution(model),
            CheckService.conjugate_derivative(model),
            CheckService.fenchel_young(model),
            CheckService.tangent_duality(model),
            CheckService.shift_covariance(model),
            CheckService.area(model),
            CheckService.oracle(model),
        ]


def _default_area_points(model: ConvexModel, x0: float):
    interior = model.domain.interior(get_setting("INTERIOR_FRACTION"))
    far_edge = interior.hi if interior.hi > x0 else interior.lo
    step = (far_edge - x0) / AREA_POINTS
    return [x0 + step * k for k in range(1, AREA_POINTS + 1)]


def _one_same_sign_quadrant(model: ConvexModel, xs: Sequence[float]) -> bool:
    cases = {QuadrantCase.classify(x, ModelService.derivative(model, x)) for x in xs}
    return len(cases) == 1 and next(iter(cases)).is_same_sign


def _report(name: CheckName, model: ConvexModel, error: float, tol: float, count: int, **extra) -> CheckReport:
    report = CheckReport(
        check_name=name.value,
        function=model.name,
        domain=model.domain,
        max_abs_error=error,
        tolerance=tol,
        points_evaluated=count,
        extra=extra,
    )
    logger.info("Check %s on %s: error %.3e, tolerance %.1e", name.value, model, error, tol)
    return report


def _area_report(model: ConvexModel, report: AreaReport, tol: float, mode: str) -> CheckReport:
    return _report(
        CheckName.AREA,
        model,
        report.max_abs_residual,
        tol,
        len(report.points),
        mode=mode,
        case=report.case.value,
        x0=report.x0,
        y0=report.y0,
        a0=report.A0,
        c=report.c,
        points=[point.as_dict() for point in report.points],
    )
