"""Area service: the rectangle-splitting picture of the transform.

For a graph point (x, y = f(x)) the rectangle spanned with the axes is cut
by the graph into F~ = integral of f and G~ = integral of g. The two areas
are integrated independently; G~ costs one root-find per integrand sample.
"""

import logging
from functools import partial
from typing import List, Optional, Sequence, Tuple

from conjugates.exceptions import (
    BoxViolation,
    ConjugateOutOfRange,
    EmptyPointSet,
    MixedSigns,
    NoAxisIntersection,
)
from conjugates.models import AreaPoint, AreaReport, ConvexModel, QuadrantCase
from conjugates.services.modeling import ModelService
from conjugates.services.quadrature import QuadratureService

logger = logging.getLogger(__name__)


class AreaService:
    """Service for area reports in every quadrant case."""

    @staticmethod
    def base_point(model: ConvexModel) -> Tuple[float, float]:
        """
        Find where the graph of f meets an axis at a non-negative coordinate.

        Returns (0, f(0)) when 0 is in the domain and f(0) >= 0, otherwise
        (x0, 0) for the zero x0 >= 0 of f.

        Raises:
            NoAxisIntersection: neither convention applies inside the domain
        """
        if model.domain.contains(0.0):
            y0 = model.f_eval(0.0)
            if y0 >= 0:
                return 0.0, y0
        if model.f_range.contains(0.0):
            x0 = ModelService.invert_derivative(model, 0.0)
            if x0 >= 0:
                return x0, 0.0
        raise NoAxisIntersection(
            f"the graph of f for {model} meets no axis at a non-negative coordinate; "
            f"use a mixed-sign box or an explicit anchor"
        )

    @staticmethod
    def area_report_same_sign(
        model: ConvexModel,
        xs: Sequence[float],
        tol: Optional[float] = None,
    ) -> AreaReport:
        """
        Split the rectangles under points in quadrant PP or NN.

        Args:
            model: Validated model
            xs: Points, all in the same same-sign quadrant
            tol: Quadrature tolerance

        Returns:
            AreaReport with residual F~ + G~ - x*y per point and c = F(x0)

        Raises:
            NoAxisIntersection: no base point exists
            MixedSigns: the points straddle quadrants
        """
        graph = _graph_points(model, xs)
        cases = {QuadrantCase.classify(x, y) for x, y in graph}
        if len(cases) != 1 or not next(iter(cases)).is_same_sign:
            raise MixedSigns(
                f"points fall in quadrants {sorted(case.value for case in cases)}; a same-sign report "
                f"needs all of them in PP or all in NN"
            )
        x0, y0 = AreaService.base_point(model)

        points = []
        for x, y in graph:
            F_tilde, G_tilde = _areas(model, x0, y0, x, y, tol)
            points.append(
                AreaPoint(x=x, y=y, F_tilde=F_tilde, G_tilde=G_tilde, residual=F_tilde + G_tilde - x * y)
            )
        report = AreaReport(
            case=cases.pop(),
            x0=x0,
            y0=y0,
            points=tuple(points),
            A0=None,
            c=model.F_eval(x0),
        )
        logger.info("Same-sign area report for %s: max residual %.3e", model, report.max_abs_residual)
        return report

    @staticmethod
    def area_report_mixed(
        model: ConvexModel,
        x0: float,
        y0: float,
        xs: Sequence[float],
        tol: Optional[float] = None,
    ) -> AreaReport:
        """
        Areas for points with x*y < 0 inside a caller-fixed box.

        PN boxes need x0 > x > 0 and y0 < f(x) < 0; NP boxes mirror every
        inequality. a(x) = -x*y + F~ + G~ is the same for every point and
        A0 is taken from the first one.

        Raises:
            BoxViolation: a corner or a point violates the box
            ConjugateOutOfRange: y0 is outside f_range
        """
        if not model.domain.contains(x0):
            raise BoxViolation(f"box corner x0 = {x0!r} is outside the domain of {model}")
        if not model.f_range.contains(y0):
            raise ConjugateOutOfRange(f"box corner y0 = {y0!r} is outside f_range {model.f_range}")
        if x0 > 0 and y0 < 0:
            case = QuadrantCase.PN
        elif x0 < 0 and y0 > 0:
            case = QuadrantCase.NP
        else:
            raise BoxViolation(f"box corner ({x0!r}, {y0!r}) must have x0*y0 < 0")

        graph = _graph_points(model, xs)
        for x, y in graph:
            if not _inside_box(case, x0, y0, x, y):
                raise BoxViolation(
                    f"point ({x!r}, {y!r}) is outside the {case.value} box "
                    f"with corner ({x0!r}, {y0!r})"
                )
        return _constant_area_report(model, case, x0, y0, graph, tol)

    @staticmethod
    def area_report_anchored(
        model: ConvexModel,
        x0: float,
        xs: Sequence[float],
        tol: Optional[float] = None,
    ) -> AreaReport:
        """
        Areas measured from an arbitrary graph point (x0, f(x0)).

        F~ + G~ - x*y is then the constant -x0*f(x0) for points in any
        quadrant, which A0 records (as -x*y + F~ + G~ from the first point).
        This covers models whose graph meets no axis inside the domain. The
        case tag classifies the anchor.

        Raises:
            OutOfDomain: x0 or a point is outside the domain
        """
        y0 = ModelService.derivative(model, x0)
        graph = _graph_points(model, xs)
        return _constant_area_report(model, QuadrantCase.classify(x0, y0), x0, y0, graph, tol)


def _graph_points(model: ConvexModel, xs: Sequence[float]) -> List[Tuple[float, float]]:
    if not xs:
        raise EmptyPointSet("an area report needs at least one point")
    return [(x, ModelService.derivative(model, x)) for x in xs]


def _inside_box(case: QuadrantCase, x0: float, y0: float, x: float, y: float) -> bool:
    if case == QuadrantCase.PN:
        return x0 > x > 0 and y0 < y < 0
    return x0 < x < 0 and y0 > y > 0


def _areas(
    model: ConvexModel,
    x0: float,
    y0: float,
    x: float,
    y: float,
    tol: Optional[float],
) -> Tuple[float, float]:
    """F~ = integral of f from x0 to x and G~ = integral of g from y0 to y."""
    if not model.f_range.contains(y0):
        raise ConjugateOutOfRange(f"y0 = {y0!r} is outside f_range {model.f_range}")
    F_tilde = QuadratureService.integrate(model.f_eval, x0, x, tol)
    G_tilde = QuadratureService.integrate(partial(ModelService.invert_derivative, model), y0, y, tol)
    return F_tilde, G_tilde


def _constant_area_report(
    model: ConvexModel,
    case: QuadrantCase,
    x0: float,
    y0: float,
    graph: List[Tuple[float, float]],
    tol: Optional[float],
) -> AreaReport:
    # F~ = -integral from x to x0, written as the integral from x0 to x.
    measured = []
    for x, y in graph:
        F_tilde, G_tilde = _areas(model, x0, y0, x, y, tol)
        measured.append((x, y, F_tilde, G_tilde, -x * y + F_tilde + G_tilde))

    A0 = measured[0][4]
    points = tuple(
        AreaPoint(x=x, y=y, F_tilde=F_tilde, G_tilde=G_tilde, residual=a - A0)
        for x, y, F_tilde, G_tilde, a in measured
    )
    report = AreaReport(case=case, x0=x0, y0=y0, points=points, A0=A0, c=model.F_eval(x0))
    logger.info("Constant-area report for %s: A0 = %.17g, max deviation %.3e", model, A0, report.max_abs_residual)
    return report
