"""Transform service: the Legendre transform and its dual readings."""

import logging
from functools import partial

from conjugates.models import ConjugatePoint, ConvexModel
from conjugates.services.modeling import ModelService

logger = logging.getLogger(__name__)


def _conjugate_value(model: ConvexModel, y: float) -> float:
    return TransformService.conjugate_point(model, y).G


class TransformService:
    """Service for evaluating and composing Legendre transforms."""

    @staticmethod
    def conjugate_point(model: ConvexModel, y: float) -> ConjugatePoint:
        """
        Evaluate G(y) = x*y - F(x) at x = g(y).

        Raises:
            ConjugateOutOfRange: y is outside the model's f_range
        """
        x = ModelService.invert_derivative(model, y)
        return ConjugatePoint(y=y, x=x, G=x * y - model.F_eval(x))

    @staticmethod
    def conjugate_model(model: ConvexModel) -> ConvexModel:
        """
        Build the transform G as a model on the domain f_range.

        G' is supplied as g = invert_derivative rather than differenced, so
        the result validates like any analytic-derivative model.
        """
        conjugate = ModelService.make_model(
            partial(_conjugate_value, model),
            partial(ModelService.invert_derivative, model),
            model.f_range,
            name=f"{model.name or 'F'}*",
        )
        logger.debug("Built conjugate %s", conjugate)
        return conjugate

    @staticmethod
    def double_transform(model: ConvexModel) -> ConvexModel:
        """Apply the transform twice; the result is F again on its domain."""
        return TransformService.conjugate_model(TransformService.conjugate_model(model))

    @staticmethod
    def fenchel_young_residual(model: ConvexModel, x: float) -> float:
        """
        Return |F(x) + G(f(x)) - x*f(x)|, the gap in Young's equality case.

        Raises:
            OutOfDomain: x is outside the domain
        """
        y = ModelService.derivative(model, x)
        G = TransformService.conjugate_point(model, y).G
        return abs(model.F_eval(x) + G - x * y)

    @staticmethod
    def tangent_intercept(model: ConvexModel, x: float) -> float:
        """
        Return F(x) - x*f(x), where the tangent at x crosses the vertical axis.

        Raises:
            OutOfDomain: x is outside the domain
        """
        y = ModelService.derivative(model, x)
        return model.F_eval(x) - x * y
